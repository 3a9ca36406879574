#include <gtest/gtest.h>

#include "phimod/error.hpp"
#include "phimod/generator.hpp"
#include "phimod/isomorphism.hpp"
#include "support.hpp"

using namespace phimod;
using phimod::test::q;
using phimod::test::tv;

namespace {

PhiModule f1(const char* a, const char* b, const char* c, EmbeddingFiltration filt) {
  return PhiModule(FrobeniusData(3, tv({a}), tv({b}), tv({c})), {std::move(filt)});
}

F0 all_ones(const char* x1) { return F0{1, 2, q(x1), true, true}; }

}  // namespace

TEST(Isomorphism, Reflexive) {
  GeneratorConfig cfg;
  cfg.seed = 17;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const PhiModule m = generate_indexed(cfg, i);
    const auto d = are_isomorphic(m, m);
    ASSERT_TRUE(d.isomorphic);
    EXPECT_EQ(case_number(*d.sigma), 1);
    EXPECT_TRUE(oracle_isomorphic(m, m));
    const auto w = find_witness(m, m);
    ASSERT_TRUE(w);
    EXPECT_TRUE(validate_witness(m, m, *w));
    for (const auto& h : w->h) EXPECT_EQ(h, TauVector::ones(m.f()));
  }
}

TEST(Isomorphism, Case1EqualParameters) {
  const PhiModule m1 = f1("2", "5", "7", all_ones("5"));
  const PhiModule m2 = f1("2", "5", "7", all_ones("5"));
  const auto d = are_isomorphic(m1, m2);
  ASSERT_TRUE(d.isomorphic);
  EXPECT_EQ(d.per_embedding_case, std::vector<std::string>{"1(a)(i)"});
  EXPECT_TRUE(oracle_isomorphic(m1, m2));
  const auto w = find_witness(m1, m2);
  EXPECT_EQ(w->h[0], w->h[1]);
  EXPECT_EQ(w->h[1], w->h[2]);
}

TEST(Isomorphism, Case1DifferentX1IsNotIsomorphic) {
  const PhiModule m1 = f1("2", "5", "7", all_ones("5"));
  const PhiModule m2 = f1("2", "5", "7", all_ones("7"));
  const auto d = are_isomorphic(m1, m2);
  EXPECT_FALSE(d.isomorphic);
  EXPECT_EQ(d.norm_matching_cases, std::vector<int>{1});
  EXPECT_FALSE(oracle_isomorphic(m1, m2));
  EXPECT_FALSE(find_witness(m1, m2));
}

TEST(Isomorphism, Case5ProductRelation) {
  // Nm(a) = Nm(c1), Nm(b) = Nm(b1), Nm(c) = Nm(a1); (1 + 1)(1 - 1/2) = 1.
  const PhiModule m1 = f1("2", "5", "7", all_ones("1"));
  const PhiModule m2 = f1("7", "5", "2", all_ones("-1/2"));
  const auto d = are_isomorphic(m1, m2);
  ASSERT_TRUE(d.isomorphic);
  EXPECT_EQ(case_number(*d.sigma), 5);
  EXPECT_EQ(d.per_embedding_case, std::vector<std::string>{"5(a)(i)"});
  EXPECT_TRUE(oracle_isomorphic(m1, m2));
  EXPECT_TRUE(validate_witness(m1, m2, *find_witness(m1, m2)));
  EXPECT_FALSE(are_isomorphic(m1, f1("7", "5", "2", all_ones("-1/3"))).isomorphic);
}

TEST(Isomorphism, SwapCaseWitnessRatio) {
  const PhiModule m1 = f1("2", "5", "7", F0{1, 2, q("2"), false, false});
  const PhiModule m2 = f1("5", "2", "7", F0{1, 2, q("3"), false, false});
  const auto d = are_isomorphic(m1, m2);
  ASSERT_TRUE(d.isomorphic);
  EXPECT_EQ(case_number(*d.sigma), 2);
  const auto w = find_witness(m1, m2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->h[0][0], 6 * w->h[1][0]);
  EXPECT_TRUE(validate_witness(m1, m2, *w));
  EXPECT_TRUE(oracle_isomorphic(m1, m2));
}

TEST(Isomorphism, SwapCaseAllOnesBranch) {
  // x1 y1 = 1 with all bits set: e0 <-> e1 swap.
  const PhiModule m1 = f1("2", "5", "7", all_ones("2"));
  const PhiModule m2 = f1("5", "2", "7", all_ones("1/2"));
  EXPECT_TRUE(oracle_isomorphic(m1, m2));
  const auto d = are_isomorphic(m1, m2);
  ASSERT_TRUE(d.isomorphic);
  EXPECT_EQ(d.per_embedding_case, std::vector<std::string>{"2(a)(iv)"});
}

TEST(Isomorphism, TypeOrWeightMismatch) {
  const PhiModule m1 = f1("2", "5", "7", F1{2, true, true});
  EXPECT_FALSE(are_isomorphic(m1, f1("2", "5", "7", F1{3, true, true})).isomorphic);
  EXPECT_FALSE(are_isomorphic(m1, f1("2", "5", "7", F2{2, true, true})).isomorphic);
  EXPECT_FALSE(oracle_isomorphic(m1, f1("2", "5", "7", F1{3, true, true})));
}

TEST(Isomorphism, CouplingAcrossEmbeddings) {
  // Both embeddings individually satisfy 1(a)(ii) with h0 = x1/y1 h1, but the
  // Frobenius recurrence ties h(1) to h(0); only matching ratios survive.
  FrobeniusData fro(3, tv({"1", "1"}), tv({"2", "1"}), tv({"4", "1"}));
  const PhiModule m1(fro, {F0{1, 2, q("1"), false, true}, F0{1, 2, q("1"), false, true}});
  const PhiModule m2(fro, {F0{1, 2, q("2"), false, true}, F0{1, 2, q("3"), false, true}});
  const PhiModule m3(fro, {F0{1, 2, q("2"), false, true}, F0{1, 2, q("2"), false, true}});
  EXPECT_FALSE(oracle_isomorphic(m1, m2));
  EXPECT_FALSE(are_isomorphic(m1, m2).isomorphic);
  EXPECT_TRUE(oracle_isomorphic(m1, m3));
  EXPECT_TRUE(are_isomorphic(m1, m3).isomorphic);
}

TEST(Isomorphism, StructuralMismatch) {
  const PhiModule m1 = f1("2", "5", "7", F3{});
  const PhiModule m2(FrobeniusData(5, tv({"2"}), tv({"5"}), tv({"7"})), {F3{}});
  EXPECT_THROW(are_isomorphic(m1, m2), Error);
  try {
    oracle_isomorphic(m1, m2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StructuralMismatch);
  }
}

TEST(Isomorphism, ConstructedPairsAndInvariants) {
  GeneratorConfig cfg;
  cfg.seed = 23;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::stream(cfg.seed, i);
    const auto [m1, m2] = constructed_iso_pair(rng, cfg);
    const auto d = are_isomorphic(m1, m2);
    ASSERT_TRUE(d.isomorphic) << "pair " << i;
    EXPECT_TRUE(oracle_isomorphic(m1, m2));
    EXPECT_TRUE(are_isomorphic(m2, m1).isomorphic);
    EXPECT_TRUE(validate_witness(m1, m2, *find_witness(m1, m2)));
    for (std::size_t e = 0; e < m1.f(); ++e) EXPECT_EQ(weights(m1, e), weights(m2, e));
    std::multiset<Scalar> n1, n2;
    for (std::size_t s = 0; s < 3; ++s) {
      n1.insert(m1.frobenius().eigen_norm(s));
      n2.insert(m2.frobenius().eigen_norm(s));
    }
    EXPECT_EQ(n1, n2);
  }
}

TEST(Isomorphism, RandomPairsAgreeWithOracle) {
  GeneratorConfig cfg;
  cfg.seed = 29;
  int yes = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = Rng::stream(cfg.seed, i);
    const auto [m1, m2] = random_pair(rng, cfg);
    const auto d = are_isomorphic(m1, m2);
    EXPECT_EQ(d.isomorphic, oracle_isomorphic(m1, m2)) << "pair " << i;
    if (d.isomorphic) {
      ++yes;
      EXPECT_TRUE(validate_witness(m1, m2, *find_witness(m1, m2)));
    }
  }
  EXPECT_GT(yes, 10);
  EXPECT_LT(yes, 290);
}

TEST(Isomorphism, Transitivity) {
  GeneratorConfig cfg;
  cfg.seed = 31;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::stream(cfg.seed, i);
    const auto [m1, m2] = constructed_iso_pair(rng, cfg);
    const auto w = random_witness(rng, m2.f());
    const auto m3 = transport(m2, w);
    if (!m3) continue;
    EXPECT_TRUE(are_isomorphic(m2, *m3).isomorphic);
    EXPECT_TRUE(are_isomorphic(m1, *m3).isomorphic);
  }
}
