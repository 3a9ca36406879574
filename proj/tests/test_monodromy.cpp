#include <gtest/gtest.h>

#include "phimod/error.hpp"
#include "phimod/generator.hpp"
#include "phimod/monodromy.hpp"
#include "support.hpp"

using namespace phimod;
using phimod::test::q;
using phimod::test::tv;

namespace {

ErrorKind build_error(const FrobeniusData& fro, const std::map<Position, Scalar>& e) {
  try {
    build_monodromy(fro, e);
  } catch (const Error& err) {
    return err.kind();
  }
  return ErrorKind::Internal;
}

std::vector<std::string> names(const std::vector<EligiblePosition>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(to_string(e.pos));
  return out;
}

}  // namespace

TEST(SolveEntry, Examples) {
  EXPECT_EQ(solve_entry(tv({"5"}), tv({"5"}), q("7")), tv({"7"}));
  const TauVector alpha = tv({"2", "3"}), beta = tv({"3", "2"});
  const TauVector g = solve_entry(alpha, beta, q("1"));
  EXPECT_EQ(g, tv({"1", "2/3"}));
  EXPECT_EQ(alpha * g, tv({"2", "2"}));
  EXPECT_EQ(beta * frobenius_shift(g), tv({"2", "2"}));
  EXPECT_EQ(solve_entry(alpha, beta, q("0")), TauVector::zero(2));
  try {
    solve_entry(alpha, tv({"1", "1"}), q("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoNonzeroSolution);
  }
}

TEST(SolveEntry, SolutionSpaceIsOneDimensional) {
  Rng rng(41);
  for (int it = 0; it < 100; ++it) {
    const std::size_t f = 1 + rng.below(4);
    std::vector<Scalar> a, b;
    for (std::size_t i = 0; i < f; ++i) a.push_back(rng.small_nonzero());
    b = a;
    // Same norm, different coordinates.
    for (std::size_t i = 0; i + 1 < f; ++i) {
      const Scalar t = rng.small_nonzero();
      b[i] *= t;
      b[i + 1] /= t;
    }
    const TauVector alpha(a), beta(b);
    const TauVector base = solve_entry(alpha, beta, Scalar(1));
    for (int k = 0; k < 5; ++k) {
      const Scalar g0 = rng.small_param();
      const TauVector g = solve_entry(alpha, beta, g0);
      EXPECT_EQ(alpha * g, beta * frobenius_shift(g));
      EXPECT_EQ(g, base * g0);
    }
    // Any solution is determined by its first coordinate: the defining
    // equation at i forces g(i+1) = g(i) alpha(i) / beta(i).
    std::vector<Scalar> guess(f);
    guess[0] = rng.small_nonzero();
    for (std::size_t i = 0; i + 1 < f; ++i) guess[i + 1] = rng.small_nonzero();
    const TauVector g(guess);
    if (alpha * g == beta * frobenius_shift(g)) EXPECT_EQ(g, base * guess[0]);
  }
}

TEST(AdmissiblePositions, Examples) {
  EXPECT_EQ(names(admissible_positions(FrobeniusData(3, tv({"1"}), tv({"3"}), tv({"9"})))),
            (std::vector<std::string>{"12", "23"}));
  EXPECT_TRUE(admissible_positions(FrobeniusData(3, tv({"1"}), tv({"2"}), tv({"5"}))).empty());
  EXPECT_EQ(names(admissible_positions(
                FrobeniusData(3, tv({"1", "1"}), tv({"3", "3"}), tv({"27", "3"})))),
            (std::vector<std::string>{"12", "23"}));
  EXPECT_EQ(names(admissible_positions(FrobeniusData(5, tv({"25"}), tv({"5"}), tv({"1"})))),
            (std::vector<std::string>{"21", "32"}));
}

TEST(BuildMonodromy, Examples) {
  const FrobeniusData f1(3, tv({"1"}), tv({"3"}), tv({"7"}));
  const TauMatrix a = build_monodromy(f1, {{{1, 2}, q("2")}});
  EXPECT_EQ(a(0, 1), tv({"2"}));
  EXPECT_TRUE(validate_monodromy(f1, a).valid);

  const FrobeniusData f2(3, tv({"1", "1"}), tv({"3", "3"}), tv({"5", "1"}));
  const TauMatrix b = build_monodromy(f2, {{{1, 2}, q("1")}});
  EXPECT_EQ(b(0, 1), tv({"1", "1"}));
  EXPECT_TRUE(validate_monodromy(f2, b).valid);
}

TEST(BuildMonodromy, Errors) {
  const FrobeniusData fro(3, tv({"1"}), tv({"3"}), tv({"9"}));
  EXPECT_EQ(build_error(fro, {{{1, 2}, q("1")}, {{2, 1}, q("1")}}), ErrorKind::ShapeViolation);
  EXPECT_EQ(build_error(fro, {{{1, 2}, q("1")}, {{1, 3}, q("1")}}), ErrorKind::ShapeViolation);
  EXPECT_EQ(build_error(fro, {{{1, 2}, q("1")}, {{2, 3}, q("1")}, {{3, 1}, q("1")}}),
            ErrorKind::ShapeViolation);
  EXPECT_EQ(build_error(fro, {{{3, 1}, q("1")}}), ErrorKind::IneligiblePosition);
  EXPECT_EQ(build_error(fro, {{{1, 3}, q("1")}}), ErrorKind::IneligiblePosition);
  // Zero scalars are dropped rather than checked.
  EXPECT_NO_THROW(build_monodromy(fro, {{{3, 1}, q("0")}}));
}

TEST(ParsePosition, Strict) {
  EXPECT_EQ(parse_position("23"), (Position{2, 3}));
  for (const char* bad : {"11", "4", "14", "1-2", ""}) EXPECT_THROW(parse_position(bad), Error);
}

TEST(ValidateMonodromy, ZeroAndBadMatrices) {
  const FrobeniusData fro(3, tv({"1", "1"}), tv({"3", "3"}), tv({"27", "3"}));
  EXPECT_TRUE(validate_monodromy(fro, TauMatrix(2)).valid);
  TauMatrix a = build_monodromy(fro, {{{1, 2}, q("2")}, {{2, 3}, q("-1")}});
  EXPECT_TRUE(validate_monodromy(fro, a).valid);
  EXPECT_FALSE(a * a == TauMatrix(2));
  EXPECT_TRUE(a * a * a == TauMatrix(2));

  TauMatrix perturbed = a;
  perturbed(0, 1)[1] += 1;
  EXPECT_FALSE(validate_monodromy(fro, perturbed).valid);

  TauMatrix diag = a;
  diag(1, 1) = tv({"1", "1"});
  EXPECT_FALSE(validate_monodromy(fro, diag).valid);

  TauMatrix half = TauMatrix(2);
  half(0, 1) = tv({"1", "0"});
  const auto check = validate_monodromy(fro, half);
  EXPECT_FALSE(check.valid);
  EXPECT_FALSE(check.reasons.empty());
}

TEST(BuildMonodromy, RandomEligibleConfigs) {
  GeneratorConfig cfg;
  cfg.seed = 43;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::stream(cfg.seed, i);
    const auto c = random_monodromy_config(rng, cfg);
    const TauMatrix a = build_monodromy(c.frobenius, c.entries);
    const auto check = validate_monodromy(c.frobenius, a);
    EXPECT_TRUE(check.valid) << (check.reasons.empty() ? "" : check.reasons.front());
    const auto eligible = admissible_positions(c.frobenius);
    for (const auto& e : eligible)
      for (const auto& g : eligible) EXPECT_FALSE(e.pos.row == g.pos.col && e.pos.col == g.pos.row);
  }
}
