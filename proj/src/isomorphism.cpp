#include "phimod/isomorphism.hpp"

#include <map>

#include "phimod/error.hpp"
#include "phimod/linalg.hpp"
#include "phimod/normalform.hpp"

namespace phimod {

namespace {

bool nz(const Scalar& s) { return !is_zero(s); }

HRelation rel(std::size_t u, std::size_t v, Scalar kappa = Scalar(1)) {
  return {u, v, std::move(kappa)};
}

using Rels = std::vector<HRelation>;

std::optional<LocalMatch> match(std::string label, Rels rels) {
  return LocalMatch{std::move(label), std::move(rels)};
}

// ---- F0 ----------------------------------------------------------------

std::optional<LocalMatch> case_f0(int c, const F0& x, const F0& y) {
  const bool xb = x.x2 && x.x2p, yb = y.x2 && y.x2p;
  switch (c) {
    case 1: {
      if (xb && yb && x.x1 == y.x1) return match("1(a)(i)", {rel(0, 2), rel(1, 2)});
      if (nz(x.x1) != nz(y.x1)) return std::nullopt;
      if (!x.x2 && !y.x2 && x.x2p && y.x2p) {
        Rels r{rel(1, 2)};
        if (nz(x.x1)) r.push_back(rel(0, 1, x.x1 / y.x1));
        return match("1(a)(ii)", r);
      }
      if (!x.x2p && !y.x2p && x.x2 == y.x2) {
        Rels r;
        if (x.x2) r.push_back(rel(0, 2));
        if (nz(x.x1)) r.push_back(rel(0, 1, x.x1 / y.x1));
        return match("1(a)(iii)", r);
      }
      return std::nullopt;
    }
    case 2: {
      if (!x.x2 && !x.x2p && !y.x2 && !y.x2p && nz(x.x1) && nz(y.x1))
        return match("2(a)(i)", {rel(0, 1, x.x1 * y.x1)});
      if (x.x2 && !x.x2p && !y.x2 && y.x2p && nz(x.x1) && nz(y.x1))
        return match("2(a)(ii)", {rel(0, 2), rel(0, 1, x.x1 * y.x1)});
      if (!x.x2 && x.x2p && y.x2 && !y.x2p && nz(x.x1) && nz(y.x1))
        return match("2(a)(iii)", {rel(1, 2), rel(0, 1, x.x1 * y.x1)});
      if (xb && yb && x.x1 * y.x1 == 1) return match("2(a)(iv)", {rel(0, 2), rel(1, 2)});
      return std::nullopt;
    }
    case 3: {
      if (!x.x2p && !y.x2 && x.x2 && y.x2p && nz(x.x1) && nz(y.x1))
        return match("3(a)(i)", {rel(0, 2), rel(2, 1, x.x1 * y.x1)});
      if (xb && yb && x.x1 * y.x1 + x.x1 + 1 == 0)
        return match("3(a)(ii)", {rel(0, 2), rel(1, 2, Scalar(-1))});
      return std::nullopt;
    }
    case 4: {
      if (xb && yb && x.x1 + y.x1 + 1 == 0)
        return match("4(a)(i)", {rel(1, 2), rel(0, 2, Scalar(-1))});
      if (!x.x2 && !y.x2 && x.x2p && y.x2p && nz(x.x1) == nz(y.x1)) {
        Rels r{rel(1, 2)};
        if (nz(x.x1)) r.push_back(rel(0, 2, x.x1 / y.x1));
        return match("4(a)(ii)", r);
      }
      return std::nullopt;
    }
    case 5: {
      if (!x.x2 || !y.x2) return std::nullopt;
      if (x.x2p && y.x2p && (1 + x.x1) * (1 + y.x1) == 1)
        return match(nz(x.x1) ? "5(a)(i)" : "5(a)(ii)", {rel(0, 2), rel(1, 2, Scalar(-1))});
      if (!x.x2p && !y.x2p) {
        if (!nz(x.x1) && !nz(y.x1)) return match("5(a)(iii)", {rel(0, 2)});
        if (nz(x.x1) && nz(y.x1))
          return match("5(a)(iv)", {rel(0, 2), rel(1, 2, y.x1 / x.x1)});
      }
      return std::nullopt;
    }
    case 6: {
      if (!x.x2p || !y.x2) return std::nullopt;
      if (x.x2 && y.x2p && y.x1 * (x.x1 + 1) + 1 == 0)
        return match("6(a)(i)", {rel(1, 2), rel(0, 2, Scalar(-1))});
      if (!x.x2 && !y.x2p && nz(x.x1) && nz(y.x1))
        return match("6(a)(ii)", {rel(1, 2), rel(0, 2, x.x1 * y.x1)});
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---- F1 ----------------------------------------------------------------

std::optional<LocalMatch> case_f1(int c, const F1& x, const F1& y) {
  Rels r;
  switch (c) {
    case 1:
      if (x.x2 != y.x2 || x.x2p != y.x2p) return std::nullopt;
      if (x.x2) r.push_back(rel(0, 2));
      if (x.x2p) r.push_back(rel(1, 2));
      return match("1(b)", r);
    case 2:
      if (x.x2 != y.x2p || x.x2p != y.x2) return std::nullopt;
      if (x.x2) r.push_back(rel(0, 2));
      if (x.x2p) r.push_back(rel(1, 2));
      return match("2(b)", r);
    case 3:
      if (!x.x2 || !y.x2p || x.x2p != y.x2) return std::nullopt;
      r.push_back(rel(0, 2));
      if (x.x2p) r.push_back(rel(1, 2, Scalar(-1)));
      return match("3(b)", r);
    case 4:
      if (!x.x2p || !y.x2p || x.x2 != y.x2) return std::nullopt;
      r.push_back(rel(1, 2));
      if (x.x2) r.push_back(rel(0, 2, Scalar(-1)));
      return match("4(b)", r);
    case 5:
      if (!x.x2 || !y.x2 || x.x2p != y.x2p) return std::nullopt;
      r.push_back(rel(0, 2));
      if (x.x2p) r.push_back(rel(1, 2, Scalar(-1)));
      return match("5(b)", r);
    case 6:
      if (!x.x2p || !y.x2 || y.x2p != x.x2) return std::nullopt;
      r.push_back(rel(1, 2));
      if (x.x2) r.push_back(rel(0, 2, Scalar(-1)));
      return match("6(b)", r);
  }
  return std::nullopt;
}

// ---- F2 ----------------------------------------------------------------

std::optional<LocalMatch> case_f2(int c, const F2& x, const F2& y) {
  Rels r;
  switch (c) {
    case 1:
      if (x.x1 != y.x1 || x.x2pp != y.x2pp) return std::nullopt;
      if (x.x1) r.push_back(rel(0, 1));
      if (x.x2pp) r.push_back(rel(0, 2));
      return match("1(c)", r);
    case 2:
      if (!x.x1 || !y.x1 || x.x2pp != y.x2pp) return std::nullopt;
      r.push_back(rel(0, 1));
      if (x.x2pp) r.push_back(rel(2, 1));
      return match("2(c)", r);
    case 3:
      if (!x.x1 || !y.x2pp || x.x2pp != y.x1) return std::nullopt;
      r.push_back(rel(0, 1));
      if (x.x2pp) r.push_back(rel(2, 1));
      return match("3(c)", r);
    case 4:
      if (x.x2pp != y.x1 || x.x1 != y.x2pp) return std::nullopt;
      if (x.x2pp) r.push_back(rel(2, 0));
      if (x.x1) r.push_back(rel(1, 0));
      return match("4(c)", r);
    case 5:
      if (!x.x2pp || !y.x2pp || x.x1 != y.x1) return std::nullopt;
      r.push_back(rel(0, 2));
      if (x.x1) r.push_back(rel(1, 2));
      return match("5(c)", r);
    case 6:
      if (!x.x2pp || !y.x1 || x.x1 != y.x2pp) return std::nullopt;
      r.push_back(rel(0, 2));
      if (x.x1) r.push_back(rel(1, 2));
      return match("6(c)", r);
  }
  return std::nullopt;
}

// r_j(i): the recurrence part of h_j, normalized by r_j(0) = 1.
std::array<std::vector<Scalar>, 3> recurrence(const FrobeniusData& left,
                                              const FrobeniusData& right,
                                              const EigenPermutation& sigma) {
  const std::size_t f = left.f();
  std::array<std::vector<Scalar>, 3> r;
  for (std::size_t j = 0; j < 3; ++j) {
    r[j].resize(f);
    r[j][0] = 1;
    for (std::size_t i = 0; i + 1 < f; ++i)
      r[j][i + 1] = r[j][i] * left.eigen(j)[i] / right.eigen(sigma.image[j])[i];
  }
  return r;
}

// Weighted union-find over gamma_0..2: gamma_x = ratio[x] * gamma_root(x).
class RatioForest {
 public:
  RatioForest() : parent_{0, 1, 2}, ratio_{Scalar(1), Scalar(1), Scalar(1)} {}

  std::pair<std::size_t, Scalar> find(std::size_t x) const {
    Scalar acc(1);
    while (parent_[x] != x) {
      acc *= ratio_[x];
      x = parent_[x];
    }
    return {x, acc};
  }

  // Impose gamma_u = k * gamma_v; false on contradiction.
  bool unite(std::size_t u, std::size_t v, const Scalar& k) {
    auto [ru, cu] = find(u);
    auto [rv, cv] = find(v);
    // cu * gamma_ru = k * cv * gamma_rv
    if (ru == rv) return cu == k * cv;
    parent_[ru] = rv;
    ratio_[ru] = k * cv / cu;
    return true;
  }

 private:
  std::array<std::size_t, 3> parent_;
  std::array<Scalar, 3> ratio_;
};

struct SigmaAttempt {
  bool ok = false;
  std::vector<std::string> labels;
  RatioForest forest;
};

SigmaAttempt try_sigma(const PhiModule& m1, const PhiModule& m2, int case_no) {
  SigmaAttempt out;
  const auto& sigma = iso_cases()[case_no - 1];
  const auto r = recurrence(m1.frobenius(), m2.frobenius(), sigma);
  for (std::size_t i = 0; i < m1.f(); ++i) {
    auto local = local_case(case_no, m1.filtration(i), m2.filtration(i));
    if (!local) return out;
    for (const auto& h : local->relations) {
      // gamma_u r_u = kappa gamma_v r_v
      if (!out.forest.unite(h.u, h.v, h.kappa * r[h.v][i] / r[h.u][i])) return out;
    }
    out.labels.push_back(std::move(local->label));
  }
  out.ok = true;
  return out;
}

void require_same_shape(const PhiModule& m1, const PhiModule& m2) {
  if (m1.p() != m2.p())
    throw Error(ErrorKind::StructuralMismatch, "modules have different p (" +
                                                   std::to_string(m1.p()) + " vs " +
                                                   std::to_string(m2.p()) + ")");
  if (m1.f() != m2.f())
    throw Error(ErrorKind::StructuralMismatch, "modules have different f (" +
                                                   std::to_string(m1.f()) + " vs " +
                                                   std::to_string(m2.f()) + ")");
}

// Matrix of H at embedding i acting on coordinate vectors.
linalg::Vec3 apply(const IsoWitness& w, std::size_t i, const linalg::Vec3& g) {
  linalg::Vec3 out{Scalar(0), Scalar(0), Scalar(0)};
  for (std::size_t j = 0; j < 3; ++j) out[w.sigma.image[j]] += w.h[j][i] * g[j];
  return out;
}

std::vector<int> merged_jumps(const std::vector<FilStep>& a, const std::vector<FilStep>& b) {
  std::vector<int> js = jump_set(a);
  for (int j : jump_set(b)) js.push_back(j);
  return js;
}

}  // namespace

const std::array<EigenPermutation, 6>& iso_cases() {
  static const std::array<EigenPermutation, 6> cases = {{
      {{0, 1, 2}},
      {{1, 0, 2}},
      {{2, 0, 1}},
      {{0, 2, 1}},
      {{2, 1, 0}},
      {{1, 2, 0}},
  }};
  return cases;
}

int case_number(const EigenPermutation& sigma) {
  const auto& cases = iso_cases();
  for (std::size_t k = 0; k < cases.size(); ++k)
    if (cases[k] == sigma) return static_cast<int>(k) + 1;
  throw Error(ErrorKind::InvalidArgument, "not a permutation of {0,1,2}");
}

std::string to_string(const EigenPermutation& sigma) {
  return "[" + std::to_string(sigma.image[0]) + "," + std::to_string(sigma.image[1]) + "," +
         std::to_string(sigma.image[2]) + "]";
}

bool norms_match(const FrobeniusData& left, const FrobeniusData& right,
                 const EigenPermutation& sigma) {
  for (std::size_t j = 0; j < 3; ++j)
    if (left.eigen_norm(j) != right.eigen_norm(sigma.image[j])) return false;
  return true;
}

std::optional<LocalMatch> local_case(int case_no, const EmbeddingFiltration& x,
                                     const EmbeddingFiltration& y) {
  if (case_no < 1 || case_no > 6)
    throw Error(ErrorKind::InvalidArgument, "case number must be 1..6");
  if (x.index() != y.index()) return std::nullopt;
  const std::string prefix = std::to_string(case_no);
  if (const auto* a = std::get_if<F0>(&x)) {
    const auto& b = std::get<F0>(y);
    if (a->k1 != b.k1 || a->k2 != b.k2) return std::nullopt;
    return case_f0(case_no, *a, b);
  }
  if (const auto* a = std::get_if<F1>(&x)) {
    const auto& b = std::get<F1>(y);
    if (a->k != b.k) return std::nullopt;
    return case_f1(case_no, *a, b);
  }
  if (const auto* a = std::get_if<F2>(&x)) {
    const auto& b = std::get<F2>(y);
    if (a->k != b.k) return std::nullopt;
    return case_f2(case_no, *a, b);
  }
  return match(prefix + "(trivial)", {});
}

IsoDecision are_isomorphic(const PhiModule& m1, const PhiModule& m2) {
  require_same_shape(m1, m2);
  IsoDecision d;
  for (int c = 1; c <= 6; ++c) {
    const auto& sigma = iso_cases()[c - 1];
    if (!norms_match(m1.frobenius(), m2.frobenius(), sigma)) continue;
    d.norm_matching_cases.push_back(c);
    if (d.isomorphic) continue;
    auto attempt = try_sigma(m1, m2, c);
    if (attempt.ok) {
      d.isomorphic = true;
      d.sigma = sigma;
      d.per_embedding_case = std::move(attempt.labels);
    }
  }
  return d;
}

bool oracle_isomorphic(const PhiModule& m1, const PhiModule& m2) {
  require_same_shape(m1, m2);
  const std::size_t f = m1.f();
  for (std::size_t i = 0; i < f; ++i) {
    const auto a = filtration_subspaces(m1, i);
    const auto b = filtration_subspaces(m2, i);
    for (int j : merged_jumps(a, b))
      if (linalg::rank(std::span<const linalg::Vec3>(fil_at(a, j))) !=
          linalg::rank(std::span<const linalg::Vec3>(fil_at(b, j))))
        return false;
  }
  for (const auto& sigma : iso_cases()) {
    if (!norms_match(m1.frobenius(), m2.frobenius(), sigma)) continue;
    const auto r = recurrence(m1.frobenius(), m2.frobenius(), sigma);
    std::vector<linalg::Row> rows;
    for (std::size_t i = 0; i < f; ++i) {
      const auto a = filtration_subspaces(m1, i);
      const auto b = filtration_subspaces(m2, i);
      for (int j : merged_jumps(a, b)) {
        const auto& target = fil_at(b, j);
        for (const auto& n : linalg::annihilator(target)) {
          for (const auto& g : fil_at(a, j)) {
            linalg::Row row(3);
            for (std::size_t k = 0; k < 3; ++k) row[k] = n[sigma.image[k]] * g[k] * r[k][i];
            rows.push_back(std::move(row));
          }
        }
      }
    }
    const auto basis = linalg::nullspace(rows, 3);
    bool feasible = !basis.empty();
    for (std::size_t k = 0; k < 3 && feasible; ++k) {
      bool some = false;
      for (const auto& b : basis) some |= !is_zero(b[k]);
      feasible = some;
    }
    if (feasible) return true;
  }
  return false;
}

std::optional<IsoWitness> find_witness(const PhiModule& m1, const PhiModule& m2) {
  const auto d = are_isomorphic(m1, m2);
  if (!d.isomorphic) return std::nullopt;
  const int c = case_number(*d.sigma);
  auto attempt = try_sigma(m1, m2, c);
  if (!attempt.ok) throw Error(ErrorKind::Internal, "decision and witness disagree");
  const auto r = recurrence(m1.frobenius(), m2.frobenius(), *d.sigma);
  IsoWitness w{*d.sigma, {}};
  for (std::size_t j = 0; j < 3; ++j) {
    const Scalar gamma = attempt.forest.find(j).second;
    std::vector<Scalar> coords(m1.f());
    for (std::size_t i = 0; i < m1.f(); ++i) coords[i] = gamma * r[j][i];
    w.h[j] = TauVector(std::move(coords));
  }
  if (!validate_witness(m1, m2, w))
    throw Error(ErrorKind::Internal, "constructed witness fails validation");
  return w;
}

TauMatrix witness_matrix(const IsoWitness& w) {
  const std::size_t f = w.h[0].size();
  TauMatrix h(f);
  for (std::size_t j = 0; j < 3; ++j) h(w.sigma.image[j], j) = w.h[j];
  return h;
}

bool validate_witness(const PhiModule& m1, const PhiModule& m2, const IsoWitness& w) {
  const std::size_t f = m1.f();
  if (m2.f() != f) return false;
  for (const auto& h : w.h)
    if (h.size() != f || !h.all_nonzero()) return false;
  const TauMatrix h = witness_matrix(w);
  if (h * m1.frobenius().matrix() != m2.frobenius().matrix() * frobenius_shift(h)) return false;
  for (std::size_t i = 0; i < f; ++i) {
    const auto a = filtration_subspaces(m1, i);
    const auto b = filtration_subspaces(m2, i);
    for (int j : merged_jumps(a, b)) {
      std::vector<linalg::Vec3> image;
      for (const auto& g : fil_at(a, j)) image.push_back(apply(w, i, g));
      if (!linalg::same_span(image, fil_at(b, j))) return false;
    }
  }
  return true;
}

std::optional<PhiModule> transport(const PhiModule& m, const IsoWitness& w) {
  const std::size_t f = m.f();
  std::array<std::vector<Scalar>, 3> eigen;
  for (auto& e : eigen) e.resize(f);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < f; ++i)
      eigen[w.sigma.image[j]][i] =
          w.h[j][i] * m.frobenius().eigen(j)[i] / w.h[j][(i + 1) % f];
  FrobeniusData fro(m.p(), TauVector(eigen[0]), TauVector(eigen[1]), TauVector(eigen[2]));

  RawFiltration raw;
  for (std::size_t i = 0; i < f; ++i) {
    const auto steps = filtration_subspaces(m, i);
    RawEmbedding r;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, F0>) {
            r.k1 = v.k1;
            r.k2 = v.k2;
            r.u = apply(w, i, fil_at(steps, 1)[0]);
            r.v = apply(w, i, fil_at(steps, 1)[1]);
            r.lambda = 1;
            r.mu = v.x1;
          } else if constexpr (std::is_same_v<T, F1>) {
            r.k1 = r.k2 = v.k;
            r.u = apply(w, i, fil_at(steps, 1)[0]);
            r.v = apply(w, i, fil_at(steps, 1)[1]);
          } else if constexpr (std::is_same_v<T, F2>) {
            r.k1 = 0;
            r.k2 = v.k;
            r.u = apply(w, i, fil_at(steps, 1)[0]);
          }
        },
        m.filtration(i));
    raw.push_back(std::move(r));
  }
  auto result = normalize(fro, raw);
  if (auto* n = std::get_if<Normalization>(&result)) return std::move(n->module);
  return std::nullopt;
}

}  // namespace phimod
