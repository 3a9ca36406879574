#include "phimod/normalform.hpp"

#include <algorithm>

#include "phimod/error.hpp"

namespace phimod {

namespace {

Vec3 vec(Scalar a, Scalar b, Scalar c) { return {std::move(a), std::move(b), std::move(c)}; }

std::vector<Vec3> full_space() {
  return {linalg::basis_vector(0), linalg::basis_vector(1), linalg::basis_vector(2)};
}

Scalar bit(bool b) { return Scalar(b ? 1 : 0); }

Vec3 combine(const Scalar& lambda, const Vec3& u, const Scalar& mu, const Vec3& v) {
  return vec(lambda * u[0] + mu * v[0], lambda * u[1] + mu * v[1], lambda * u[2] + mu * v[2]);
}

Vec3 permuted(const Vec3& w, const Permutation& perm) {
  return vec(w[perm[0]], w[perm[1]], w[perm[2]]);
}

bool is_zero_vec(const Vec3& w) { return is_zero(w[0]) && is_zero(w[1]) && is_zero(w[2]); }

[[noreturn]] void degenerate(const std::string& what) {
  throw Error(ErrorKind::DegenerateInput, what);
}

}  // namespace

std::vector<FilStep> filtration_subspaces(const EmbeddingFiltration& filt) {
  std::vector<FilStep> out;
  out.push_back({0, full_space()});
  if (const auto* v = std::get_if<F0>(&filt)) {
    out.push_back({1, {vec(1, 0, bit(v->x2)), vec(0, 1, bit(v->x2p))}});
    out.push_back({v->k1 + 1, {vec(1, v->x1, v->x2pp())}});
    out.push_back({v->k2 + 1, {}});
  } else if (const auto* v = std::get_if<F1>(&filt)) {
    out.push_back({1, {vec(1, 0, bit(v->x2)), vec(0, 1, bit(v->x2p))}});
    out.push_back({v->k + 1, {}});
  } else if (const auto* v = std::get_if<F2>(&filt)) {
    out.push_back({1, {vec(1, bit(v->x1), bit(v->x2pp))}});
    out.push_back({v->k + 1, {}});
  } else {
    out.push_back({1, {}});
  }
  return out;
}

std::vector<FilStep> filtration_subspaces(const PhiModule& m, std::size_t i) {
  return filtration_subspaces(m.filtration(i));
}

const std::vector<Vec3>& fil_at(const std::vector<FilStep>& steps, int j) {
  if (j <= steps.front().start) return steps.front().span;
  const FilStep* cur = &steps.front();
  for (const auto& s : steps) {
    if (s.start > j) break;
    cur = &s;
  }
  return cur->span;
}

std::vector<int> jump_set(const std::vector<FilStep>& steps) {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.start);
  return out;
}

void validate_raw(const RawFiltration& raw, std::size_t f) {
  if (raw.size() != f)
    degenerate("raw filtration needs " + std::to_string(f) + " embeddings, got " +
               std::to_string(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& r = raw[i];
    const std::string where = " at embedding " + std::to_string(i);
    if (r.k1 < 0 || r.k2 < r.k1) degenerate("need 0 <= k1 <= k2" + where);
    if (r.k1 >= 1) {
      std::array<Vec3, 2> gens{r.u, r.v};
      if (linalg::rank(gens) != 2) degenerate("plane generators u, v are dependent" + where);
    }
    if (r.k2 > r.k1) {
      if (is_zero(r.lambda) && is_zero(r.mu)) degenerate("(lambda, mu) = (0, 0)" + where);
      if (is_zero_vec(combine(r.lambda, r.u, r.mu, r.v)))
        degenerate("line lambda*u + mu*v is zero" + where);
    }
  }
}

std::vector<FilStep> raw_subspaces(const RawEmbedding& r) {
  std::vector<FilStep> out;
  out.push_back({0, full_space()});
  if (r.k1 >= 1) out.push_back({1, {r.u, r.v}});
  if (r.k2 > r.k1) out.push_back({r.k1 + 1, {combine(r.lambda, r.u, r.mu, r.v)}});
  out.push_back({r.k2 + 1, {}});
  return out;
}

const std::array<Permutation, 6>& all_permutations() {
  static const std::array<Permutation, 6> perms = {{
      {0, 1, 2},
      {1, 0, 2},
      {2, 1, 0},
      {0, 2, 1},
      {1, 2, 0},
      {2, 0, 1},
  }};
  return perms;
}

std::string permutation_name(const Permutation& perm) {
  std::string s = "[";
  for (std::size_t j = 0; j < 3; ++j) {
    if (j) s += ",";
    s += std::to_string(perm[j]);
  }
  return s + "]";
}

namespace {

struct LocalForm {
  EmbeddingFiltration filt;
  std::array<Scalar, 3> d;
};

// Per-embedding reduction in the permuted basis. Returns an error string on
// failure.
std::variant<LocalForm, std::string> reduce_embedding(const RawEmbedding& r,
                                                      const Permutation& perm) {
  const Vec3 u = permuted(r.u, perm);
  const Vec3 v = permuted(r.v, perm);
  const Vec3 line = combine(r.lambda, u, r.mu, v);

  if (r.k2 == 0) return LocalForm{F3{}, {Scalar(1), Scalar(1), Scalar(1)}};

  if (r.k1 == 0) {
    if (is_zero(line[0])) return std::string("line has zero e0 coordinate");
    Scalar x1 = line[1] / line[0];
    Scalar x2pp = line[2] / line[0];
    std::array<Scalar, 3> d{Scalar(1), is_zero(x1) ? Scalar(1) : x1,
                            is_zero(x2pp) ? Scalar(1) : x2pp};
    return LocalForm{F2{r.k2, !is_zero(x1), !is_zero(x2pp)}, d};
  }

  const Scalar det = u[0] * v[1] - u[1] * v[0];
  if (is_zero(det)) return std::string("plane contains e2");
  const Scalar y2 = (u[2] * v[1] - u[1] * v[2]) / det;
  const Scalar y2p = (u[0] * v[2] - v[0] * u[2]) / det;

  Scalar d2 = is_zero(y2p) ? Scalar(1) : y2p;
  Scalar d0 = is_zero(y2) ? Scalar(1) : Scalar(d2 / y2);
  std::array<Scalar, 3> d{d0, Scalar(1), d2};
  const bool x2 = !is_zero(y2);
  const bool x2p = !is_zero(y2p);

  if (r.k1 == r.k2) return LocalForm{F1{r.k1, x2, x2p}, d};

  if (is_zero(line[0])) return std::string("line has zero e0 coordinate");
  Scalar x1 = line[1] / line[0] * d[0];
  return LocalForm{F0{r.k1, r.k2, std::move(x1), x2, x2p}, d};
}

}  // namespace

NormalizeResult normalize(const FrobeniusData& fro, const RawFiltration& raw) {
  const std::size_t f = fro.f();
  validate_raw(raw, f);
  std::vector<std::string> rejected;
  for (const auto& perm : all_permutations()) {
    std::vector<EmbeddingFiltration> filt;
    std::array<std::vector<Scalar>, 3> d;
    std::string failure;
    for (std::size_t i = 0; i < f && failure.empty(); ++i) {
      auto local = reduce_embedding(raw[i], perm);
      if (auto* msg = std::get_if<std::string>(&local)) {
        failure = "embedding " + std::to_string(i) + ": " + *msg;
        break;
      }
      auto& form = std::get<LocalForm>(local);
      filt.push_back(std::move(form.filt));
      for (std::size_t j = 0; j < 3; ++j) d[j].push_back(std::move(form.d[j]));
    }
    if (!failure.empty()) {
      rejected.push_back(permutation_name(perm) + " " + failure);
      continue;
    }
    std::array<TauVector, 3> rescale{TauVector(d[0]), TauVector(d[1]), TauVector(d[2])};
    std::array<TauVector, 3> eigen;
    for (std::size_t j = 0; j < 3; ++j) {
      const TauVector& old = fro.eigen(perm[j]);
      std::vector<Scalar> coords(f);
      for (std::size_t i = 0; i < f; ++i)
        coords[i] = old[i] * rescale[j][(i + 1) % f] / rescale[j][i];
      eigen[j] = TauVector(std::move(coords));
    }
    FrobeniusData nf(fro.p(), eigen[0], eigen[1], eigen[2]);
    return Normalization{PhiModule(std::move(nf), std::move(filt)), perm, std::move(rescale),
                         std::move(rejected)};
  }
  return NotRepresentable{std::move(rejected)};
}

Vec3 to_original_basis(const Normalization& n, std::size_t i, const Vec3& w) {
  Vec3 out{Scalar(0), Scalar(0), Scalar(0)};
  for (std::size_t j = 0; j < 3; ++j) out[n.perm[j]] = w[j] * n.rescale[j][i];
  return out;
}

bool verify_round_trip(const FrobeniusData& fro, const RawFiltration& raw,
                       const Normalization& n) {
  const std::size_t f = fro.f();
  if (n.module.f() != f || raw.size() != f) return false;
  // Frobenius: phi(e'_j) = phi(d_j) P_{perm j} e_{perm j} must equal P'_j e'_j.
  for (std::size_t j = 0; j < 3; ++j) {
    const TauVector& old = fro.eigen(n.perm[j]);
    const TauVector& now = n.module.frobenius().eigen(j);
    for (std::size_t i = 0; i < f; ++i)
      if (now[i] * n.rescale[j][i] != n.rescale[j][(i + 1) % f] * old[i]) return false;
  }
  for (std::size_t i = 0; i < f; ++i) {
    const auto mine = filtration_subspaces(n.module, i);
    const auto theirs = raw_subspaces(raw[i]);
    std::vector<int> js = jump_set(mine);
    for (int j : jump_set(theirs)) js.push_back(j);
    js.push_back(-1);
    for (int j : js) {
      std::vector<Vec3> mapped;
      for (const auto& w : fil_at(mine, j)) mapped.push_back(to_original_basis(n, i, w));
      if (!linalg::same_span(mapped, fil_at(theirs, j))) return false;
    }
  }
  return true;
}

bool representable_under(const RawFiltration& raw, const Permutation& perm) {
  const std::array<Vec3, 1> new_e2{linalg::basis_vector(perm[2])};
  const std::array<Vec3, 2> new_e12{linalg::basis_vector(perm[1]),
                                    linalg::basis_vector(perm[2])};
  for (const auto& r : raw) {
    const auto steps = raw_subspaces(r);
    if (r.k1 >= 1 && linalg::contained_in(new_e2, fil_at(steps, 1))) return false;
    if (r.k2 > r.k1 && linalg::contained_in(fil_at(steps, r.k2), new_e12)) return false;
  }
  return true;
}

}  // namespace phimod
