#include "phimod/phimodule.hpp"

#include <algorithm>
#include <string>

#include "phimod/error.hpp"

namespace phimod {

namespace {

[[noreturn]] void invariant(const std::string& what) {
  throw Error(ErrorKind::InvariantViolation, what);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

FrobeniusData::FrobeniusData(std::int64_t p, TauVector a, TauVector b, TauVector c)
    : p_(p), eigen_{std::move(a), std::move(b), std::move(c)} {
  if (!is_odd_prime(p_)) invariant("p must be an odd prime (got " + std::to_string(p_) + ")");
  const std::size_t f = eigen_[0].size();
  if (f == 0) invariant("f must be at least 1");
  static constexpr std::array<char, 3> names = {'a', 'b', 'c'};
  for (std::size_t s = 0; s < 3; ++s) {
    if (eigen_[s].size() != f) invariant("eigen-vectors must all have length f");
    if (!eigen_[s].all_nonzero())
      invariant(std::string("every coordinate of ") + names[s] + " must be nonzero");
  }
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = s + 1; t < 3; ++t)
      if (norm(eigen_[s]) == norm(eigen_[t]))
        invariant(std::string("norms of ") + names[s] + " and " + names[t] +
                  " must be distinct");
}

std::string_view filtration_tag(const EmbeddingFiltration& filt) {
  static constexpr std::array<std::string_view, 4> tags = {"F0", "F1", "F2", "F3"};
  return tags[filt.index()];
}

PhiModule::PhiModule(FrobeniusData frobenius, std::vector<EmbeddingFiltration> filt)
    : frobenius_(std::move(frobenius)), filt_(std::move(filt)) {
  if (filt_.size() != frobenius_.f())
    invariant("need one filtration per embedding (f = " + std::to_string(frobenius_.f()) +
              ", got " + std::to_string(filt_.size()) + ")");
  for (std::size_t i = 0; i < filt_.size(); ++i) {
    const std::string where = " at embedding " + std::to_string(i);
    std::visit(overloaded{
                   [&](const F0& v) {
                     if (!(0 < v.k1 && v.k1 < v.k2)) invariant("F0 requires 0 < k1 < k2" + where);
                   },
                   [&](const F1& v) {
                     if (v.k < 1) invariant("F1 requires k >= 1" + where);
                   },
                   [&](const F2& v) {
                     if (v.k < 1) invariant("F2 requires k >= 1" + where);
                   },
                   [](const F3&) {},
               },
               filt_[i]);
  }
}

const EmbeddingFiltration& PhiModule::filtration(std::size_t i) const {
  if (i >= filt_.size())
    throw Error(ErrorKind::InvalidArgument, "embedding index " + std::to_string(i) +
                                                " out of range");
  return filt_[i];
}

std::string_view to_string(SubmoduleId s) {
  switch (s) {
    case SubmoduleId::D0: return "D0";
    case SubmoduleId::D1: return "D1";
    case SubmoduleId::D2: return "D2";
    case SubmoduleId::D01: return "D01";
    case SubmoduleId::D02: return "D02";
    case SubmoduleId::D12: return "D12";
    case SubmoduleId::Full: return "Full";
  }
  return "?";
}

std::array<bool, 3> slots(SubmoduleId s) {
  switch (s) {
    case SubmoduleId::D0: return {true, false, false};
    case SubmoduleId::D1: return {false, true, false};
    case SubmoduleId::D2: return {false, false, true};
    case SubmoduleId::D01: return {true, true, false};
    case SubmoduleId::D02: return {true, false, true};
    case SubmoduleId::D12: return {false, true, true};
    case SubmoduleId::Full: return {true, true, true};
  }
  return {false, false, false};
}

std::array<int, 3> weights(const PhiModule& m, std::size_t i) {
  return std::visit(overloaded{
                        [](const F0& v) { return std::array<int, 3>{0, v.k1, v.k2}; },
                        [](const F1& v) { return std::array<int, 3>{0, v.k, v.k}; },
                        [](const F2& v) { return std::array<int, 3>{0, 0, v.k}; },
                        [](const F3&) { return std::array<int, 3>{0, 0, 0}; },
                    },
                    m.filtration(i));
}

EmbeddingClasses classify_embeddings(const PhiModule& m) {
  EmbeddingClasses out;
  for (std::size_t i = 0; i < m.f(); ++i) {
    switch (m.filtrations()[i].index()) {
      case 0: out.i1.push_back(i); break;
      case 1: out.i2.push_back(i); break;
      case 2: out.i3.push_back(i); break;
      default: out.trivial.push_back(i); break;
    }
  }
  return out;
}

Valuation newton_invariant(const PhiModule& m, SubmoduleId s) {
  Valuation total;
  auto in = slots(s);
  for (std::size_t k = 0; k < 3; ++k)
    if (in[k]) total = total + m.frobenius().eigen_valuation(k);
  return total;
}

int hodge_invariant_at(const EmbeddingFiltration& filt, SubmoduleId s) {
  using S = SubmoduleId;
  return std::visit(
      overloaded{
          [s](const F0& v) {
            const bool x1_zero = is_zero(v.x1);
            const bool x2pp_zero = is_zero(v.x2pp());
            switch (s) {
              case S::D0:
                if (v.x2) return 0;
                return x1_zero ? v.k2 : v.k1;
              case S::D1: return v.x2p ? 0 : v.k1;
              case S::D2: return 0;
              case S::D01:
                if (!x2pp_zero) return v.k1;
                return v.x2p ? v.k2 : v.k1 + v.k2;
              case S::D02: return x1_zero ? v.k2 : v.k1;
              case S::D12: return v.k1;
              case S::Full: return v.k1 + v.k2;
            }
            return 0;
          },
          [s](const F1& v) {
            switch (s) {
              case S::D0: return v.x2 ? 0 : v.k;
              case S::D1: return v.x2p ? 0 : v.k;
              case S::D2: return 0;
              case S::D01: return (!v.x2 && !v.x2p) ? 2 * v.k : v.k;
              case S::D02: return v.k;
              case S::D12: return v.k;
              case S::Full: return 2 * v.k;
            }
            return 0;
          },
          [s](const F2& v) {
            switch (s) {
              case S::D0: return (!v.x1 && !v.x2pp) ? v.k : 0;
              case S::D1: return 0;
              case S::D2: return 0;
              case S::D01: return v.x2pp ? 0 : v.k;
              case S::D02: return v.x1 ? 0 : v.k;
              case S::D12: return 0;
              case S::Full: return v.k;
            }
            return 0;
          },
          [](const F3&) { return 0; },
      },
      filt);
}

int hodge_invariant(const PhiModule& m, SubmoduleId s) {
  int total = 0;
  for (const auto& filt : m.filtrations()) total += hodge_invariant_at(filt, s);
  return total;
}

bool has_distinct_eigenvalues(const TauMatrix& frobenius_matrix) {
  TauMatrix q = matrix_norm(frobenius_matrix);
  if (!q.is_diagonal()) return false;
  std::array<Scalar, 3> consts;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!q(k, k).is_constant() || is_zero(q(k, k)[0])) return false;
    consts[k] = q(k, k)[0];
  }
  return consts[0] != consts[1] && consts[0] != consts[2] && consts[1] != consts[2];
}

}  // namespace phimod
