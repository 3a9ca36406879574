#pragma once

// Rank-3 filtered phi-modules with diagonal Frobenius diag(a, b, c) and one
// normal-form filtration (F0..F3) per embedding.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "phimod/coeff.hpp"
#include "phimod/tauvec.hpp"

namespace phimod {

/// Diagonal Frobenius: eigen-vectors a, b, c over E^f, plus the prime p.
class FrobeniusData {
 public:
  /// Validates eagerly: p odd prime, equal lengths f >= 1, every coordinate
  /// nonzero, pairwise distinct norms. Violations throw
  /// Error(InvariantViolation) naming the failed invariant.
  FrobeniusData(std::int64_t p, TauVector a, TauVector b, TauVector c);

  std::int64_t p() const noexcept { return p_; }
  std::size_t f() const noexcept { return eigen_[0].size(); }
  const TauVector& a() const noexcept { return eigen_[0]; }
  const TauVector& b() const noexcept { return eigen_[1]; }
  const TauVector& c() const noexcept { return eigen_[2]; }
  /// Slot 0, 1, 2 = a, b, c.
  const TauVector& eigen(std::size_t slot) const { return eigen_.at(slot); }

  Scalar eigen_norm(std::size_t slot) const { return norm(eigen_.at(slot)); }
  Valuation eigen_valuation(std::size_t slot) const {
    return norm_valuation(eigen_.at(slot), p_);
  }

  TauMatrix matrix() const { return TauMatrix::diagonal(a(), b(), c()); }

  friend bool operator==(const FrobeniusData&, const FrobeniusData&) = default;

 private:
  std::int64_t p_;
  std::array<TauVector, 3> eigen_;
};

/// Three distinct weights 0 < k1 < k2: plane on 1..k1, line on k1+1..k2.
struct F0 {
  int k1 = 1;
  int k2 = 2;
  Scalar x1{0};
  bool x2 = false;
  bool x2p = false;

  /// x2 + x1 * x2p, always recomputed.
  Scalar x2pp() const { return Scalar(x2 ? 1 : 0) + (x2p ? x1 : Scalar(0)); }
  friend bool operator==(const F0&, const F0&) = default;
};

/// Plane span(e0 + x2 e2, e1 + x2p e2) on 1..k.
struct F1 {
  int k = 1;
  bool x2 = false;
  bool x2p = false;
  friend bool operator==(const F1&, const F1&) = default;
};

/// Line span(e0 + x1 e1 + x2pp e2) on 1..k.
struct F2 {
  int k = 1;
  bool x1 = false;
  bool x2pp = false;
  friend bool operator==(const F2&, const F2&) = default;
};

/// Trivial filtration: all weights zero.
struct F3 {
  friend bool operator==(const F3&, const F3&) = default;
};

using EmbeddingFiltration = std::variant<F0, F1, F2, F3>;

std::string_view filtration_tag(const EmbeddingFiltration& filt);

class PhiModule {
 public:
  /// Throws Error(InvariantViolation) on length mismatch or bad weights.
  PhiModule(FrobeniusData frobenius, std::vector<EmbeddingFiltration> filt);

  const FrobeniusData& frobenius() const noexcept { return frobenius_; }
  std::size_t f() const noexcept { return frobenius_.f(); }
  std::int64_t p() const noexcept { return frobenius_.p(); }
  const std::vector<EmbeddingFiltration>& filtrations() const noexcept { return filt_; }
  const EmbeddingFiltration& filtration(std::size_t i) const;

  friend bool operator==(const PhiModule&, const PhiModule&) = default;

 private:
  FrobeniusData frobenius_;
  std::vector<EmbeddingFiltration> filt_;
};

/// The seven phi-stable submodules spanned by basis vectors.
enum class SubmoduleId { D0, D1, D2, D01, D02, D12, Full };

inline constexpr std::array<SubmoduleId, 7> kAllSubmodules = {
    SubmoduleId::D0,  SubmoduleId::D1,  SubmoduleId::D2,  SubmoduleId::D01,
    SubmoduleId::D02, SubmoduleId::D12, SubmoduleId::Full};

inline constexpr std::array<SubmoduleId, 6> kProperSubmodules = {
    SubmoduleId::D0,  SubmoduleId::D1,  SubmoduleId::D2,
    SubmoduleId::D01, SubmoduleId::D02, SubmoduleId::D12};

std::string_view to_string(SubmoduleId s);
/// Which of e0, e1, e2 span the submodule.
std::array<bool, 3> slots(SubmoduleId s);

/// Labeled Hodge-Tate weights at embedding i, ascending.
std::array<int, 3> weights(const PhiModule& m, std::size_t i);

struct EmbeddingClasses {
  std::vector<std::size_t> i1;  // F0
  std::vector<std::size_t> i2;  // F1
  std::vector<std::size_t> i3;  // F2
  std::vector<std::size_t> trivial;  // F3
};

EmbeddingClasses classify_embeddings(const PhiModule& m);

/// t_N: sum of the norm valuations of the eigen-vectors inside s.
Valuation newton_invariant(const PhiModule& m, SubmoduleId s);

/// Closed-form t_H of the induced filtration on s at one embedding.
int hodge_invariant_at(const EmbeddingFiltration& filt, SubmoduleId s);

/// Closed-form t_H summed over embeddings.
int hodge_invariant(const PhiModule& m, SubmoduleId s);

/// Nm(P) diagonal with distinct nonzero constant entries.
bool has_distinct_eigenvalues(const TauMatrix& frobenius_matrix);

}  // namespace phimod
