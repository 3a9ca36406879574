#pragma once

// The product ring E^f with componentwise operations, its cyclic Frobenius
// shift, and the Frobenius norm on vectors and 3x3 matrices.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "phimod/coeff.hpp"

namespace phimod {

class TauVector {
 public:
  /// Empty placeholder (f = 0); only useful as a slot to be assigned.
  TauVector() = default;
  /// Throws Error(InvalidArgument) when `coords` is empty.
  explicit TauVector(std::vector<Scalar> coords);

  static TauVector constant(std::size_t f, const Scalar& value);
  static TauVector zero(std::size_t f) { return constant(f, Scalar(0)); }
  static TauVector ones(std::size_t f) { return constant(f, Scalar(1)); }

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool all_nonzero() const;
  bool is_constant() const;

  TauVector& operator+=(const TauVector& o);
  TauVector& operator-=(const TauVector& o);
  TauVector& operator*=(const TauVector& o);
  TauVector& operator*=(const Scalar& s);

  friend TauVector operator+(TauVector a, const TauVector& b) { return a += b; }
  friend TauVector operator-(TauVector a, const TauVector& b) { return a -= b; }
  friend TauVector operator*(TauVector a, const TauVector& b) { return a *= b; }
  friend TauVector operator*(TauVector a, const Scalar& s) { return a *= s; }
  friend TauVector operator*(const Scalar& s, TauVector a) { return a *= s; }
  friend bool operator==(const TauVector&, const TauVector&) = default;

 private:
  void require_same_size(const TauVector& o) const;

  std::vector<Scalar> coords_;
};

/// phi(x)(i) = x(i+1 mod f).
TauVector frobenius_shift(const TauVector& x, std::size_t times = 1);

/// Product of all coordinates.
Scalar norm(const TauVector& x);

Valuation norm_valuation(const TauVector& x, std::int64_t p);

/// 3x3 matrix over E^f.
class TauMatrix {
 public:
  TauMatrix() = default;
  explicit TauMatrix(std::size_t f);

  static TauMatrix identity(std::size_t f);
  static TauMatrix diagonal(const TauVector& a, const TauVector& b,
                            const TauVector& c);

  std::size_t embeddings() const noexcept { return f_; }
  const TauVector& operator()(std::size_t r, std::size_t c) const {
    return entries_[3 * r + c];
  }
  TauVector& operator()(std::size_t r, std::size_t c) { return entries_[3 * r + c]; }

  bool is_diagonal() const;

  friend TauMatrix operator*(const TauMatrix& a, const TauMatrix& b);
  friend TauMatrix operator*(const Scalar& s, const TauMatrix& a);
  friend bool operator==(const TauMatrix&, const TauMatrix&) = default;

  /// Throws Error(InvalidArgument) if some entry length differs from f.
  void check_shape() const;

 private:
  std::size_t f_ = 0;
  std::array<TauVector, 9> entries_;
};

/// phi applied entrywise.
TauMatrix frobenius_shift(const TauMatrix& a, std::size_t times = 1);

/// A phi(A) ... phi^{f-1}(A).
TauMatrix matrix_norm(const TauMatrix& a);

}  // namespace phimod
