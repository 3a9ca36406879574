#include "phimod/tauvec.hpp"

#include <algorithm>

#include "phimod/error.hpp"

namespace phimod {

TauVector::TauVector(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    throw Error(ErrorKind::InvalidArgument, "TauVector needs at least one coordinate");
}

TauVector TauVector::constant(std::size_t f, const Scalar& value) {
  return TauVector(std::vector<Scalar>(f, value));
}

bool TauVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Scalar& s) { return phimod::is_zero(s); });
}

bool TauVector::all_nonzero() const {
  return std::none_of(coords_.begin(), coords_.end(),
                      [](const Scalar& s) { return phimod::is_zero(s); });
}

bool TauVector::is_constant() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [&](const Scalar& s) { return s == coords_.front(); });
}

void TauVector::require_same_size(const TauVector& o) const {
  if (o.size() != size())
    throw Error(ErrorKind::InvalidArgument,
                "TauVector length mismatch: " + std::to_string(size()) + " vs " +
                    std::to_string(o.size()));
}

TauVector& TauVector::operator+=(const TauVector& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

TauVector& TauVector::operator-=(const TauVector& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

TauVector& TauVector::operator*=(const TauVector& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < size(); ++i) coords_[i] *= o.coords_[i];
  return *this;
}

TauVector& TauVector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

TauVector frobenius_shift(const TauVector& x, std::size_t times) {
  const std::size_t f = x.size();
  std::vector<Scalar> out(f);
  for (std::size_t i = 0; i < f; ++i) out[i] = x[(i + times) % f];
  return TauVector(std::move(out));
}

Scalar norm(const TauVector& x) {
  Scalar prod(1);
  for (const auto& c : x.coords()) prod *= c;
  return prod;
}

Valuation norm_valuation(const TauVector& x, std::int64_t p) {
  return vp(norm(x), p);
}

TauMatrix::TauMatrix(std::size_t f) : f_(f) {
  for (auto& e : entries_) e = TauVector::zero(f);
}

TauMatrix TauMatrix::identity(std::size_t f) {
  TauMatrix m(f);
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = TauVector::ones(f);
  return m;
}

TauMatrix TauMatrix::diagonal(const TauVector& a, const TauVector& b,
                              const TauVector& c) {
  TauMatrix m(a.size());
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m.check_shape();
  return m;
}

bool TauMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

void TauMatrix::check_shape() const {
  for (const auto& e : entries_)
    if (e.size() != f_)
      throw Error(ErrorKind::InvalidArgument, "TauMatrix entry length mismatch");
}

TauMatrix operator*(const TauMatrix& a, const TauMatrix& b) {
  if (a.f_ != b.f_)
    throw Error(ErrorKind::InvalidArgument, "TauMatrix dimension mismatch");
  TauMatrix out(a.f_);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

TauMatrix operator*(const Scalar& s, const TauMatrix& a) {
  TauMatrix out = a;
  for (auto& e : out.entries_) e *= s;
  return out;
}

TauMatrix frobenius_shift(const TauMatrix& a, std::size_t times) {
  TauMatrix out(a.embeddings());
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = frobenius_shift(a(r, c), times);
  return out;
}

TauMatrix matrix_norm(const TauMatrix& a) {
  a.check_shape();
  TauMatrix acc = a;
  for (std::size_t k = 1; k < a.embeddings(); ++k) acc = acc * frobenius_shift(a, k);
  return acc;
}

}  // namespace phimod
