#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace phimod {

/// Exact element of the coefficient field. GMP keeps it reduced with a
/// positive denominator as long as values are built through the helpers here
/// or through mpq_class arithmetic.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

/// Parses "n" or "n/d" (decimal, optional leading minus, no spaces).
Scalar parse_scalar(std::string_view text);

/// Reduced "n" or "n/d".
std::string format_scalar(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);

/// p-adic valuation: a rational exponent of p, or +infinity for zero.
class Valuation {
 public:
  Valuation() = default;  // zero
  explicit Valuation(mpq_class exponent) : exponent_(std::move(exponent)) {}
  explicit Valuation(long exponent) : exponent_(exponent) {}

  static Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }

  /// Throws Error(InvalidArgument) on infinity.
  const mpq_class& exponent() const;

  std::string to_string() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  mpq_class exponent_{0};
  bool infinite_ = false;
};

/// Exponent of p in the reduced fraction; infinity for 0. Requires p prime.
Valuation vp(const Scalar& s, std::int64_t p);

}  // namespace phimod
