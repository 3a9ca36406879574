#include "phimod/coeff.hpp"

#include <cctype>

#include "phimod/error.hpp"

namespace phimod {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NoNonzeroSolution: return "NoNonzeroSolution";
    case ErrorKind::IneligiblePosition: return "IneligiblePosition";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::StructuralMismatch: return "StructuralMismatch";
    case ErrorKind::TargetUnreachable: return "TargetUnreachable";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Scalar make_scalar(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

namespace {

bool is_decimal_integer(std::string_view t, bool allow_sign) {
  if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_decimal_integer(num, true) ||
      (slash != std::string_view::npos && !is_decimal_integer(den, false)))
    throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");

  Scalar s;
  s.get_num() = mpz_class(std::string(num), 10);
  s.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (s.get_den() == 0)
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  s.canonicalize();
  return s;
}

std::string format_scalar(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_odd_prime(std::int64_t n) { return n != 2 && is_prime(n); }

const mpq_class& Valuation::exponent() const {
  if (infinite_)
    throw Error(ErrorKind::InvalidArgument, "infinite valuation has no exponent");
  return exponent_;
}

std::string Valuation::to_string() const {
  return infinite_ ? "inf" : format_scalar(exponent_);
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(mpq_class(a.exponent_ + b.exponent_));
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.exponent_ == b.exponent_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  int c = cmp(a.exponent_, b.exponent_);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

namespace {

long remove_factor(mpz_class& n, std::int64_t p) {
  if (n == 0) return 0;
  mpz_class prime(static_cast<long>(p));
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

Valuation vp(const Scalar& s, std::int64_t p) {
  if (!is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "vp: " + std::to_string(p) + " is not prime");
  if (is_zero(s)) return Valuation::infinity();
  mpz_class num = s.get_num();
  mpz_class den = s.get_den();
  return Valuation(remove_factor(num, p) - remove_factor(den, p));
}

}  // namespace phimod
