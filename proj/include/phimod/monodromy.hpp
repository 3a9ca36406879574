#pragma once

// Monodromy operators N with N phi = p phi N on a diagonal Frobenius.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "phimod/phimodule.hpp"
#include "phimod/tauvec.hpp"

namespace phimod {

/// 1-based (row, col), written "12", "23", ...
struct Position {
  int row;
  int col;
  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& pos);
/// Throws Error(Parse) unless two distinct digits in 1..3.
Position parse_position(std::string_view text);

enum class MonodromyShape { CycleDown, CycleUp };

/// CycleDown = {12, 23, 31}, CycleUp = {13, 21, 32}.
MonodromyShape shape_of(const Position& pos);
std::string_view to_string(MonodromyShape s);

/// Solves alpha * gamma = beta * phi(gamma) with gamma(0) = gamma0.
/// Zero gamma0 gives the zero vector. Throws Error(NoNonzeroSolution) when
/// Nm(alpha) != Nm(beta) and gamma0 != 0.
TauVector solve_entry(const TauVector& alpha, const TauVector& beta, const Scalar& gamma0);

struct EligiblePosition {
  Position pos;
  /// Human-readable norm ratio, e.g. "Nm(b) = p^f Nm(a)".
  std::string requirement;
};

std::vector<EligiblePosition> admissible_positions(const FrobeniusData& fro);

/// Throws Error(ShapeViolation) or Error(IneligiblePosition).
TauMatrix build_monodromy(const FrobeniusData& fro, const std::map<Position, Scalar>& entries);

struct MonodromyCheck {
  bool valid = true;
  std::vector<std::string> reasons;
};

MonodromyCheck validate_monodromy(const FrobeniusData& fro, const TauMatrix& a);

}  // namespace phimod
