#pragma once

// Weak admissibility and irreducibility from the closed-form inequalities,
// and the definitional oracle built on explicit subspaces.

#include <array>
#include <string_view>
#include <vector>

#include "phimod/coeff.hpp"
#include "phimod/phimodule.hpp"

namespace phimod {

enum class Slack { Strict, Equality, Violated };

std::string_view to_string(Slack s);

/// Corrected: the proof's tables. StatementLiteral: inequality (10) with the
/// I2 condition read literally as "x1 = 0"; F1 has no x1, so every F1
/// embedding contributes k. Kept only to demonstrate that the oracle catches it.
enum class Reading { Corrected, StatementLiteral };

/// Inequality labels in report order, matching kProperSubmodules.
inline constexpr std::array<std::string_view, 6> kInequalityLabels = {"10", "11", "12",
                                                                      "q",  "13", "16"};

struct InequalityLine {
  SubmoduleId submodule;
  Valuation newton;
  int hodge;
  Slack slack;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool equality_eq9 = false;
  Valuation newton_full;
  int hodge_full = 0;
  /// One per proper submodule, order D0, D1, D2, D01, D02, D12.
  std::vector<InequalityLine> inequalities;
  bool irreducible = false;
  /// Proper submodules that are themselves weakly admissible; empty unless
  /// the module is admissible.
  std::vector<SubmoduleId> admissible_submodules;
};

AdmissibilityReport check_weak_admissibility(const PhiModule& m,
                                             Reading reading = Reading::Corrected);

bool is_irreducible(const PhiModule& m);

/// t_H from the materialized filtration by exact intersection dimensions.
int oracle_hodge_invariant(const PhiModule& m, SubmoduleId s);

struct OracleVerdict {
  bool admissible = false;
  bool full_equal = false;
  std::array<Slack, 6> slack{};
};

OracleVerdict oracle_weak_admissibility(const PhiModule& m);

/// Same admissibility bit, eq9 flag and all six slacks.
bool agrees(const AdmissibilityReport& report, const OracleVerdict& oracle);

}  // namespace phimod
