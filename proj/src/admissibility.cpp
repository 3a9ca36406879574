#include "phimod/admissibility.hpp"

#include <algorithm>

#include "phimod/linalg.hpp"
#include "phimod/normalform.hpp"

namespace phimod {

namespace {

Slack compare(const Valuation& newton, int hodge) {
  const Valuation h(static_cast<long>(hodge));
  if (newton > h) return Slack::Strict;
  if (newton == h) return Slack::Equality;
  return Slack::Violated;
}

int closed_form_rhs(const PhiModule& m, SubmoduleId s, Reading reading) {
  int total = 0;
  for (const auto& filt : m.filtrations()) {
    if (reading == Reading::StatementLiteral && s == SubmoduleId::D0) {
      if (const auto* v = std::get_if<F1>(&filt)) {
        total += v->k;
        continue;
      }
    }
    total += hodge_invariant_at(filt, s);
  }
  return total;
}

}  // namespace

std::string_view to_string(Slack s) {
  switch (s) {
    case Slack::Strict: return "strict";
    case Slack::Equality: return "equality";
    case Slack::Violated: return "violated";
  }
  return "?";
}

AdmissibilityReport check_weak_admissibility(const PhiModule& m, Reading reading) {
  AdmissibilityReport r;
  r.newton_full = newton_invariant(m, SubmoduleId::Full);
  r.hodge_full = hodge_invariant(m, SubmoduleId::Full);
  r.equality_eq9 = r.newton_full == Valuation(static_cast<long>(r.hodge_full));
  bool violated = false;
  bool all_strict = true;
  for (SubmoduleId s : kProperSubmodules) {
    InequalityLine line{s, newton_invariant(m, s), closed_form_rhs(m, s, reading), Slack::Strict};
    line.slack = compare(line.newton, line.hodge);
    violated |= line.slack == Slack::Violated;
    all_strict &= line.slack == Slack::Strict;
    r.inequalities.push_back(std::move(line));
  }
  r.admissible = r.equality_eq9 && !violated;
  r.irreducible = r.admissible && all_strict;
  if (r.admissible)
    for (const auto& line : r.inequalities)
      if (line.slack == Slack::Equality) r.admissible_submodules.push_back(line.submodule);
  return r;
}

bool is_irreducible(const PhiModule& m) { return check_weak_admissibility(m).irreducible; }

int oracle_hodge_invariant(const PhiModule& m, SubmoduleId s) {
  std::vector<linalg::Vec3> sub;
  const auto in = slots(s);
  for (std::size_t k = 0; k < 3; ++k)
    if (in[k]) sub.push_back(linalg::basis_vector(k));

  int total = 0;
  for (std::size_t i = 0; i < m.f(); ++i) {
    const auto steps = filtration_subspaces(m, i);
    const int last = steps.back().start;
    auto dim = [&](int j) {
      return static_cast<int>(linalg::intersection_dim(fil_at(steps, j), sub));
    };
    for (int j = -1; j <= last; ++j) total += j * (dim(j) - dim(j + 1));
  }
  return total;
}

OracleVerdict oracle_weak_admissibility(const PhiModule& m) {
  OracleVerdict v;
  v.full_equal = newton_invariant(m, SubmoduleId::Full) ==
                 Valuation(static_cast<long>(oracle_hodge_invariant(m, SubmoduleId::Full)));
  bool violated = false;
  for (std::size_t k = 0; k < kProperSubmodules.size(); ++k) {
    const SubmoduleId s = kProperSubmodules[k];
    v.slack[k] = compare(newton_invariant(m, s), oracle_hodge_invariant(m, s));
    violated |= v.slack[k] == Slack::Violated;
  }
  v.admissible = v.full_equal && !violated;
  return v;
}

bool agrees(const AdmissibilityReport& report, const OracleVerdict& oracle) {
  if (report.admissible != oracle.admissible || report.equality_eq9 != oracle.full_equal)
    return false;
  for (std::size_t k = 0; k < oracle.slack.size(); ++k)
    if (report.inequalities[k].slack != oracle.slack[k]) return false;
  return true;
}

}  // namespace phimod
