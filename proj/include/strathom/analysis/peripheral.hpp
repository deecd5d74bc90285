#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strathom/algebra/module.hpp"
#include "strathom/symbolic/profile.hpp"

namespace strathom {

struct Components {
  GradedModule F;    // coker of chi on free parts
  GradedModule T_K;  // ker of chi on torsion parts
  GradedModule T_C;  // coker of chi on torsion parts
  /// Degrees where the free comparison is not rationally onto.
  std::vector<int> non_torsion_degrees;
};

/// Splits chi into its free and torsion parts.
Components components(const GradedModuleMap& chi);
/// 0 -> coker chi^k -> R^k -> ker chi^{k+1} -> 0, resolved where an end vanishes.
std::map<int, Extension> peripheral(const GradedModuleMap& chi);

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail, insufficient data, not applicable
  std::string detail;
};

struct Verdicts {
  std::optional<bool> torsion_free_nonsingular;
  std::optional<bool> torsion_nonsingular;
  std::optional<bool> poincare_duality;
  std::optional<bool> locally_torsion_free;
};

struct DualityReport {
  IntersectionProfile profile;
  std::string engine = "symbolic";
  std::optional<Components> comps;
  Verdicts verdicts;
  std::vector<CheckResult> checks;

  bool all_checks_pass() const;
};

/// Components, verdicts and the check suite. `dual` is the same space at the
/// complementary perversity; duality checks need it.
DualityReport analyze(const IntersectionProfile& p, const IntersectionProfile* dual = nullptr);

std::string perversity_name(const std::vector<int>& values);

}  // namespace strathom
