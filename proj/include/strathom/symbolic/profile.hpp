#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/algebra/module.hpp"
#include "strathom/symbolic/atoms.hpp"

namespace strathom {

/// 0 -> sub -> total -> quotient -> 0, with the total group when it is
/// determined by the data.
struct Extension {
  FGModule sub;
  FGModule quotient;
  std::optional<FGModule> total;
  std::string note;

  bool resolved() const { return total.has_value(); }
  bool is_zero() const { return sub.is_zero() && quotient.is_zero(); }
  /// Order of the (torsion) total group, known even when unresolved.
  Integer order() const;
  /// Total when resolved; the split guess sub + quotient is never returned.
  std::string to_string() const;
};

/// Resolves when an end vanishes or the quotient is free.
Extension make_extension(const FGModule& sub, const FGModule& quotient, const std::string& note = "");

struct StratumInfo {
  std::string name;
  int codimension = 0;
  int value = 0;                 // perversity value
  bool torsion_free = true;      // T IH^{p}_{Dp(S)}(link) = 0
  FGModule witness;              // that torsion group
};

/// Closed-form evaluation of one space at one perversity p (values on the
/// singular strata). Cohomology groups are over Z.
struct IntersectionProfile {
  std::string space;
  int dimension = 0;
  bool compact = true;
  bool oriented = true;
  std::vector<StratumInfo> strata;

  /// False for evaluations that only produce the peripheral part.
  bool has_groups = true;
  GradedModule ih_p;    // IH_*^{p}
  GradedModule ih_dp;   // IH_*^{Dp}
  GradedModule gh_dp;   // IH^*_{Dp}
  GradedModule blowup;  // blown-up cohomology H^*_p

  /// chi: H^*_p -> IH^*_{Dp}, degree by degree, between canonical presentations.
  std::optional<GradedModuleMap> chi;
  std::map<int, Extension> peripheral;  // R^k_p, nonzero degrees only
  /// False when R and the strata data are outside the engine (simplicial input).
  bool peripheral_known = true;
  bool strata_known = true;
  std::vector<std::string> notes;

  std::vector<int> values() const;
  std::vector<int> dual_values() const;
  GradedModule peripheral_total() const;  // resolved degrees only
  bool peripheral_resolved() const;
  bool locally_torsion_free() const;
};

/// Manifold as a profile: chi is the identity and R = 0.
IntersectionProfile atom_profile(const ManifoldAtom& m);

/// Open cone on a compact profile, apex value k.
IntersectionProfile eval_cone(const IntersectionProfile& link, int k);
/// Suspension of a closed manifold with apex values (north, south).
IntersectionProfile eval_suspension(const ManifoldAtom& m, int north, int south);
/// Isolated singular points with manifold links; peripheral part only.
IntersectionProfile eval_isolated(int dimension, const std::vector<ManifoldAtom>& links, const std::vector<int>& values);

/// One term c * x of an Euler class, x a degree-2 class of a base factor.
struct EulerTerm {
  Integer coefficient = 0;
  std::string cls;
};

/// Integral cohomology of the total space of a circle bundle, with the Gysin
/// extension data per degree.
struct CircleBundle {
  std::vector<ManifoldAtom> base;
  std::vector<EulerTerm> euler;  // one term per base factor
};
std::map<int, Extension> gysin_cohomology(const CircleBundle& b);

/// Thom space of a circle bundle: an isolated singularity with link the total
/// space, apex value k.
IntersectionProfile eval_thom_circle(const CircleBundle& b, int k);

/// f^* on R^*(L), one matrix per degree in the canonical generators of R^k(L).
struct AutomorphismData {
  std::map<int, Matrix> peripheral;
};
/// Mapping torus of a stratified homeomorphism of L; peripheral part only.
IntersectionProfile eval_mapping_torus(const IntersectionProfile& link, const AutomorphismData& f);

/// Relative blown-up cohomology H^*_{q/p} of a suspension, p <= q per apex.
GradedModule relative_suspension(const ManifoldAtom& m, const std::vector<int>& p, const std::vector<int>& q);

}  // namespace strathom
