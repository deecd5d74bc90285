#pragma once

// Closed-form oracles used by the tests; written independently of the
// symbolic engine from the Mayer-Vietoris and cone calculations.

#include "strathom/algebra/module.hpp"

namespace oracle {

using strathom::FGModule;
using strathom::GradedModule;

// Intersection homology of the closed cone on L (dim L = n - 1), apex value q.
inline GradedModule cone_homology(const GradedModule& link, int n, int q) {
  GradedModule out;
  for (const auto& [j, m] : link.entries())
    if (j < n - 1 - q) out.set(j, m);
  return out;
}

// Suspension with apex values q1, q2 via Mayer-Vietoris of two cones.
inline GradedModule suspension_homology(const GradedModule& link, int n, int q1, int q2) {
  const int c1 = n - 1 - q1, c2 = n - 1 - q2;
  const int lo = std::min(c1, c2), hi = std::max(c1, c2);
  GradedModule out;
  for (int j = 0; j <= n; ++j) {
    FGModule m;
    if (j < lo) m = m + link[j];
    if (j - 1 >= hi) m = m + link[j - 1];
    out.set(j, m);
  }
  return out;
}

// Blown-up cohomology of a cone on a manifold L with apex value k.
inline GradedModule cone_blowup(const GradedModule& link_cohomology, int k) {
  GradedModule out;
  for (const auto& [j, m] : link_cohomology.entries())
    if (j <= k) out.set(j, m);
  return out;
}

// Blown-up cohomology of a suspension: truncations of both cones glued.
inline GradedModule suspension_blowup(const GradedModule& link_cohomology, int n, int k1, int k2) {
  const int lo = std::min(k1, k2), hi = std::max(k1, k2);
  GradedModule out;
  for (int j = 0; j <= n; ++j) {
    FGModule m;
    if (j <= lo) m = m + link_cohomology[j];
    if (j >= hi + 2) m = m + link_cohomology[j - 1];
    out.set(j, m);
  }
  return out;
}

}  // namespace oracle
