#include <map>

#include "strathom/cli/report.hpp"
#include "strathom/topology/blowup_cochains.hpp"
#include "strathom/topology/intersection_chains.hpp"

namespace strathom::cli {

bool closed_oriented(const FilteredComplex& x) {
  const int n = x.dimension();
  if (n == 0) return true;
  std::map<Simplex, int> cofaces;
  for (const Simplex& s : x.simplices(n))
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      ++cofaces[f];
    }
  for (const Simplex& f : x.simplices(n - 1))
    if (cofaces[f] != 2) return false;
  GradedModule h = homology_all(simplicial_chain_complex(x));
  return h[n].is_free() && h[n].free_rank() == h[0].free_rank();
}

std::vector<int> singular_values(const FilteredComplex& x, const Perversity& p) {
  std::vector<int> v;
  for (int s : x.singular_strata()) v.push_back(p(s));
  return v;
}

Perversity from_singular_values(const FilteredComplex& x, const std::vector<int>& values) {
  const std::vector<int> singular = x.singular_strata();
  if (values.size() == 1) return Perversity::uniform(x, values.front());
  if (values.size() != singular.size())
    throw ValidationError("perversity lists " + std::to_string(values.size()) + " values for " +
                          std::to_string(singular.size()) + " singular strata");
  std::vector<int> all(x.strata().size(), 0);
  for (std::size_t i = 0; i < singular.size(); ++i) all[static_cast<std::size_t>(singular[i])] = values[i];
  return Perversity(x, all);
}

IntersectionProfile simplicial_profile(const FilteredComplex& x, const Perversity& p, const Coefficients& ring) {
  for (int s : x.singular_strata()) {
    const Stratum& st = x.strata()[static_cast<std::size_t>(s)];
    if (p(s) < 0 || p(s) > st.codim - 2)
      throw ValidationError("perversity value " + std::to_string(p(s)) + " outside [0, " +
                            std::to_string(st.codim - 2) + "] on stratum " + st.name);
  }
  const Perversity dp = complementary(x, p);
  IntersectionProfile r;
  r.space = "complex";
  r.dimension = x.dimension();
  r.compact = closed_oriented(x);
  r.oriented = r.compact;
  r.ih_p = intersection_homology(x, p, ring);
  r.ih_dp = intersection_homology(x, dp, ring);
  r.gh_dp = intersection_cohomology(x, dp, ring);
  r.blowup = blowup_cohomology(x, p, ring);
  r.peripheral_known = false;
  r.strata_known = false;
  for (int s : x.singular_strata()) {
    const Stratum& st = x.strata()[static_cast<std::size_t>(s)];
    r.strata.push_back({st.name, st.codim, p(s), true, FGModule::zero()});
  }
  if (!r.compact) r.notes.push_back("not a closed oriented pseudomanifold; duality checks do not apply");
  return r;
}

}  // namespace strathom::cli
