#include "strathom/symbolic/profile.hpp"

#include <algorithm>

namespace strathom {

namespace {

ModuleMap zero_map(const FGModule& dom, const FGModule& cod) {
  return ModuleMap::between(dom, cod, Matrix(cod.number_of_generators(), dom.number_of_generators()));
}

ModuleMap free_projection(const FGModule& m) {
  Matrix p(m.free_rank(), m.number_of_generators());
  for (std::size_t i = 0; i < m.free_rank(); ++i) p(i, i) = 1;
  return ModuleMap::between(m, m.free_part(), p);
}

void check_value(int n, int k) {
  if (k < 0 || k > n - 2)
    throw ValidationError("perversity value " + std::to_string(k) + " outside [0, " + std::to_string(n - 2) +
                          "] for a point of codimension " + std::to_string(n));
}

void add_peripheral(std::map<int, Extension>& r, int k, const Extension& e) {
  if (e.is_zero() && (!e.total || e.total->is_zero())) return;
  r[k] = e;
}

}  // namespace

Integer Extension::order() const {
  if (total) return total->order();
  return sub.order() * quotient.order();
}

std::string Extension::to_string() const {
  if (total) return total->to_string();
  std::string out = "extension of " + quotient.to_string() + " by " + sub.to_string();
  if (sub.is_torsion() && quotient.is_torsion()) out += " (order " + order().get_str() + ")";
  return out;
}

Extension make_extension(const FGModule& sub, const FGModule& quotient, const std::string& note) {
  Extension e{sub, quotient, std::nullopt, note};
  if (sub.is_zero()) e.total = quotient;
  else if (quotient.is_zero()) e.total = sub;
  else if (quotient.is_free()) e.total = sub + quotient;
  return e;
}

std::vector<int> IntersectionProfile::values() const {
  std::vector<int> v;
  for (const auto& s : strata) v.push_back(s.value);
  return v;
}

std::vector<int> IntersectionProfile::dual_values() const {
  std::vector<int> v;
  for (const auto& s : strata) v.push_back(s.codimension - 2 - s.value);
  return v;
}

GradedModule IntersectionProfile::peripheral_total() const {
  GradedModule g;
  for (const auto& [k, e] : peripheral)
    if (e.total) g.set(k, *e.total);
  return g;
}

bool IntersectionProfile::peripheral_resolved() const {
  return std::all_of(peripheral.begin(), peripheral.end(), [](const auto& kv) { return kv.second.resolved(); });
}

bool IntersectionProfile::locally_torsion_free() const {
  return std::all_of(strata.begin(), strata.end(), [](const StratumInfo& s) { return s.torsion_free; });
}

IntersectionProfile atom_profile(const ManifoldAtom& m) {
  m.check();
  IntersectionProfile p;
  p.space = m.name;
  p.dimension = m.dimension;
  p.oriented = m.orientable;
  p.ih_p = p.ih_dp = m.homology();
  p.gh_dp = p.blowup = m.cohomology();
  GradedModuleMap chi;
  for (const auto& [k, g] : p.blowup.entries()) chi.parts[k] = ModuleMap::identity(g);
  p.chi = chi;
  return p;
}

IntersectionProfile eval_cone(const IntersectionProfile& link, int k) {
  if (!link.compact) throw ValidationError("cone on a non-compact space");
  if (!link.has_groups) throw ValidationError("cone needs the intersection groups of its link");
  const int n = link.dimension + 1;
  check_value(n, k);
  IntersectionProfile p;
  p.space = "cone(" + link.space + ")";
  p.dimension = n;
  p.compact = false;
  p.oriented = link.oriented;
  for (int j = 0; j <= k; ++j) {
    p.blowup.set(j, link.blowup[j]);
    p.ih_dp.set(j, link.ih_dp[j]);
  }
  for (int j = 0; j < n - 1 - k; ++j) p.ih_p.set(j, link.ih_p[j]);
  p.gh_dp = cohomology_from_homology(p.ih_dp);

  if (link.chi) {
    GradedModuleMap chi;
    for (int j = 0; j <= k; ++j)
      if (auto it = link.chi->parts.find(j); it != link.chi->parts.end()) chi.parts[j] = it->second;
    if (!p.gh_dp[k + 1].is_zero()) chi.parts[k + 1] = zero_map(FGModule::zero(), p.gh_dp[k + 1]);
    p.chi = chi;
  }

  for (const auto& [j, e] : link.peripheral)
    if (j < k) p.peripheral[j] = e;
  if (link.chi) {
    auto it = link.chi->parts.find(k);
    FGModule coker = it == link.chi->parts.end() ? link.gh_dp[k] : ker_coker(it->second).cokernel;
    add_peripheral(p.peripheral, k, make_extension(coker, FGModule::zero()));
  } else {
    p.notes.push_back("R^" + std::to_string(k) + " needs chi on the link");
  }
  add_peripheral(p.peripheral, k + 1, make_extension(link.gh_dp[k + 1].torsion_part(), FGModule::zero()));

  p.strata = link.strata;
  StratumInfo apex{"apex", n, k, true, link.ih_p[n - 2 - k].torsion_part()};
  apex.torsion_free = apex.witness.is_zero();
  p.strata.push_back(apex);
  return p;
}

IntersectionProfile eval_suspension(const ManifoldAtom& m, int north, int south) {
  m.check();
  const int n = m.dimension + 1;
  check_value(n, north);
  check_value(n, south);
  const int kmin = std::min(north, south), kmax = std::max(north, south);
  const GradedModule h = m.cohomology(), hh = m.homology();
  IntersectionProfile p;
  p.space = "suspension(" + m.name + ")";
  p.dimension = n;
  p.oriented = m.orientable;
  const int cmin = n - 1 - kmax, cmax = n - 1 - kmin;
  for (int j = 0; j <= n; ++j) {
    FGModule b, dp, pp;
    if (j <= kmin) b = b + h[j], dp = dp + hh[j];
    if (j >= kmax + 2) b = b + h[j - 1], dp = dp + hh[j - 1];
    if (j < cmin) pp = pp + hh[j];
    if (j - 1 >= cmax) pp = pp + hh[j - 1];
    p.blowup.set(j, b);
    p.ih_dp.set(j, dp);
    p.ih_p.set(j, pp);
  }
  p.gh_dp = cohomology_from_homology(p.ih_dp);

  GradedModuleMap chi;
  for (int j = 0; j <= n; ++j) {
    const FGModule& dom = p.blowup[j];
    const FGModule& cod = p.gh_dp[j];
    if (dom.is_zero() && cod.is_zero()) continue;
    if (j == kmax + 2) chi.parts[j] = free_projection(dom);
    else if (j <= kmin || j >= kmax + 3) chi.parts[j] = ModuleMap::identity(dom);
    else chi.parts[j] = zero_map(dom, cod);
  }
  p.chi = chi;

  // Two isolated singular points: R is the sum of their local contributions.
  std::map<int, FGModule> local;
  for (int k : {north, south}) local[k + 1] = local[k + 1] + h[k + 1].torsion_part();
  for (const auto& [d, g] : local) {
    Extension e;
    auto c = chi.parts.find(d);
    auto c1 = chi.parts.find(d + 1);
    e.sub = c == chi.parts.end() ? FGModule::zero() : ker_coker(c->second).cokernel;
    e.quotient = c1 == chi.parts.end() ? FGModule::zero() : ker_coker(c1->second).kernel;
    e.total = g;
    e.note = "sum of the contributions of the two singular points";
    add_peripheral(p.peripheral, d, e);
  }

  const char* names[2] = {"north", "south"};
  int vals[2] = {north, south};
  for (int i = 0; i < 2; ++i) {
    StratumInfo s{names[i], n, vals[i], true, hh[n - 2 - vals[i]].torsion_part()};
    s.torsion_free = s.witness.is_zero();
    p.strata.push_back(s);
  }
  return p;
}

IntersectionProfile eval_isolated(int dimension, const std::vector<ManifoldAtom>& links, const std::vector<int>& values) {
  if (links.size() != values.size()) throw ValidationError("one perversity value per singular point is required");
  IntersectionProfile p;
  p.space = "isolated(";
  p.dimension = dimension;
  p.has_groups = false;
  std::map<int, FGModule> local;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const ManifoldAtom& l = links[i];
    l.check();
    if (l.dimension != dimension - 1)
      throw ValidationError("link " + l.name + " has dimension " + std::to_string(l.dimension) + ", expected " +
                            std::to_string(dimension - 1));
    check_value(dimension, values[i]);
    local[values[i] + 1] = local[values[i] + 1] + l.at(values[i] + 1).torsion_part();
    p.space += (i ? "," : "") + l.name;
    p.oriented = p.oriented && l.orientable;
    StratumInfo s{"a" + std::to_string(i + 1), dimension, values[i], true,
                  l.homology()[dimension - 2 - values[i]].torsion_part()};
    s.torsion_free = s.witness.is_zero();
    p.strata.push_back(s);
  }
  p.space += ")";
  for (const auto& [d, g] : local) {
    Extension e;
    e.total = g;
    e.note = "sum over the singular points";
    add_peripheral(p.peripheral, d, e);
  }
  return p;
}

IntersectionProfile eval_mapping_torus(const IntersectionProfile& link, const AutomorphismData& f) {
  if (!link.compact) throw ValidationError("mapping torus of a non-compact space");
  std::map<int, KerCoker> diff;
  bool identity = true;
  for (const auto& [k, e] : link.peripheral) {
    if (!e.total) throw ValidationError("R^" + std::to_string(k) + " of the link is not resolved");
    auto it = f.peripheral.find(k);
    if (it == f.peripheral.end()) throw ValidationError("f* missing on R^" + std::to_string(k));
    ModuleMap fk = ModuleMap::between(*e.total, *e.total, it->second);
    KerCoker kc = ker_coker(fk);
    if (!kc.kernel.is_zero() || !kc.cokernel.is_zero())
      throw ValidationError("f* is not an automorphism on R^" + std::to_string(k));
    Matrix id = Matrix::identity(e.total->number_of_generators());
    ModuleMap g = ModuleMap::between(*e.total, *e.total, it->second - id);
    diff[k] = ker_coker(g);
    identity = identity && ker_coker(g).kernel == *e.total;
  }
  for (const auto& [k, m] : f.peripheral)
    if (!link.peripheral.count(k) && m.rows() + m.cols() > 0)
      throw ValidationError("f* given on R^" + std::to_string(k) + ", which is zero");

  IntersectionProfile p;
  p.space = "mapping_torus(" + link.space + ")";
  p.dimension = link.dimension + 1;
  p.compact = true;
  p.oriented = link.oriented;
  p.has_groups = false;
  std::vector<int> degrees;
  for (const auto& [k, kc] : diff) {
    degrees.push_back(k);
    degrees.push_back(k + 1);
  }
  for (int d : degrees) {
    FGModule sub = diff.count(d - 1) ? diff[d - 1].cokernel : FGModule::zero();
    FGModule quo = diff.count(d) ? diff[d].kernel : FGModule::zero();
    Extension e = make_extension(sub, quo, "Mayer-Vietoris over the circle");
    if (identity && !e.resolved()) {
      e.total = sub + quo;
      e.note = "f* = id: product with a circle";
    }
    add_peripheral(p.peripheral, d, e);
  }
  for (StratumInfo s : link.strata) {
    s.name += "xS1";
    p.strata.push_back(s);
  }
  return p;
}

GradedModule relative_suspension(const ManifoldAtom& m, const std::vector<int>& p, const std::vector<int>& q) {
  m.check();
  auto per_apex = [](const std::vector<int>& v) {
    if (v.size() == 1) return std::vector<int>{v[0], v[0]};
    if (v.size() == 2) return v;
    throw ValidationError("a suspension takes one or two apex values");
  };
  std::vector<int> pp = per_apex(p), qq = per_apex(q);
  const int n = m.dimension + 1;
  GradedModule out;
  for (int i = 0; i < 2; ++i) {
    check_value(n, pp[i]);
    check_value(n, qq[i]);
    if (pp[i] > qq[i]) throw ValidationError("relative complex needs p <= q on every stratum");
    for (int j = pp[i] + 1; j <= qq[i]; ++j) out.add(j, m.at(j));
  }
  return out;
}

}  // namespace strathom
