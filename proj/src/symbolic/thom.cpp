#include <algorithm>
#include <functional>
#include <set>

#include "strathom/algebra/lattice.hpp"
#include "strathom/algebra/smith.hpp"
#include "strathom/symbolic/profile.hpp"

namespace strathom {

namespace {

std::set<long> prime_divisors(const FGModule& m) {
  std::set<long> out;
  for (const Integer& d : m.torsion()) {
    long v = d.get_si();
    for (long q = 2; q * q <= v; ++q)
      while (v % q == 0) out.insert(q), v /= q;
    if (v > 1) out.insert(v);
  }
  return out;
}

std::vector<int> p_exponents(const FGModule& m, long p) {
  std::vector<int> e;
  for (const Integer& d : m.torsion()) {
    long v = d.get_si();
    int k = 0;
    while (v % p == 0) v /= p, ++k;
    if (k > 0) e.push_back(k);
  }
  std::sort(e.rbegin(), e.rend());
  return e;
}

int part(const std::vector<int>& v, std::size_t i) { return i < v.size() ? v[i] : 0; }

bool dominated(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += part(a, i);
    sb += part(b, i);
    if (sa > sb) return false;
  }
  return true;
}

/// Partitions of the p-group of an extension of nu by mu with the given
/// number of cyclic factors, filtered by the necessary Littlewood-Richardson
/// conditions.
std::vector<std::vector<int>> extension_candidates(const std::vector<int>& mu, const std::vector<int>& nu,
                                                   std::size_t parts) {
  int total = 0;
  for (int x : mu) total += x;
  for (int x : nu) total += x;
  std::vector<int> sum, uni = mu;
  for (std::size_t i = 0; i < std::max(mu.size(), nu.size()); ++i) sum.push_back(part(mu, i) + part(nu, i));
  uni.insert(uni.end(), nu.begin(), nu.end());
  std::sort(uni.rbegin(), uni.rend());

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (cur.size() == parts) {
      if (remaining != 0) return;
      for (std::size_t i = 0; i < parts; ++i)
        if (cur[i] < part(mu, i) || cur[i] < part(nu, i)) return;
      if (part(mu, parts) > 0 || part(nu, parts) > 0) return;
      if (dominated(cur, sum) && dominated(uni, cur)) out.push_back(cur);
      return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
      cur.push_back(x);
      rec(remaining - x, x);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

struct BaseData {
  TensorBasis tensor;
  std::map<int, Presentation> pres;
  CupAction euler;
  int dim = 0;

  const Presentation& at(int j) const {
    static const Presentation empty = Presentation::free(0);
    auto it = pres.find(j);
    return it == pres.end() ? empty : it->second;
  }
  std::size_t gens(int j) const { return at(j).generators; }
  /// Cup with e from degree j to j + 2.
  Matrix e(int j) const {
    auto it = euler.find(j);
    if (it != euler.end()) return it->second;
    return Matrix(gens(j + 2), gens(j));
  }
  ModuleMap map(int j) const { return ModuleMap{at(j), at(j + 2), e(j)}; }
};

BaseData base_data(const CircleBundle& b) {
  if (b.base.empty()) throw ValidationError("circle bundle needs a base");
  if (b.euler.size() != b.base.size()) throw ValidationError("Euler class needs one term per base factor");
  BaseData d;
  std::vector<GradedBasis> bases;
  std::vector<const CupAction*> acts;
  std::vector<Integer> coeffs;
  std::size_t torsion_factors = 0;
  for (std::size_t i = 0; i < b.base.size(); ++i) {
    const ManifoldAtom& a = b.base[i];
    a.check();
    if (!a.has_cup_basis) throw ValidationError("base factor " + a.name + " carries no cup actions");
    if (!a.cohomology().torsion_part().is_zero()) ++torsion_factors;
    d.dim += a.dimension;
    bases.push_back(a.basis);
    coeffs.push_back(b.euler[i].coefficient);
    acts.push_back(b.euler[i].coefficient == 0 ? nullptr : &a.cup(b.euler[i].cls));
  }
  if (torsion_factors > 1) throw ValidationError("circle bundle base may have torsion in at most one factor");
  d.tensor = tensor_basis(bases);
  for (const auto& [j, orders] : d.tensor.basis) d.pres[j] = Presentation::cyclic(orders);
  d.euler = tensor_action(d.tensor, bases, acts, coeffs);
  for (int j = 0; j <= d.dim; ++j) d.map(j).validate();
  return d;
}

/// dim H^j(S; F_p) for the circle bundle, from the mod p Gysin sequence.
std::map<int, std::size_t> mod_p_dims(const CircleBundle& b, long p) {
  std::vector<GradedBasis> bases;
  std::vector<ModPData> red;
  for (const ManifoldAtom& a : b.base) {
    red.push_back(a.reduce(p));
    GradedBasis g;
    for (const auto& [k, n] : red.back().dims)
      if (n > 0) g[k] = std::vector<Integer>(n, 0);
    bases.push_back(g);
  }
  std::vector<const CupAction*> acts;
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < b.base.size(); ++i) {
    coeffs.push_back(b.euler[i].coefficient);
    if (b.euler[i].coefficient == 0) {
      acts.push_back(nullptr);
      continue;
    }
    const std::string& cls = b.euler[i].cls;
    auto it = red[i].classes.find(canonical_class_name(cls));
    if (it == red[i].classes.end()) it = red[i].classes.find(cls);
    if (it == red[i].classes.end())
      throw ValidationError("no mod " + std::to_string(p) + " reduction of class " + cls + " on " + b.base[i].name);
    acts.push_back(&it->second);
  }
  TensorBasis t = tensor_basis(bases);
  CupAction e = tensor_action(t, bases, acts, coeffs);
  const Coefficients fp = Coefficients::prime_field(p);
  auto dim = [&](int j) -> std::size_t { return t.basis.count(j) ? t.basis.at(j).size() : 0; };
  auto rk = [&](int j) -> std::size_t { return e.count(j) ? rank(e.at(j), fp) : 0; };
  int top = 0;
  for (const auto& [j, v] : t.basis) top = std::max(top, j);
  std::map<int, std::size_t> out;
  for (int j = 0; j <= top + 1; ++j) out[j] = (dim(j) - rk(j - 2)) + (dim(j - 1) - rk(j - 1));
  return out;
}

}  // namespace

std::map<int, Extension> gysin_cohomology(const CircleBundle& b) {
  BaseData d = base_data(b);
  std::map<int, Extension> h;
  for (int j = 0; j <= d.dim + 1; ++j) {
    FGModule a = j >= 2 ? ker_coker(d.map(j - 2)).cokernel : d.at(j).module();
    FGModule q = j >= 1 ? ker_coker(d.map(j - 1)).kernel : FGModule::zero();
    h[j] = make_extension(a, q, "Gysin sequence");
  }

  // Remaining degrees: both ends nonzero and the quotient has torsion.
  // With a torsion sub, T H^j is an extension of T(quotient) by sub and each
  // p-part is pinned down by its number of cyclic factors when the necessary
  // Littlewood-Richardson conditions leave one candidate. With a free sub,
  // T H^j embeds in T(quotient); an elementary p-part is then fixed by that
  // count as well.
  std::map<int, std::map<long, std::vector<int>>> fixed;
  std::set<long> primes;
  for (const auto& [j, e] : h) {
    if (e.resolved()) continue;
    const FGModule tq = e.quotient.torsion_part();
    if (e.sub.is_torsion()) {
      auto pa = prime_divisors(e.sub), pq = prime_divisors(tq);
      for (long p : pa) {
        if (pq.count(p)) primes.insert(p);
        else fixed[j][p] = p_exponents(e.sub, p);
      }
      for (long p : pq)
        if (!pa.count(p)) fixed[j][p] = p_exponents(tq, p);
    } else if (e.sub.is_free()) {
      auto pq = prime_divisors(tq);
      primes.insert(pq.begin(), pq.end());
    }
  }
  for (long p : primes) {
    std::map<int, std::size_t> dims = mod_p_dims(b, p);
    // t_p(H^j) = dim H^j(S;F_p) - rank H^j - t_p(H^{j+1}), from the top down.
    std::map<int, long> tp;
    long above = 0;
    for (int j = d.dim + 1; j >= 0; --j) {
      long r = static_cast<long>(h[j].sub.free_rank() + h[j].quotient.free_rank());
      tp[j] = static_cast<long>(dims[j]) - r - above;
      above = tp[j];
    }
    for (auto& [j, e] : h) {
      if (e.resolved() || tp[j] < 0) continue;
      auto nu = p_exponents(e.quotient.torsion_part(), p);
      if (nu.empty()) continue;
      if (e.sub.is_torsion()) {
        auto mu = p_exponents(e.sub, p);
        if (mu.empty()) continue;
        auto cand = extension_candidates(mu, nu, static_cast<std::size_t>(tp[j]));
        if (cand.size() == 1) fixed[j][p] = cand.front();
      } else if (e.sub.is_free()) {
        bool elementary = std::all_of(nu.begin(), nu.end(), [](int x) { return x == 1; });
        if (tp[j] == 0) fixed[j][p] = {};
        else if (elementary && static_cast<std::size_t>(tp[j]) <= nu.size())
          fixed[j][p] = std::vector<int>(static_cast<std::size_t>(tp[j]), 1);
      }
    }
  }
  for (auto& [j, e] : h) {
    if (e.resolved() || !(e.sub.is_torsion() || e.sub.is_free())) continue;
    std::set<long> ps = prime_divisors(e.sub);
    auto pq = prime_divisors(e.quotient.torsion_part());
    ps.insert(pq.begin(), pq.end());
    std::vector<Integer> orders;
    bool ok = true;
    for (long p : ps) {
      auto it = fixed[j].find(p);
      if (it == fixed[j].end()) {
        ok = false;
        break;
      }
      for (int x : it->second) {
        Integer v = 1;
        for (int i = 0; i < x; ++i) v *= p;
        orders.push_back(v);
      }
    }
    if (!ok) continue;
    e.total = FGModule::from_orders(e.sub.free_rank() + e.quotient.free_rank(), orders);
    e.note += ", resolved by mod p ranks";
  }
  return h;
}

namespace {

GradedModule homology_from_cohomology(const GradedModule& h) {
  GradedModule out;
  if (h.is_zero()) return out;
  for (int j = 0; j <= h.max_degree(); ++j) out.set(j, h[j].free_part() + h[j + 1].torsion_part());
  return out;
}

struct ThomGroups {
  GradedModule blowup, gh;
  std::optional<GradedModuleMap> chi;
};

std::optional<Integer> torsion_order(const Extension& e) {
  if (e.total) return e.total->torsion_part().order();
  if (e.sub.is_torsion()) return e.sub.order() * e.quotient.torsion_part().order();
  return std::nullopt;
}

ThomGroups thom_groups(const BaseData& d, const std::map<int, Extension>& link, int k) {
  const int n = d.dim + 2;
  auto H = [&](int j) { return d.at(j).module(); };
  ThomGroups t;
  for (int j = 0; j <= n; ++j) {
    if (j <= k) t.blowup.set(j, H(j)), t.gh.set(j, H(j));
    if (j >= k + 3) t.blowup.set(j, H(j - 2)), t.gh.set(j, H(j - 2));
  }

  // Degree k+1: im(e: H^{k-1} -> H^{k+1}) inside the classes whose pullback
  // to the link is torsion.
  const Matrix r1 = d.at(k + 1).relations;
  const Matrix im = Matrix::hstack(d.e(k - 1), r1);
  SubQuotient dom1(im, r1), cod1(Matrix::hstack(saturation(im), r1), r1);
  t.blowup.set(k + 1, dom1.module());
  t.gh.set(k + 1, cod1.module());

  // Degree k+2: H^k(B) / K with K the image of T H^{k+1}(link) under
  // integration along the fibre, a subgroup of T(ker e) of known order.
  const std::size_t gk = d.gens(k);
  const Matrix rk = d.at(k).relations;
  const Matrix ker_e = lattice_preimage(d.e(k), d.at(k + 2).relations);
  const Matrix tker = gk ? Matrix::hstack(lattice_intersection(ker_e, saturation(rk)), rk) : Matrix(0, 0);
  const FGModule tker_module = SubQuotient(tker, rk).module();
  std::optional<Integer> th = torsion_order(link.at(k + 1));
  std::optional<Matrix> lk;
  if (th) {
    Integer kk = *th / link.at(k + 1).sub.torsion_part().order();
    if (kk == 1) lk = rk;
    else if (kk == tker_module.order()) lk = tker;
  }
  SubQuotient domk(Matrix::identity(gk), rk);
  t.blowup.set(k + 2, domk.module());
  if (!lk) return t;
  SubQuotient codk(Matrix::identity(gk), *lk);
  t.gh.set(k + 2, codk.module());

  GradedModuleMap chi;
  for (int j = 0; j <= n; ++j) {
    if (j == k + 1) chi.parts[j] = induced_map(dom1, cod1, Matrix::identity(d.gens(k + 1)));
    else if (j == k + 2) chi.parts[j] = induced_map(domk, codk, Matrix::identity(gk));
    else if (!t.blowup[j].is_zero()) chi.parts[j] = ModuleMap::identity(t.blowup[j]);
  }
  t.chi = chi;
  return t;
}

}  // namespace

IntersectionProfile eval_thom_circle(const CircleBundle& b, int k) {
  BaseData d = base_data(b);
  const int n = d.dim + 2;
  if (k < 0 || k > n - 2) throw ValidationError("perversity value " + std::to_string(k) + " outside [0, " +
                                                std::to_string(n - 2) + "]");
  std::map<int, Extension> link = gysin_cohomology(b);
  IntersectionProfile p;
  p.space = "thom(";
  for (std::size_t i = 0; i < b.base.size(); ++i) {
    p.space += (i ? "x" : "") + b.base[i].name;
    p.oriented = p.oriented && b.base[i].orientable;
  }
  p.space += ")";
  p.dimension = n;

  ThomGroups t = thom_groups(d, link, k);
  p.blowup = t.blowup;
  p.chi = t.chi;
  if (!t.chi) {
    p.has_groups = false;
    p.notes.push_back("IH^" + std::to_string(k + 2) + " not determined by the Gysin data");
  } else {
    p.gh_dp = t.gh;
    p.ih_dp = homology_from_cohomology(t.gh);
    ThomGroups dual = thom_groups(d, link, n - 2 - k);
    if (dual.chi) p.ih_p = homology_from_cohomology(dual.gh);
    else p.notes.push_back("IH_*^p not determined by the Gysin data");
  }

  const Extension& l1 = link.at(k + 1);
  Extension r;
  if (t.chi) {
    r.sub = ker_coker(t.chi->parts.at(k + 1)).cokernel;
    r.quotient = ker_coker(t.chi->parts.at(k + 2)).kernel;
  } else {
    r.sub = l1.sub.torsion_part();
    r.quotient = l1.quotient.torsion_part();
  }
  r.note = "torsion of H^" + std::to_string(k + 1) + " of the link";
  if (l1.total) {
    r.total = l1.total->torsion_part();
  } else if (!t.chi && !l1.sub.is_torsion()) {
    // Torsion of the link is not an extension of the torsion ends here.
    p.peripheral_known = false;
    p.notes.push_back("R^" + std::to_string(k + 1) + " depends on an unresolved Gysin extension");
  } else if (r.sub.is_zero() || r.quotient.is_zero()) {
    r.total = r.sub + r.quotient;
  }
  if (p.peripheral_known && (!r.is_zero() || (r.total && !r.total->is_zero()))) p.peripheral[k + 1] = r;

  StratumInfo apex{"apex", n, k, true, FGModule::zero()};
  const Extension& w = link.at(n - 1 - k);
  if (w.total) {
    apex.witness = w.total->torsion_part();
    apex.torsion_free = apex.witness.is_zero();
  } else {
    p.strata_known = false;
    p.notes.push_back("link torsion in degree " + std::to_string(n - 1 - k) + " is an unresolved extension");
  }
  p.strata.push_back(apex);
  return p;
}

}  // namespace strathom
