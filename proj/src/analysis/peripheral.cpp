#include "strathom/analysis/peripheral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strathom/algebra/lattice.hpp"

namespace strathom {

namespace {

Integer order_or_one(const FGModule& m) { return m.is_zero() ? Integer(1) : m.order(); }

Integer graded_order(const GradedModule& g, int k) { return order_or_one(g[k]); }

CheckResult result(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? "pass" : "fail", detail};
}

CheckResult skipped(const std::string& name, const std::string& status, const std::string& why) {
  return {name, status, why};
}

std::set<int> chi_degrees(const GradedModuleMap& chi, int n) {
  std::set<int> d;
  for (const auto& [k, m] : chi.parts) d.insert(k);
  for (int k = 0; k <= n + 1; ++k) d.insert(k);
  return d;
}

KerCoker chi_at(const GradedModuleMap& chi, int k) {
  auto it = chi.parts.find(k);
  if (it == chi.parts.end()) return {};
  return ker_coker(it->second);
}

}  // namespace

Components components(const GradedModuleMap& chi) {
  Components c;
  for (const auto& [k, f] : chi.parts) {
    f.validate();
    const Matrix sd = saturation(f.domain.relations), sc = saturation(f.codomain.relations);
    const std::size_t g = f.domain.generators, h = f.codomain.generators;
    SubQuotient free_dom(Matrix::identity(g), Matrix::hstack(sd, f.domain.relations));
    SubQuotient free_cod(Matrix::identity(h), Matrix::hstack(sc, f.codomain.relations));
    SubQuotient tors_dom(Matrix::hstack(sd, f.domain.relations), f.domain.relations);
    SubQuotient tors_cod(Matrix::hstack(sc, f.codomain.relations), f.codomain.relations);
    KerCoker fr = ker_coker(induced_map(free_dom, free_cod, f.matrix));
    KerCoker tr = ker_coker(induced_map(tors_dom, tors_cod, f.matrix));
    if (!fr.cokernel.is_torsion() || !fr.kernel.is_zero()) c.non_torsion_degrees.push_back(k);
    c.F.set(k, fr.cokernel);
    c.T_K.set(k, tr.kernel);
    c.T_C.set(k, tr.cokernel);
  }
  return c;
}

std::map<int, Extension> peripheral(const GradedModuleMap& chi) {
  std::map<int, Extension> r;
  if (chi.parts.empty()) return r;
  const int lo = chi.parts.begin()->first, hi = chi.parts.rbegin()->first;
  for (int k = lo - 1; k <= hi; ++k) {
    Extension e = make_extension(chi_at(chi, k).cokernel, chi_at(chi, k + 1).kernel, "mapping cone of chi");
    if (!e.is_zero()) r[k] = e;
  }
  return r;
}

bool DualityReport::all_checks_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
}

std::string perversity_name(const std::vector<int>& values) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << "]";
  return os.str();
}

DualityReport analyze(const IntersectionProfile& p, const IntersectionProfile* dual) {
  DualityReport r;
  r.profile = p;
  const int n = p.dimension;
  if (p.chi) r.comps = components(*p.chi);

  if (r.comps) {
    r.verdicts.torsion_free_nonsingular = r.comps->F.is_zero();
    r.verdicts.torsion_nonsingular = r.comps->T_K.is_zero() && r.comps->T_C.is_zero();
  }
  if (p.peripheral_known) {
    bool zero = std::all_of(p.peripheral.begin(), p.peripheral.end(),
                            [](const auto& kv) { return kv.second.order() == 1; });
    r.verdicts.poincare_duality = zero;
  }
  if (p.strata_known) r.verdicts.locally_torsion_free = p.locally_torsion_free();

  auto& checks = r.checks;

  // Torsion: R and the three components.
  if (p.peripheral_known) {
    bool ok = true;
    std::string bad;
    for (const auto& [k, e] : p.peripheral) {
      bool t = e.sub.is_torsion() && e.quotient.is_torsion() && (!e.total || e.total->is_torsion());
      if (!t) ok = false, bad += " R^" + std::to_string(k);
    }
    if (r.comps && !r.comps->non_torsion_degrees.empty()) {
      ok = false;
      for (int k : r.comps->non_torsion_degrees) bad += " F^" + std::to_string(k);
    }
    checks.push_back(result("peripheral groups are torsion", ok, ok ? "" : "non-torsion:" + bad));
  } else {
    checks.push_back(skipped("peripheral groups are torsion", "insufficient data", "R not computed by this engine"));
  }

  if (p.chi && p.peripheral_known) {
    bool ok = true;
    std::ostringstream d;
    for (int k : chi_degrees(*p.chi, n)) {
      Integer expect = order_or_one(chi_at(*p.chi, k).cokernel) * order_or_one(chi_at(*p.chi, k + 1).kernel);
      auto it = p.peripheral.find(k);
      Integer got = it == p.peripheral.end() ? Integer(1) : it->second.order();
      if (got != expect) ok = false, d << " k=" << k << ": " << got << " vs " << expect;
    }
    checks.push_back(result("|R^k| = |coker chi^k| |ker chi^k+1|", ok, d.str()));
  } else {
    checks.push_back(skipped("|R^k| = |coker chi^k| |ker chi^k+1|", "insufficient data", "chi unknown"));
  }

  if (r.comps) {
    bool ok1 = true, ok2 = true;
    std::ostringstream d1, d2;
    for (int k : chi_degrees(*p.chi, n)) {
      Integer coker = order_or_one(chi_at(*p.chi, k).cokernel);
      Integer tc = graded_order(r.comps->T_C, k), f = graded_order(r.comps->F, k);
      Integer tk1 = graded_order(r.comps->T_K, k + 1);
      if (coker != tc * f) ok1 = false, d1 << " k=" << k;
      if (p.peripheral_known) {
        auto it = p.peripheral.find(k);
        Integer rk = it == p.peripheral.end() ? Integer(1) : it->second.order();
        if (rk != tc * f * tk1) ok2 = false, d2 << " k=" << k << ": " << rk << " vs " << tc << "*" << f << "*" << tk1;
      }
    }
    checks.push_back(result("|coker chi^k| = |T_C^k| |F^k|", ok1, d1.str()));
    if (p.peripheral_known)
      checks.push_back(result("|R^k| / |T_C^k| = |F^k| |T_K^k+1|", ok2, d2.str()));
    if (r.verdicts.poincare_duality) {
      bool coherent = *r.verdicts.poincare_duality ==
                      (*r.verdicts.torsion_free_nonsingular && *r.verdicts.torsion_nonsingular);
      checks.push_back(result("duality iff both pairings non-singular", coherent, ""));
    }
  } else {
    checks.push_back(skipped("|coker chi^k| = |T_C^k| |F^k|", "insufficient data", "chi unknown"));
    checks.push_back(skipped("|R^k| / |T_C^k| = |F^k| |T_K^k+1|", "insufficient data", "chi unknown"));
    checks.push_back(skipped("duality iff both pairings non-singular", "insufficient data", "chi unknown"));
  }

  if (!p.oriented) {
    checks.push_back(skipped("locally torsion free implies duality", "not applicable", "space is not oriented"));
  } else if (r.verdicts.locally_torsion_free && r.verdicts.poincare_duality) {
    bool ok = !*r.verdicts.locally_torsion_free || *r.verdicts.poincare_duality;
    checks.push_back(result("locally torsion free implies duality", ok, ""));
  } else {
    checks.push_back(skipped("locally torsion free implies duality", "insufficient data", ""));
  }

  // Checks that pair p with its complementary perversity.
  const bool closed = p.compact && p.oriented;
  const std::string why = !closed ? "space is not compact and oriented" : "no profile at the dual perversity";
  const bool paired = closed && dual;
  std::optional<Components> dc;
  if (paired && dual->chi) dc = components(*dual->chi);

  if (paired && r.comps && dc) {
    bool ok = true;
    std::ostringstream d;
    for (int k = 0; k <= n + 1; ++k)
      if (!(r.comps->T_K[k] == dc->T_C[n + 1 - k])) ok = false, d << " k=" << k;
    checks.push_back(result("T_K^k(p) = T_C^{n+1-k}(Dp)", ok, d.str()));
  } else {
    checks.push_back(skipped("T_K^k(p) = T_C^{n+1-k}(Dp)", paired ? "insufficient data" : "not applicable",
                             paired ? "chi unknown" : why));
  }

  if (paired && p.peripheral_known && dual->peripheral_known) {
    bool ok = true, orders_only = false;
    std::ostringstream d;
    for (int k = 0; k <= n; ++k) {
      auto a = p.peripheral.find(k);
      auto b = dual->peripheral.find(n - k);
      Extension ea = a == p.peripheral.end() ? Extension{{}, {}, FGModule::zero(), ""} : a->second;
      Extension eb = b == dual->peripheral.end() ? Extension{{}, {}, FGModule::zero(), ""} : b->second;
      if (ea.total && eb.total) {
        if (!(*ea.total == *eb.total)) ok = false, d << " k=" << k;
      } else {
        orders_only = true;
        if (ea.order() != eb.order()) ok = false, d << " k=" << k << " (orders)";
      }
    }
    if (orders_only) d << " compared by order where an extension is unresolved";
    checks.push_back(result("R^k(p) = R^{n-k}(Dp)", ok, d.str()));
  } else {
    checks.push_back(skipped("R^k(p) = R^{n-k}(Dp)", paired ? "insufficient data" : "not applicable",
                             paired ? "R unknown" : why));
  }

  if (paired && p.has_groups && dual->has_groups) {
    bool okf = true, okt = true;
    std::ostringstream df, dt;
    for (int k = 0; k <= n; ++k) {
      const FGModule& ih_p = dual->gh_dp[k];
      if (!(ih_p.free_part() == p.blowup[n - k].free_part())) okf = false, df << " k=" << k;
      if (!(ih_p.torsion_part() == p.blowup[n - k + 1].torsion_part())) okt = false, dt << " k=" << k;
    }
    checks.push_back(result("F IH^k_p = F H^{n-k}_p", okf, df.str()));
    checks.push_back(result("T IH^k_p = T H^{n-k+1}_p", okt, dt.str()));
  } else {
    for (const char* name : {"F IH^k_p = F H^{n-k}_p", "T IH^k_p = T H^{n-k+1}_p"})
      checks.push_back(skipped(name, paired ? "insufficient data" : "not applicable",
                               paired ? "groups unknown" : why));
  }

  // Over a field the truncations do not follow integral universal
  // coefficients, so only ranks are compared here.
  if (p.has_groups) {
    bool ok = true;
    std::ostringstream d;
    for (int k = 0; k <= n; ++k)
      if (p.blowup[k].free_rank() != p.gh_dp[k].free_rank()) ok = false, d << " k=" << k;
    checks.push_back(result("rank H^k_p = rank IH^k_Dp", ok, d.str()));
  }
  return r;
}

}  // namespace strathom
