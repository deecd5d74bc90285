#include <iomanip>
#include <sstream>

#include "strathom/cli/report.hpp"

namespace strathom::cli {

namespace {

ordered_json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json optional_bool(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "unknown";
  return *b ? "yes" : "no";
}

ordered_json ints(const std::vector<int>& v) {
  ordered_json a = ordered_json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::string module_text(const FGModule& m, const std::string& ring) {
  if (ring == "Z" || m.is_zero()) return m.to_string();
  return m.free_rank() == 1 ? ring : ring + "^" + std::to_string(m.free_rank());
}

}  // namespace

ordered_json module_json(const FGModule& m) {
  ordered_json t = ordered_json::array();
  for (const auto& d : m.torsion()) t.push_back(integer_json(d));
  return ordered_json{{"rank", m.free_rank()}, {"torsion", t}};
}

ordered_json graded_json(const GradedModule& g) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, m] : g.entries()) o[std::to_string(k)] = module_json(m);
  return o;
}

ordered_json report_json(const DualityReport& r, const std::string& ring, const std::string& digest) {
  const IntersectionProfile& p = r.profile;
  ordered_json j;
  j["tool"] = "strathom";
  j["version"] = kVersion;
  j["input_digest"] = "sha256:" + digest;
  j["space"] = p.space;
  j["engine"] = r.engine;
  j["coefficients"] = ring;
  j["dimension"] = p.dimension;
  j["perversity"] = {{"values", ints(p.values())}, {"dual", ints(p.dual_values())}};

  ordered_json strata = ordered_json::array();
  for (const auto& s : p.strata) {
    ordered_json o{{"name", s.name}, {"codimension", s.codimension}, {"value", s.value}};
    if (p.strata_known) {
      o["torsion_free"] = s.torsion_free;
      o["witness"] = module_json(s.witness);
    } else {
      o["torsion_free"] = nullptr;
      o["witness"] = nullptr;
    }
    strata.push_back(o);
  }
  j["strata"] = strata;

  if (p.has_groups) {
    j["groups"] = {{"H_p", graded_json(p.blowup)},
                   {"IH^Dp", graded_json(p.gh_dp)},
                   {"IH_Dp", graded_json(p.ih_dp)},
                   {"IH_p", graded_json(p.ih_p)}};
  } else {
    j["groups"] = nullptr;
  }

  if (p.chi) {
    ordered_json chi = ordered_json::object();
    for (const auto& [k, f] : p.chi->parts) {
      ordered_json m = ordered_json::array();
      for (std::size_t a = 0; a < f.matrix.rows(); ++a) {
        ordered_json row = ordered_json::array();
        for (std::size_t b = 0; b < f.matrix.cols(); ++b) row.push_back(integer_json(f.matrix(a, b)));
        m.push_back(row);
      }
      chi[std::to_string(k)] = {
          {"domain", module_json(f.domain.module())}, {"codomain", module_json(f.codomain.module())}, {"matrix", m}};
    }
    j["chi"] = chi;
  } else {
    j["chi"] = nullptr;
  }

  if (p.peripheral_known) {
    ordered_json per = ordered_json::object();
    for (const auto& [k, e] : p.peripheral) {
      ordered_json o{{"sub", module_json(e.sub)}, {"quotient", module_json(e.quotient)}};
      o["total"] = e.total ? module_json(*e.total) : ordered_json(nullptr);
      const bool torsion = e.total ? e.total->is_torsion() : e.sub.is_torsion() && e.quotient.is_torsion();
      o["order"] = torsion ? integer_json(e.order()) : ordered_json(nullptr);
      o["note"] = e.note;
      per[std::to_string(k)] = o;
    }
    j["peripheral"] = per;
  } else {
    j["peripheral"] = nullptr;
  }

  if (r.comps) {
    j["components"] = {
        {"F", graded_json(r.comps->F)}, {"T_K", graded_json(r.comps->T_K)}, {"T_C", graded_json(r.comps->T_C)}};
  } else {
    j["components"] = nullptr;
  }

  j["verdicts"] = {{"torsion_free_nonsingular", optional_bool(r.verdicts.torsion_free_nonsingular)},
                   {"torsion_nonsingular", optional_bool(r.verdicts.torsion_nonsingular)},
                   {"poincare_duality", optional_bool(r.verdicts.poincare_duality)},
                   {"locally_torsion_free", optional_bool(r.verdicts.locally_torsion_free)}};

  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  j["checks"] = checks;
  j["notes"] = p.notes;
  return j;
}

std::string report_text(const DualityReport& r, const std::string& ring) {
  const IntersectionProfile& p = r.profile;
  std::ostringstream os;
  os << "space " << p.space << "  (dimension " << p.dimension << ", engine " << r.engine << ", ring " << ring
     << ")\n";
  os << "perversity " << perversity_name(p.values()) << "  dual " << perversity_name(p.dual_values()) << "\n";
  for (const auto& s : p.strata) {
    os << "  stratum " << s.name << ": codimension " << s.codimension << ", value " << s.value;
    if (p.strata_known)
      os << ", locally torsion free " << (s.torsion_free ? "yes" : "no (" + s.witness.to_string() + ")");
    os << "\n";
  }

  if (p.has_groups) {
    int top = p.dimension + 1;
    os << "\n" << std::left << std::setw(5) << "deg";
    for (const char* h : {"H_p", "IH^Dp", "IH_Dp", "IH_p"}) os << std::setw(18) << h;
    os << "\n";
    for (int k = 0; k <= top; ++k) {
      if (p.blowup[k].is_zero() && p.gh_dp[k].is_zero() && p.ih_dp[k].is_zero() && p.ih_p[k].is_zero()) continue;
      os << std::setw(5) << k;
      for (const GradedModule* g : {&p.blowup, &p.gh_dp, &p.ih_dp, &p.ih_p}) os << std::setw(18) << module_text((*g)[k], ring);
      os << "\n";
    }
  }

  if (p.peripheral_known) {
    os << "\nperipheral R:";
    if (p.peripheral.empty()) os << " 0";
    os << "\n";
    for (const auto& [k, e] : p.peripheral)
      os << "  R^" << k << " = " << e.to_string() << "   [0 -> " << e.sub.to_string() << " -> R -> "
         << e.quotient.to_string() << " -> 0]\n";
  }
  if (r.comps) {
    os << "\ncomponents:\n";
    os << "  F   " << r.comps->F.to_string() << "\n";
    os << "  T_K " << r.comps->T_K.to_string() << "\n";
    os << "  T_C " << r.comps->T_C.to_string() << "\n";
  }
  os << "\nverdicts:\n";
  os << "  torsion free pairing non-singular  " << yes_no(r.verdicts.torsion_free_nonsingular) << "\n";
  os << "  torsion pairing non-singular       " << yes_no(r.verdicts.torsion_nonsingular) << "\n";
  os << "  Poincare duality                   " << yes_no(r.verdicts.poincare_duality) << "\n";
  os << "  locally torsion free               " << yes_no(r.verdicts.locally_torsion_free) << "\n";
  os << "\nchecks:\n";
  for (const auto& c : r.checks) {
    os << "  [" << c.status << "] " << c.name;
    if (!c.detail.empty()) os << ":" << (c.detail.front() == ' ' ? "" : " ") << c.detail;
    os << "\n";
  }
  for (const auto& n : p.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace strathom::cli
