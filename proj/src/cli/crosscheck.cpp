#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "strathom/cli/report.hpp"
#include "strathom/topology/blowup_cochains.hpp"
#include "strathom/topology/intersection_chains.hpp"

namespace strathom::cli {

namespace {

using Kind = SpaceExpr::Kind;

// Cone depth of every singular stratum, in symbolic evaluation order. The
// simplicial complex lists strata by vertex level, which is this depth.
void depths(const SpaceExpr& e, int d, std::vector<int>& out) {
  switch (e.kind) {
    case Kind::Cone:
      depths(e.args.front(), d + 1, out);
      out.push_back(d);
      break;
    case Kind::Suspension:
      depths(e.args.front(), d + 1, out);
      out.push_back(d);
      out.push_back(d);
      break;
    case Kind::Union:
      for (const auto& a : e.args) depths(a, d, out);
      break;
    default:
      break;
  }
}

std::string compare(const GradedModule& symbolic, const GradedModule& simplicial, int top) {
  std::ostringstream d;
  for (int k = 0; k <= top; ++k)
    if (!(symbolic[k] == simplicial[k]))
      d << " k=" << k << ": " << symbolic[k].to_string() << " vs " << simplicial[k].to_string();
  return d.str();
}

CrossRow row(const std::string& space, const std::string& perv, const std::string& item, const std::string& detail) {
  return {space, perv, item, detail.empty() ? "pass" : "fail", detail};
}

}  // namespace

std::vector<CrossRow> crosscheck(const InputFile& in, const SpaceExpr& e) {
  const std::string space = e.to_string();
  std::vector<CrossRow> rows;
  if (auto why = simplicial_obstruction(in, e)) {
    rows.push_back({space, "", "engine comparison", "symbolic-only", *why});
    return rows;
  }
  const FilteredComplex x = realize(in, e);
  const int n = x.dimension();
  const std::vector<int> singular = x.singular_strata();
  std::string why;
  const bool symbolic = has_symbolic(in, e, &why);

  // Symbolic order -> simplicial order of the singular strata.
  std::vector<int> codims;
  std::vector<std::size_t> symbolic_index(singular.size());
  std::iota(symbolic_index.begin(), symbolic_index.end(), 0);
  if (symbolic) {
    codims = stratum_codimensions(in, e);
    std::vector<int> d;
    depths(e, 0, d);
    if (d.size() != singular.size() || codims.size() != singular.size())
      throw ValidationError("stratum count differs between the engines for " + space);
    std::stable_sort(symbolic_index.begin(), symbolic_index.end(), [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    // symbolic_index[i]: symbolic position of the i-th simplicial stratum
    for (std::size_t i = 0; i < singular.size(); ++i)
      if (x.strata()[static_cast<std::size_t>(singular[i])].codim != codims[symbolic_index[i]])
        throw ValidationError("stratum codimensions differ between the engines for " + space);
  } else {
    for (int s : singular) codims.push_back(x.strata()[static_cast<std::size_t>(s)].codim);
    rows.push_back({space, "", "engine comparison", "simplicial-only", why});
  }

  for (const auto& values : all_assignments(codims)) {
    std::vector<int> simplicial_values(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) simplicial_values[i] = values[symbolic_index[i]];
    const Perversity p = from_singular_values(x, simplicial_values.empty() ? std::vector<int>{0} : simplicial_values);
    const Perversity dp = complementary(x, p);
    const std::string name = perversity_name(values);

    if (symbolic) {
      IntersectionProfile s = evaluate(in, e, listed_values(values));
      IntersectionProfile c = simplicial_profile(x, p, Coefficients::integers());
      rows.push_back(row(space, name, "IH_p", compare(s.ih_p, c.ih_p, n)));
      rows.push_back(row(space, name, "IH_Dp", compare(s.ih_dp, c.ih_dp, n)));
      rows.push_back(row(space, name, "IH^Dp", compare(s.gh_dp, c.gh_dp, n + 1)));
      rows.push_back(row(space, name, "H_p", compare(s.blowup, c.blowup, n + 1)));
    }
    for (const char* f : {"Q", "F2", "F3"}) {
      const Coefficients ring = Coefficients::parse(f);
      GradedModule h = blowup_cohomology(x, p, ring), g = intersection_cohomology(x, dp, ring);
      std::ostringstream d;
      for (int k = 0; k <= n + 1; ++k)
        if (h[k].free_rank() != g[k].free_rank()) d << " k=" << k << ": " << h[k].free_rank() << " vs " << g[k].free_rank();
      rows.push_back(row(space, name, std::string("dim H_p = dim IH^Dp over ") + f, d.str()));
    }
  }
  return rows;
}

ordered_json crosscheck_json(const std::vector<CrossRow>& rows, const std::string& digest) {
  ordered_json j;
  j["tool"] = "strathom";
  j["version"] = kVersion;
  j["input_digest"] = "sha256:" + digest;
  ordered_json a = ordered_json::array();
  for (const auto& r : rows)
    a.push_back(
        {{"space", r.space}, {"perversity", r.perversity}, {"item", r.item}, {"status", r.status}, {"detail", r.detail}});
  j["rows"] = a;
  return j;
}

std::string crosscheck_text(const std::vector<CrossRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << std::left << std::setw(16) << r.status.substr(0, 15) << std::setw(20) << r.space << std::setw(8)
       << r.perversity << r.item;
    if (!r.detail.empty()) os << ":" << (r.detail.front() == ' ' ? "" : " ") << r.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace strathom::cli
