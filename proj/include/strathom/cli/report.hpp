#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "strathom/analysis/peripheral.hpp"
#include "strathom/cli/input.hpp"
#include "strathom/topology/stratified_complex.hpp"

namespace strathom::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Groups of a filtered complex at p from the simplicial engine. chi, R and
/// the link data are not produced, so those parts are marked unknown.
IntersectionProfile simplicial_profile(const FilteredComplex& x, const Perversity& p, const Coefficients& ring);

/// No boundary ((n-1)-simplices in exactly two n-simplices) and H_n free of
/// rank the number of components.
bool closed_oriented(const FilteredComplex& x);

/// Values on the singular strata only, in stratum order.
std::vector<int> singular_values(const FilteredComplex& x, const Perversity& p);
Perversity from_singular_values(const FilteredComplex& x, const std::vector<int>& values);

using ordered_json = nlohmann::ordered_json;

ordered_json module_json(const FGModule& m);
ordered_json graded_json(const GradedModule& g);
ordered_json report_json(const DualityReport& r, const std::string& ring, const std::string& digest);
std::string report_text(const DualityReport& r, const std::string& ring);

struct CrossRow {
  std::string space;
  std::string perversity;
  std::string item;
  std::string status;  // pass, fail, symbolic-only, simplicial-only
  std::string detail;
};

/// Engine comparison for every admissible assignment of the expression, plus
/// field-dimension checks of the simplicial groups over Q, F2 and F3.
std::vector<CrossRow> crosscheck(const InputFile& in, const SpaceExpr& e);
ordered_json crosscheck_json(const std::vector<CrossRow>& rows, const std::string& digest);
std::string crosscheck_text(const std::vector<CrossRow>& rows);

}  // namespace strathom::cli
