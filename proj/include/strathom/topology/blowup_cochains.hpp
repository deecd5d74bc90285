#pragma once

#include <map>
#include <vector>

#include "strathom/algebra/chain_complex.hpp"
#include "strathom/topology/intersection_chains.hpp"
#include "strathom/topology/stratified_complex.hpp"

namespace strathom {

/// Basis tensor 1_(F,eps) = 1_(F0,eps0) x ... x 1_(F_{n-1},eps_{n-1}) x 1_(F_n).
/// F_i is the level-i part of `face`; bit i of `cone_vertex` is eps_i. A
/// factor with empty F_i always has eps_i = 1 (the cone vertex alone).
struct BlowupCell {
  Simplex face;
  unsigned cone_vertex = 0;

  friend bool operator<(const BlowupCell& a, const BlowupCell& b) {
    return a.face != b.face ? a.face < b.face : a.cone_vertex < b.cone_vertex;
  }
  friend bool operator==(const BlowupCell& a, const BlowupCell& b) {
    return a.face == b.face && a.cone_vertex == b.cone_vertex;
  }
};

/// Degree sum_{i<n}(dim F_i + eps_i) + dim F_n, restricted to factors i > from.
int cell_degree(const FilteredComplex& x, const BlowupCell& c, int from = -1);

/// l-perverse degree: kMinusInfinity if eps_{n-l} = 1, else |c|_{>n-l}.
int local_perverse_degree(const FilteredComplex& x, const BlowupCell& c, int l);

/// All cells over the regular faces of s (s itself if `faces` is false).
std::vector<BlowupCell> cells_over(const FilteredComplex& x, const Simplex& s, bool faces = true);

/// Boundary of a cell in the dual cellular chain complex (Koszul signs). The
/// coboundary of the blown-up complex is its transpose.
std::vector<std::pair<BlowupCell, int>> cell_boundary(const FilteredComplex& x, const BlowupCell& c);

struct BlowupBasis {
  ChainComplex complex;  // cohomological
  std::map<int, std::vector<BlowupCell>> cells;
};

struct LocalBlowupComplex : BlowupBasis {};

LocalBlowupComplex local_complex(const FilteredComplex& x, const Simplex& s);

/// Global compatible families over the regular simplices of x.
BlowupBasis global_blowup_complex(const FilteredComplex& x);

/// ||c||_S <= p(S) for every singular stratum S the cell sees.
bool allowable(const FilteredComplex& x, const BlowupCell& c, const Perversity& p);

struct BlowupComplex {
  BlowupBasis global;
  AdmissibleSubcomplex intersection;
  const ChainComplex& complex() const { return intersection.complex; }
};

BlowupComplex blowup_complex(const FilteredComplex& x, const Perversity& p,
                             const Coefficients& ring = Coefficients::integers());
GradedModule blowup_cohomology(const FilteredComplex& x, const Perversity& p,
                               const Coefficients& ring = Coefficients::integers());

/// Mapping cone of the inclusion for p <= q; its cohomology is H_{q/p}.
ChainComplex relative_complex(const FilteredComplex& x, const Perversity& p, const Perversity& q,
                              const Coefficients& ring = Coefficients::integers());
GradedModule relative_cohomology(const FilteredComplex& x, const Perversity& p, const Perversity& q,
                                 const Coefficients& ring = Coefficients::integers());

}  // namespace strathom
