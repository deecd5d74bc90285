#pragma once

#include <climits>
#include <map>
#include <utility>
#include <vector>

#include "strathom/algebra/chain_complex.hpp"
#include "strathom/topology/stratified_complex.hpp"

namespace strathom {

inline constexpr int kMinusInfinity = INT_MIN / 2;

/// Entry l (1 <= l <= n) is the dimension of the front face D0 * ... * D_{n-l},
/// kMinusInfinity when that face is empty. Entry 0 is unused.
using PerverseDegreeVector = std::vector<int>;

PerverseDegreeVector perverse_degree(const FilteredComplex& x, const Simplex& s);
bool meets(const FilteredComplex& x, const Simplex& s, int stratum);
/// ||s||_S: the codim-S entry when s meets S, kMinusInfinity otherwise.
int stratum_degree(const FilteredComplex& x, const Simplex& s, int stratum);
bool allowable(const FilteredComplex& x, const Simplex& s, const Perversity& p);

/// Faces of s with boundary signs, non-regular faces dropped.
std::vector<std::pair<Simplex, int>> regular_boundary(const FilteredComplex& x, const Simplex& s);

/// Regular simplices of dimension k, in the order used for chain coordinates.
std::vector<Simplex> regular_simplices(const FilteredComplex& x, int k);

/// Subcomplex of `full` made of combinations of allowed basis elements whose
/// differential is again allowed. Shared by the chain and cochain engines.
/// Lattices are saturated over Z; over F_p they are taken mod p.
struct AdmissibleSubcomplex {
  ChainComplex complex;
  std::map<int, std::vector<std::size_t>> allowed;  // indices into the full basis
  std::map<int, Kernel> lattice;                    // in coordinates of `allowed`
};

AdmissibleSubcomplex admissible_subcomplex(const ChainComplex& full, const std::map<int, std::vector<bool>>& allowed,
                                           const Coefficients& ring);

/// Coordinates of the sub lattice (basis in sub.allowed) inside the larger one;
/// the chain map of the inclusion.
ChainMap inclusion_map(const AdmissibleSubcomplex& sub, const AdmissibleSubcomplex& super);

/// Regular chains with the regular boundary.
ChainComplex regular_chain_complex(const FilteredComplex& x);

struct IntersectionComplex {
  ChainComplex complex;
  /// Columns: basis chains in coordinates of allowable_simplices[k].
  std::map<int, Matrix> basis;
  std::map<int, std::vector<Simplex>> allowable_simplices;
  AdmissibleSubcomplex lattices;
};

IntersectionComplex intersection_complex(const FilteredComplex& x, const Perversity& p,
                                         const Coefficients& ring = Coefficients::integers());
GradedModule intersection_homology(const FilteredComplex& x, const Perversity& p,
                                   const Coefficients& ring = Coefficients::integers());
GradedModule intersection_cohomology(const FilteredComplex& x, const Perversity& p,
                                     const Coefficients& ring = Coefficients::integers());

/// Plain simplicial chains on every simplex (no perversity).
ChainComplex simplicial_chain_complex(const FilteredComplex& x);

}  // namespace strathom
