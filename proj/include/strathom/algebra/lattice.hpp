#pragma once

#include <cstddef>
#include <vector>

#include "strathom/algebra/matrix.hpp"
#include "strathom/algebra/module.hpp"

namespace strathom {

// Sublattices of Z^g are given by generating columns.

/// Rational span of the columns intersected with Z^g.
Matrix saturation(const Matrix& gens);
Matrix lattice_intersection(const Matrix& a, const Matrix& b);
/// {x : f x lies in the lattice spanned by target}.
Matrix lattice_preimage(const Matrix& f, const Matrix& target);

/// N / D for lattices D <= N in Z^g, with an explicit cyclic basis.
class SubQuotient {
 public:
  SubQuotient() = default;
  SubQuotient(const Matrix& numerator, const Matrix& denominator);
  static SubQuotient of(const Presentation& p);

  std::size_t ambient() const { return ambient_; }
  const FGModule& module() const { return module_; }
  /// Cyclic orders of the generators (0 = free), canonical order.
  const std::vector<Integer>& orders() const { return orders_; }
  /// Generators as ambient vectors, one column each.
  const Matrix& generators() const { return generators_; }

  bool contains(const std::vector<Integer>& x) const;
  /// Coordinates of x in the cyclic basis; torsion entries reduced.
  std::vector<Integer> coordinates(const std::vector<Integer>& x) const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_u_;               // U of the numerator decomposition
  std::vector<Integer> basis_d_; // its nonzero diagonal
  Matrix quotient_u_;            // U of the relation decomposition
  std::vector<std::size_t> slots_;  // canonical generator -> quotient index
  std::vector<Integer> orders_;
  Matrix generators_;
  FGModule module_;

  bool numerator_coords(const std::vector<Integer>& x, std::vector<Integer>& c) const;
};

/// The map dom -> cod induced by an integer matrix on the ambient lattices.
ModuleMap induced_map(const SubQuotient& dom, const SubQuotient& cod, const Matrix& f);

}  // namespace strathom
