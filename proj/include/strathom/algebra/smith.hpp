#pragma once

#include <cstddef>
#include <vector>

#include "strathom/algebra/coefficients.hpp"
#include "strathom/algebra/matrix.hpp"

namespace strathom {

/// U * source * V = diag(diagonal, 0...). The inverses are kept because most
/// callers need coordinates with respect to the new bases.
struct SmithDecomposition {
  Matrix source;
  std::vector<Integer> diagonal;
  Matrix U, V, U_inv, V_inv;
  bool has_transforms = false;
  Coefficients ring = Coefficients::integers();
  /// Largest bit length of an entry met in the reduced block.
  std::size_t max_bits = 0;

  std::size_t rank() const { return diagonal.size(); }
  Matrix diagonal_matrix() const;
};

SmithDecomposition smith(const Matrix& a, const Coefficients& ring = Coefficients::integers(),
                         bool transforms = true);
SmithDecomposition smith(const IntMatrix& a, const Coefficients& ring = Coefficients::integers(),
                         bool transforms = true);

/// Nonzero invariant factors over Z (1s included).
std::vector<Integer> invariant_factors(const Matrix& a);
std::size_t rank(const Matrix& a, const Coefficients& ring = Coefficients::integers());

/// Saturated kernel of a: columns of `basis` span ker(a); coords * x gives the
/// coordinates of a kernel vector x in that basis.
struct Kernel {
  Matrix basis;
  Matrix coords;
  std::size_t dim() const { return basis.cols(); }
};

Kernel kernel(const Matrix& a, const Coefficients& ring = Coefficients::integers());

/// Determinant over Z by fraction-free elimination; used by property tests.
Integer determinant(const Matrix& a);

}  // namespace strathom
