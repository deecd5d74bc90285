#pragma once

#include <map>
#include <string>
#include <vector>

#include "strathom/algebra/matrix.hpp"
#include "strathom/algebra/module.hpp"

namespace strathom {

/// Cyclic generators per degree; order 0 marks a free generator.
using GradedBasis = std::map<int, std::vector<Integer>>;
/// Degree j -> matrix from the degree-j basis to the degree-(j+2) basis.
using CupAction = std::map<int, Matrix>;

/// Cohomology of a closed manifold with F_p coefficients, as needed to resolve
/// Gysin extensions.
struct ModPData {
  std::map<int, std::size_t> dims;
  std::map<std::string, CupAction> classes;  // cup with the reduction of the integral class
};

struct ManifoldAtom {
  std::string name;
  int dimension = 0;
  bool orientable = true;
  GradedBasis basis;
  std::map<std::string, CupAction> classes;  // degree-2 classes
  std::map<long, ModPData> mod_p;            // only where p-torsion is present
  /// False when the basis does not carry cup actions (products with Tor terms).
  bool has_cup_basis = true;

  FGModule at(int k) const;
  GradedModule cohomology() const;
  GradedModule homology() const;
  Presentation presentation(int k) const;
  const CupAction& cup(const std::string& cls) const;
  /// F_p data: stored when the atom has p-torsion, else reduced from the free part.
  ModPData reduce(long p) const;

  /// Basis, action shapes and, for orientable atoms, Poincare duality of ranks
  /// and torsion. Throws ValidationError.
  void check() const;
};

/// "w"/"omega" and "u"/"a"/"alpha" are accepted for the standard generators.
std::string canonical_class_name(const std::string& name);

ManifoldAtom builtin_atom(const std::string& name);
bool is_builtin_atom(const std::string& name);
std::vector<std::string> builtin_atom_names();

/// Graded basis of a tensor product (orders: free iff all free, else gcd of
/// the torsion orders) together with the index of every tuple.
struct TensorBasis {
  GradedBasis basis;
  std::map<int, std::vector<std::vector<std::pair<int, std::size_t>>>> tuples;
};
TensorBasis tensor_basis(const std::vector<GradedBasis>& factors);
/// Cup with sum_i c_i * x_i on a tensor basis, x_i a class of factor i given
/// by its action (nullptr or c_i = 0 to skip).
CupAction tensor_action(const TensorBasis& t, const std::vector<GradedBasis>& factors,
                        const std::vector<const CupAction*>& actions, const std::vector<Integer>& coeffs);

/// Kunneth product. Cup classes survive as "<factor index>.<name>" when at most
/// one factor has torsion.
ManifoldAtom product(const std::vector<ManifoldAtom>& factors);

}  // namespace strathom
