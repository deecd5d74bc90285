#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "strathom/algebra/coefficients.hpp"
#include "strathom/algebra/matrix.hpp"
#include "strathom/algebra/module.hpp"
#include "strathom/algebra/smith.hpp"

namespace strathom {

enum class Orientation { Homological, Cohomological };

/// Free complex over Z, or over F_p when built with a prime field (entries are
/// then residues). Differentials are keyed by source degree; the target is
/// k - 1 (homological) or k + 1 (cohomological). Shapes and d*d = 0 are
/// checked on construction.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(Orientation orientation, std::map<int, std::size_t> dims, std::map<int, Matrix> differentials,
               std::map<int, std::vector<std::string>> labels = {},
               const Coefficients& ring = Coefficients::integers());

  Orientation orientation() const { return orientation_; }
  const Coefficients& ring() const { return ring_; }
  int step() const { return orientation_ == Orientation::Homological ? -1 : 1; }
  std::size_t dim(int k) const;
  const std::map<int, std::size_t>& dims() const { return dims_; }
  /// Differential leaving degree k (zero matrix of the right shape if absent).
  Matrix differential(int k) const;
  const std::vector<std::string>& labels(int k) const;
  int min_degree() const;
  int max_degree() const;

  /// Hom(C, Z) with the sign d(c) = -(-1)^{|c|} c . d.
  ChainComplex dual() const;
  bool is_complex() const;

 private:
  Orientation orientation_ = Orientation::Homological;
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> diffs_;
  std::map<int, std::vector<std::string>> labels_;
  Coefficients ring_ = Coefficients::integers();
};

FGModule homology(const ChainComplex& c, int k, const Coefficients& ring = Coefficients::integers());
GradedModule homology_all(const ChainComplex& c, const Coefficients& ring = Coefficients::integers());

/// Degree-preserving map; components are target_dim x source_dim.
struct ChainMap {
  std::map<int, Matrix> components;
  Matrix at(const ChainComplex& src, const ChainComplex& tgt, int k) const;
};

/// Throws ValidationError unless f commutes with the differentials.
void check_chain_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt);

/// Cohomological: Cone^k = B^k + A^{k+1}, D(b, a) = (db + f(a), -da).
/// Homological: Cone_k = B_k + A_{k-1}, D(b, a) = (db + f(a), -da).
ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt);

/// Cycles modulo boundaries as a presentation on a kernel basis.
struct HomologyPresentation {
  Kernel cycles;
  Presentation presentation;
};

HomologyPresentation homology_presentation(const ChainComplex& c, int k);
/// Map induced by f on integral (co)homology in degree k.
ModuleMap induced_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt, int k);

}  // namespace strathom
