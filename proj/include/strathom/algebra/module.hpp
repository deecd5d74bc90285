#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strathom/algebra/coefficients.hpp"
#include "strathom/algebra/matrix.hpp"

namespace strathom {

/// Finitely generated module over a PID: R^free_rank + sum R/(d_i) with
/// d_1 | d_2 | ... and every d_i >= 2. Equality is isomorphism.
class FGModule {
 public:
  FGModule() = default;

  static FGModule zero() { return {}; }
  static FGModule free(std::size_t rank);
  static FGModule cyclic(const Integer& order);
  /// Any list of cyclic orders (0 = free summand, 1 = trivial) normalized to
  /// invariant factors.
  static FGModule from_orders(std::size_t free_rank, const std::vector<Integer>& orders);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion() const { return free_rank_ == 0; }
  bool is_free() const { return torsion_.empty(); }
  /// Order of a torsion module; throws on a nonzero free part.
  Integer order() const;
  /// Number of invariant factors divisible by p.
  std::size_t p_rank(long p) const;
  std::size_t number_of_generators() const { return free_rank_ + torsion_.size(); }

  FGModule free_part() const { return free(free_rank_); }
  FGModule torsion_part() const { return from_orders(0, torsion_); }

  /// Module of cyclic generators in the canonical order used by Presentation:
  /// free generators first, then torsion by increasing factor.
  std::vector<Integer> cyclic_orders() const;

  /// Dimension of M tensor F_p over F_p (or rank for Q).
  std::size_t tensor_dimension(const Coefficients& ring) const;

  std::string to_string() const;

  friend FGModule operator+(const FGModule& a, const FGModule& b);
  friend bool operator==(const FGModule& a, const FGModule& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

FGModule tensor(const FGModule& a, const FGModule& b);
FGModule tor(const FGModule& a, const FGModule& b);
/// Hom(M, R): the free part.
FGModule hom_dual(const FGModule& m);
/// Ext(M, R): the torsion part.
FGModule ext_dual(const FGModule& m);

/// Degree-indexed family; missing degrees are zero.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(std::initializer_list<std::pair<const int, FGModule>> init);

  const FGModule& operator[](int k) const;
  void set(int k, const FGModule& m);
  void add(int k, const FGModule& m) { set(k, (*this)[k] + m); }
  /// Degrees with a nonzero module, ascending.
  std::vector<int> degrees() const;
  const std::map<int, FGModule>& entries() const { return parts_; }

  bool is_zero() const { return parts_.empty(); }
  bool is_torsion() const;
  int min_degree() const;
  int max_degree() const;

  GradedModule shifted(int s) const;  // result[k] = this[k - s]
  GradedModule free_part() const;
  GradedModule torsion_part() const;
  std::string to_string() const;

  friend GradedModule operator+(const GradedModule& a, const GradedModule& b);
  friend bool operator==(const GradedModule& a, const GradedModule& b) { return a.parts_ == b.parts_; }

 private:
  std::map<int, FGModule> parts_;
};

/// Degree k -> Hom(H^k) + Ext(H^{k+1}) for a cohomology module H.
GradedModule verdier_dual_homology(const GradedModule& h, int n);
/// Re-indexes k -> n - k, turning dual homology back into cohomology form.
GradedModule regrade(const GradedModule& g, int n);

/// Homology Kunneth: Tor(H_i, H_j) contributes to degree i + j + 1.
GradedModule kunneth(const GradedModule& a, const GradedModule& b);
/// Cohomology Kunneth: Tor(H^i, H^j) contributes to degree i + j - 1.
GradedModule kunneth_cohomology(const GradedModule& a, const GradedModule& b);

/// Universal coefficients from integral homology: H^k = F H_k + T H_{k-1}.
GradedModule cohomology_from_homology(const GradedModule& h);
/// dim H_k(C; F) from integral homology.
std::size_t field_homology_dimension(const GradedModule& h, int k, const Coefficients& ring);
/// dim H^k(C; F) from integral cohomology.
std::size_t field_cohomology_dimension(const GradedModule& h, int k, const Coefficients& ring);
/// Integral data reduced to a field: every degree becomes F^dim (torsion-free).
GradedModule over_field_from_homology(const GradedModule& h, const Coefficients& ring);

/// Generators plus a relation matrix (generators x relations).
struct Presentation {
  std::size_t generators = 0;
  Matrix relations;

  static Presentation free(std::size_t n);
  /// Cyclic generators in FGModule::cyclic_orders() order (0 = free).
  static Presentation cyclic(const std::vector<Integer>& orders);
  static Presentation of(const FGModule& m) { return cyclic(m.cyclic_orders()); }

  FGModule module() const;
};

struct ModuleMap {
  Presentation domain;
  Presentation codomain;
  Matrix matrix;  // codomain.generators x domain.generators

  /// Map between standard cyclic presentations of two modules.
  static ModuleMap between(const FGModule& dom, const FGModule& cod, const Matrix& m);
  static ModuleMap identity(const FGModule& m);

  /// Throws ValidationError when relations do not map into relations.
  void validate() const;
};

struct KerCoker {
  FGModule kernel;
  FGModule cokernel;
};

KerCoker ker_coker(const ModuleMap& f);

/// Graded map; the component in degree k goes from degree k to k + shift.
struct GradedModuleMap {
  int shift = 0;
  std::map<int, ModuleMap> parts;
};

/// True iff x lies in the column span of r over Z.
bool in_column_span(const Matrix& r, const std::vector<Integer>& x);

/// M / N for lattices given by generating columns, N contained in M.
FGModule lattice_quotient(const Matrix& m_gens, const Matrix& n_gens);

}  // namespace strathom
