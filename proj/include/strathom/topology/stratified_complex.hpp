#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/algebra/coefficients.hpp"

namespace strathom {

using Simplex = std::vector<int>;  // sorted vertex indices

struct Vertex {
  std::string id;
  int level = 0;
};

/// Unvalidated input: vertices with levels and either all simplices or only
/// the facets (closure is then generated).
struct RawComplex {
  int dimension = 0;
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::string>> simplices;
  bool facets_only = false;
};

struct Stratum {
  int level = 0;
  int codim = 0;
  bool regular = false;
  std::vector<int> vertices;  // level-`level` vertices of this component
  std::string name;
};

/// Filtered simplicial complex. Vertices are ordered by (level, input order),
/// so the vertices of a simplex are already in join order D0 * D1 * ... * Dn.
class FilteredComplex {
 public:
  int dimension() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  int level(int v) const { return vertices_[static_cast<std::size_t>(v)].level; }
  std::optional<int> vertex_index(const std::string& id) const;

  /// Simplices of dimension k in lexicographic order.
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t simplex_count() const;
  std::optional<std::size_t> index_of(const Simplex& s) const;  // position within its dimension
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Vertices of s split by level 0..n.
  std::vector<std::vector<int>> join_parts(const Simplex& s) const;
  int max_level(const Simplex& s) const;
  bool is_regular(const Simplex& s) const { return max_level(s) == n_; }

  const std::vector<Stratum>& strata() const { return strata_; }
  int stratum_of_vertex(int v) const { return vertex_stratum_[static_cast<std::size_t>(v)]; }
  /// Stratum containing the open simplex s (that of its top-level vertices).
  int stratum_of(const Simplex& s) const { return stratum_of_vertex(s.back()); }
  std::vector<int> singular_strata() const;

  /// Back to raw form (ids, levels, all simplices).
  RawComplex raw() const;
  std::vector<std::string> ids(const Simplex& s) const;

  friend FilteredComplex validate(const RawComplex& raw);

 private:
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> lookup_;
  std::vector<Stratum> strata_;
  std::vector<int> vertex_stratum_;
};

/// Checks faces, levels, purity and stratum dimensions; throws
/// ValidationError listing every violation.
FilteredComplex validate(const RawComplex& raw);

FilteredComplex cone(const FilteredComplex& link);
FilteredComplex suspension(const FilteredComplex& link);
FilteredComplex disjoint_union(const FilteredComplex& a, const FilteredComplex& b);

/// Built-in manifold triangulations (all vertices at level = dimension):
/// S1, S2, S3, RP2, T2, RP3.
FilteredComplex triangulation(const std::string& name);
std::vector<std::string> triangulation_names();

/// Goresky-MacPherson perversity by codimension, values p(0..n).
class GMPerversity {
 public:
  GMPerversity(int n, std::vector<int> values);
  static GMPerversity zero(int n);
  static GMPerversity top(int n);
  /// Constant-in-codimension value k where allowed by the growth conditions:
  /// p(i) = min(k, i - 2) for i >= 2.
  static GMPerversity constant(int n, int k);

  int dimension() const { return n_; }
  int operator()(int codim) const;
  const std::vector<int>& values() const { return values_; }
  std::string name() const;
  friend bool operator==(const GMPerversity& a, const GMPerversity& b) { return a.values_ == b.values_; }

 private:
  int n_;
  std::vector<int> values_;
};

GMPerversity complementary(const GMPerversity& p);
/// t(i) = i - 2 for i >= 2, 0 below.
int top_perversity(int codim);

/// Perversity as a value per stratum (index into FilteredComplex::strata()).
class Perversity {
 public:
  Perversity() = default;
  Perversity(const FilteredComplex& x, std::vector<int> values);
  static Perversity from_gm(const FilteredComplex& x, const GMPerversity& p);
  /// Same value on every singular stratum.
  static Perversity uniform(const FilteredComplex& x, int k);

  int operator()(int stratum) const { return values_[static_cast<std::size_t>(stratum)]; }
  const std::vector<int>& values() const { return values_; }
  std::string name() const;
  friend bool operator==(const Perversity& a, const Perversity& b) { return a.values_ == b.values_; }

 private:
  std::vector<int> values_;
};

/// Dp(S) = t(codim S) - p(S).
Perversity complementary(const FilteredComplex& x, const Perversity& p);
bool leq(const Perversity& p, const Perversity& q);

}  // namespace strathom
