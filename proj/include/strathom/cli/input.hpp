#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/symbolic/atoms.hpp"
#include "strathom/symbolic/profile.hpp"
#include "strathom/topology/stratified_complex.hpp"

namespace strathom::cli {

/// Space expression. Grammar:
///   expr  := term (('*' | 'x') term)*
///   term  := name | name '(' args ')'
///   cone(E) susp(E) union(E, E) isolated(E, ...) mapping_torus(E, f)
///   thom(E, [c1 x1, c2 x2, ...])   one Euler term per base factor
struct SpaceExpr {
  enum class Kind { Atom, Product, Cone, Suspension, Union, Isolated, Thom, MappingTorus };
  Kind kind = Kind::Atom;
  std::string name;  // atom, complex or automorphism name
  std::vector<SpaceExpr> args;
  std::vector<EulerTerm> euler;

  std::string to_string() const;
};

/// Throws ValidationError naming the column of the first error.
SpaceExpr parse_expression(const std::string& text);

/// A parsed input file: JSON, or a bare expression.
struct InputFile {
  std::string digest;  // sha256 of the file bytes
  std::string expression;
  std::optional<SpaceExpr> space;
  std::map<std::string, ManifoldAtom> atoms;
  std::map<std::string, RawComplex> complexes;
  std::map<std::string, AutomorphismData> automorphisms;
  std::optional<std::string> perversity;
  std::optional<std::string> ring;
};

InputFile parse_input(const std::string& text);
InputFile read_input(const std::string& path);
std::string sha256_hex(const std::string& bytes);

/// --perversity: "all", one value for every singular stratum, or a comma
/// separated list with one value per singular stratum.
struct PerversitySpec {
  bool all = false;
  std::vector<int> values;
};
PerversitySpec parse_perversity(const std::string& text);

/// Supplies the value of the next singular stratum, given its codimension.
using ValueSource = std::function<int(int codim)>;
ValueSource uniform_values(int k);
ValueSource listed_values(const std::vector<int>& values);

/// Symbolic evaluation. Strata are numbered in post-order of the expression.
IntersectionProfile evaluate(const InputFile& in, const SpaceExpr& e, const ValueSource& values);
/// Codimension of every singular stratum, in evaluation order.
std::vector<int> stratum_codimensions(const InputFile& in, const SpaceExpr& e);
/// Every assignment with 0 <= p(S) <= codim S - 2, at most `limit` of them.
std::vector<std::vector<int>> all_assignments(const std::vector<int>& codims, std::size_t limit = 4096);

ManifoldAtom resolve_atom(const InputFile& in, const SpaceExpr& e);

/// Empty when the expression has a simplicial realization; otherwise the reason.
std::optional<std::string> simplicial_obstruction(const InputFile& in, const SpaceExpr& e);
FilteredComplex realize(const InputFile& in, const SpaceExpr& e);
/// False when a symbolic evaluation is unavailable; `why` gets the reason.
bool has_symbolic(const InputFile& in, const SpaceExpr& e, std::string* why = nullptr);

}  // namespace strathom::cli
