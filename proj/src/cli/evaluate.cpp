#include <memory>

#include "strathom/cli/input.hpp"

namespace strathom::cli {

namespace {

using Kind = SpaceExpr::Kind;

bool is_manifold(const InputFile& in, const SpaceExpr& e) {
  if (e.kind == Kind::Atom) return !in.complexes.count(e.name);
  if (e.kind == Kind::Product) {
    for (const auto& a : e.args)
      if (!is_manifold(in, a)) return false;
    return true;
  }
  return false;
}

int dimension_of(const InputFile& in, const SpaceExpr& e) {
  switch (e.kind) {
    case Kind::Atom:
      if (auto it = in.complexes.find(e.name); it != in.complexes.end()) return it->second.dimension;
      return resolve_atom(in, e).dimension;
    case Kind::Product: {
      int d = 0;
      for (const auto& a : e.args) d += dimension_of(in, a);
      return d;
    }
    case Kind::Cone:
    case Kind::Suspension:
    case Kind::MappingTorus:
    case Kind::Isolated:
      return dimension_of(in, e.args.front()) + 1;
    case Kind::Thom:
      return dimension_of(in, e.args.front()) + 2;
    case Kind::Union: {
      int d = dimension_of(in, e.args.front());
      for (const auto& a : e.args)
        if (dimension_of(in, a) != d) throw ValidationError("union of spaces of different dimensions");
      return d;
    }
  }
  return 0;
}

std::vector<ManifoldAtom> factors(const InputFile& in, const SpaceExpr& e) {
  if (e.kind == Kind::Product) {
    std::vector<ManifoldAtom> out;
    for (const auto& a : e.args) out.push_back(resolve_atom(in, a));
    return out;
  }
  return {resolve_atom(in, e)};
}

}  // namespace

ManifoldAtom resolve_atom(const InputFile& in, const SpaceExpr& e) {
  if (e.kind == Kind::Product) {
    ManifoldAtom m = product(factors(in, e));
    m.name = e.to_string();
    return m;
  }
  if (e.kind != Kind::Atom) throw ValidationError(e.to_string() + " is not a manifold atom");
  if (in.complexes.count(e.name)) throw ValidationError("complex " + e.name + " has no symbolic description");
  if (auto it = in.atoms.find(e.name); it != in.atoms.end()) return it->second;
  if (!is_builtin_atom(e.name)) {
    std::string known;
    for (const auto& n : builtin_atom_names()) known += " " + n;
    throw ValidationError("unknown atom '" + e.name + "' (built in:" + known + ")");
  }
  return builtin_atom(e.name);
}

ValueSource uniform_values(int k) {
  return [k](int) { return k; };
}

ValueSource listed_values(const std::vector<int>& values) {
  auto next = std::make_shared<std::size_t>(0);
  return [values, next](int) {
    if (*next >= values.size())
      throw ValidationError("perversity lists " + std::to_string(values.size()) + " values but the space has more "
                            "singular strata");
    return values[(*next)++];
  };
}

std::vector<int> stratum_codimensions(const InputFile& in, const SpaceExpr& e) {
  std::vector<int> out;
  switch (e.kind) {
    case Kind::Atom:
    case Kind::Product:
      break;
    case Kind::Cone:
      out = stratum_codimensions(in, e.args.front());
      out.push_back(dimension_of(in, e));
      break;
    case Kind::Suspension:
      if (!is_manifold(in, e.args.front())) throw ValidationError("symbolic suspension needs a manifold");
      out = {dimension_of(in, e), dimension_of(in, e)};
      break;
    case Kind::Isolated:
      out.assign(e.args.size(), dimension_of(in, e));
      break;
    case Kind::Thom:
      out = {dimension_of(in, e)};
      break;
    case Kind::MappingTorus:
      out = stratum_codimensions(in, e.args.front());
      break;
    case Kind::Union:
      throw ValidationError("union has no symbolic evaluation");
  }
  return out;
}

std::vector<std::vector<int>> all_assignments(const std::vector<int>& codims, std::size_t limit) {
  std::vector<std::vector<int>> out{{}};
  for (int c : codims) {
    if (c < 2) throw ValidationError("a singular stratum of codimension " + std::to_string(c) + " has no admissible value");
    std::vector<std::vector<int>> grown;
    for (const auto& v : out)
      for (int k = 0; k <= c - 2; ++k) {
        grown.push_back(v);
        grown.back().push_back(k);
      }
    out = std::move(grown);
    if (out.size() > limit)
      throw ValidationError("more than " + std::to_string(limit) + " perversities; give --perversity explicitly");
  }
  return out;
}

IntersectionProfile evaluate(const InputFile& in, const SpaceExpr& e, const ValueSource& values) {
  switch (e.kind) {
    case Kind::Atom:
    case Kind::Product: {
      IntersectionProfile p = atom_profile(resolve_atom(in, e));
      p.space = e.to_string();
      return p;
    }
    case Kind::Cone: {
      IntersectionProfile link = evaluate(in, e.args.front(), values);
      IntersectionProfile p = eval_cone(link, values(link.dimension + 1));
      p.space = e.to_string();
      return p;
    }
    case Kind::Suspension: {
      if (!is_manifold(in, e.args.front()))
        throw ValidationError("symbolic suspension needs a manifold, got " + e.args.front().to_string());
      ManifoldAtom m = resolve_atom(in, e.args.front());
      const int north = values(m.dimension + 1);
      const int south = values(m.dimension + 1);
      IntersectionProfile p = eval_suspension(m, north, south);
      p.space = e.to_string();
      return p;
    }
    case Kind::Isolated: {
      std::vector<ManifoldAtom> links;
      std::vector<int> v;
      for (const auto& a : e.args) {
        links.push_back(resolve_atom(in, a));
        v.push_back(values(links.back().dimension + 1));
      }
      IntersectionProfile p = eval_isolated(links.front().dimension + 1, links, v);
      p.space = e.to_string();
      return p;
    }
    case Kind::Thom: {
      CircleBundle b;
      b.base = factors(in, e.args.front());
      b.euler = e.euler;
      int n = 2;
      for (const auto& f : b.base) n += f.dimension;
      IntersectionProfile p = eval_thom_circle(b, values(n));
      p.space = e.to_string();
      return p;
    }
    case Kind::MappingTorus: {
      IntersectionProfile link = evaluate(in, e.args.front(), values);
      AutomorphismData f;
      if (auto it = in.automorphisms.find(e.name); it != in.automorphisms.end()) {
        f = it->second;
      } else if (e.name == "id") {
        for (const auto& [k, r] : link.peripheral)
          if (r.total) f.peripheral[k] = Matrix::identity(r.total->number_of_generators());
      } else {
        throw ValidationError("unknown automorphism '" + e.name + "'");
      }
      IntersectionProfile p = eval_mapping_torus(link, f);
      p.space = e.to_string();
      return p;
    }
    case Kind::Union:
      throw ValidationError("union has no symbolic evaluation");
  }
  return {};
}

bool has_symbolic(const InputFile& in, const SpaceExpr& e, std::string* why) {
  auto no = [why](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  switch (e.kind) {
    case Kind::Atom:
      return in.complexes.count(e.name) ? no("complex " + e.name + " has no symbolic description") : true;
    case Kind::Product:
    case Kind::Thom:
    case Kind::Isolated:
      for (const auto& a : e.args)
        if (!is_manifold(in, a)) return no(a.to_string() + " is not a manifold atom");
      return true;
    case Kind::Suspension:
      return is_manifold(in, e.args.front()) ? true : no("symbolic suspension needs a manifold");
    case Kind::Cone:
    case Kind::MappingTorus:
      return has_symbolic(in, e.args.front(), why);
    case Kind::Union:
      return no("union has no symbolic evaluation");
  }
  return false;
}

std::optional<std::string> simplicial_obstruction(const InputFile& in, const SpaceExpr& e) {
  switch (e.kind) {
    case Kind::Atom: {
      if (in.complexes.count(e.name)) return std::nullopt;
      for (const auto& t : triangulation_names())
        if (t == e.name) return std::nullopt;
      return "no registered triangulation of " + e.name;
    }
    case Kind::Cone:
    case Kind::Suspension:
      return simplicial_obstruction(in, e.args.front());
    case Kind::Union:
      for (const auto& a : e.args)
        if (auto r = simplicial_obstruction(in, a)) return r;
      return std::nullopt;
    case Kind::Product:
      return "products are not triangulated";
    case Kind::Isolated:
      return "isolated singularities are symbolic only";
    case Kind::Thom:
      return "Thom spaces are symbolic only";
    case Kind::MappingTorus:
      return "mapping tori are symbolic only";
  }
  return "unsupported";
}

FilteredComplex realize(const InputFile& in, const SpaceExpr& e) {
  if (auto why = simplicial_obstruction(in, e)) throw ValidationError(*why);
  switch (e.kind) {
    case Kind::Atom:
      if (auto it = in.complexes.find(e.name); it != in.complexes.end()) return validate(it->second);
      return triangulation(e.name);
    case Kind::Cone:
      return cone(realize(in, e.args.front()));
    case Kind::Suspension:
      return suspension(realize(in, e.args.front()));
    case Kind::Union: {
      FilteredComplex x = realize(in, e.args.front());
      for (std::size_t i = 1; i < e.args.size(); ++i) x = disjoint_union(x, realize(in, e.args[i]));
      return x;
    }
    default:
      break;
  }
  throw ValidationError("no simplicial realization");
}

}  // namespace strathom::cli
