#include "strathom/symbolic/atoms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace strathom {

namespace {

const std::vector<Integer>& basis_at(const GradedBasis& b, int k) {
  static const std::vector<Integer> empty;
  auto it = b.find(k);
  return it == b.end() ? empty : it->second;
}

FGModule module_of(const std::vector<Integer>& orders) {
  std::size_t free = 0;
  std::vector<Integer> tors;
  for (const Integer& o : orders) {
    if (o == 0) ++free;
    else tors.push_back(o);
  }
  return FGModule::from_orders(free, tors);
}

Matrix reduce_mod(const Matrix& m, long p) {
  return m.reduced(Coefficients::prime_field(p));
}

GradedBasis free_basis(const std::map<int, std::size_t>& dims) {
  GradedBasis b;
  for (const auto& [k, d] : dims)
    if (d > 0) b[k] = std::vector<Integer>(d, 0);
  return b;
}

ManifoldAtom sphere(int n) {
  ManifoldAtom a;
  a.name = "S" + std::to_string(n);
  a.dimension = n;
  if (n == 0) {
    a.basis[0] = {0, 0};
    return a;
  }
  a.basis[0] = {0};
  a.basis[n] = {0};
  if (n == 2) a.classes["w"] = {{0, Matrix{{1}}}};
  return a;
}

}  // namespace

FGModule ManifoldAtom::at(int k) const { return module_of(basis_at(basis, k)); }

GradedModule ManifoldAtom::cohomology() const {
  GradedModule g;
  for (const auto& [k, orders] : basis) g.set(k, module_of(orders));
  return g;
}

GradedModule ManifoldAtom::homology() const {
  GradedModule h;
  for (int k = 0; k <= dimension; ++k) h.set(k, at(k).free_part() + at(k + 1).torsion_part());
  return h;
}

Presentation ManifoldAtom::presentation(int k) const { return Presentation::cyclic(basis_at(basis, k)); }

const CupAction& ManifoldAtom::cup(const std::string& cls) const {
  auto it = classes.find(canonical_class_name(cls));
  if (it == classes.end()) it = classes.find(cls);
  if (it == classes.end()) throw ValidationError("atom " + name + " has no degree-2 class '" + cls + "'");
  return it->second;
}

ModPData ManifoldAtom::reduce(long p) const {
  auto it = mod_p.find(p);
  if (it != mod_p.end()) return it->second;
  ModPData out;
  std::map<int, std::vector<std::size_t>> keep;
  for (const auto& [k, orders] : basis) {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] == 0) keep[k].push_back(i);
      else if (orders[i] % p == 0)
        throw ValidationError("atom " + name + " has " + std::to_string(p) + "-torsion but no mod " +
                              std::to_string(p) + " data");
    }
    out.dims[k] = keep[k].size();
  }
  for (const auto& [cls, action] : classes) {
    CupAction a;
    for (const auto& [k, m] : action) a[k] = reduce_mod(m.select_rows(keep[k + 2]).select_columns(keep[k]), p);
    out.classes[cls] = a;
  }
  return out;
}

void ManifoldAtom::check() const {
  std::vector<std::string> errors;
  auto at_or_zero = [&](int k) { return at(k); };
  if (dimension < 0) errors.push_back("atom " + name + ": negative dimension");
  for (const auto& [k, orders] : basis) {
    if (k < 0 || k > dimension) errors.push_back("atom " + name + ": cohomology in degree " + std::to_string(k));
    for (const Integer& o : orders)
      if (o < 0 || o == 1) errors.push_back("atom " + name + ": invalid cyclic order " + o.get_str());
  }
  if (at(0).free_rank() == 0) errors.push_back("atom " + name + ": H^0 must be free of positive rank");
  for (const auto& [cls, action] : classes) {
    for (const auto& [k, m] : action) {
      ModuleMap f{presentation(k), presentation(k + 2), m};
      if (m.rows() != f.codomain.generators || m.cols() != f.domain.generators) {
        errors.push_back("atom " + name + ": class " + cls + " has a badly shaped action in degree " +
                         std::to_string(k));
        continue;
      }
      try {
        f.validate();
      } catch (const ValidationError&) {
        errors.push_back("atom " + name + ": class " + cls + " is not well defined in degree " + std::to_string(k));
      }
    }
  }
  if (orientable && errors.empty()) {
    const int n = dimension;
    if (at(n).free_rank() != at(0).free_rank())
      errors.push_back("atom " + name + ": top cohomology does not match the number of components");
    for (int k = 0; k <= n; ++k) {
      if (at_or_zero(k).free_rank() != at_or_zero(n - k).free_rank())
        errors.push_back("atom " + name + ": Poincare duality fails for ranks in degree " + std::to_string(k));
      if (!(at_or_zero(k).torsion_part() == at_or_zero(n - k + 1).torsion_part()))
        errors.push_back("atom " + name + ": Poincare duality fails for torsion in degree " + std::to_string(k));
    }
  }
  if (!errors.empty()) throw ValidationError(errors);
}

std::string canonical_class_name(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"w", "w"}, {"omega", "w"}, {"ω", "w"}, {"u", "u"}, {"a", "u"}, {"alpha", "u"}, {"α", "u"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

bool is_builtin_atom(const std::string& name) {
  if (name == "pt" || name == "T2" || name == "RP2" || name == "RP3" || name == "CP2") return true;
  if (name.size() >= 2 && name[0] == 'S') {
    return std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
           name.size() <= 4;
  }
  return false;
}

std::vector<std::string> builtin_atom_names() { return {"pt", "S<n>", "T2", "RP2", "RP3", "CP2"}; }

ManifoldAtom builtin_atom(const std::string& name) {
  if (!is_builtin_atom(name)) throw ValidationError("unknown atom '" + name + "'");
  ManifoldAtom a;
  a.name = name;
  if (name == "pt") {
    a.basis[0] = {0};
  } else if (name == "T2") {
    a.dimension = 2;
    a.basis = {{0, {0}}, {1, {0, 0}}, {2, {0}}};
    a.classes["w"] = {{0, Matrix{{1}}}};
  } else if (name == "CP2") {
    a.dimension = 4;
    a.basis = {{0, {0}}, {2, {0}}, {4, {0}}};
    a.classes["w"] = {{0, Matrix{{1}}}, {2, Matrix{{1}}}};
  } else if (name == "RP3") {
    a.dimension = 3;
    a.basis = {{0, {0}}, {2, {2}}, {3, {0}}};
    a.classes["u"] = {{0, Matrix{{1}}}};
    // Mod 2 the cohomology is F2[x]/x^4 and u reduces to x^2.
    ModPData two;
    two.dims = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    two.classes["u"] = {{0, Matrix{{1}}}, {1, Matrix{{1}}}};
    a.mod_p[2] = two;
  } else if (name == "RP2") {
    a.dimension = 2;
    a.orientable = false;
    a.basis = {{0, {0}}, {2, {2}}};
    a.classes["u"] = {{0, Matrix{{1}}}};
    ModPData two;
    two.dims = {{0, 1}, {1, 1}, {2, 1}};
    two.classes["u"] = {{0, Matrix{{1}}}};
    a.mod_p[2] = two;
  } else {
    a = sphere(std::stoi(name.substr(1)));
  }
  return a;
}

TensorBasis tensor_basis(const std::vector<GradedBasis>& factors) {
  TensorBasis out;
  std::vector<std::pair<int, std::size_t>> current;
  std::function<void(std::size_t, int, Integer)> rec = [&](std::size_t i, int degree, Integer order) {
    if (i == factors.size()) {
      out.tuples[degree].push_back(current);
      out.basis[degree].push_back(order);
      return;
    }
    for (const auto& [k, orders] : factors[i]) {
      for (std::size_t j = 0; j < orders.size(); ++j) {
        Integer next = order == 0 ? orders[j] : (orders[j] == 0 ? order : Integer(gcd(order, orders[j])));
        current.emplace_back(k, j);
        rec(i + 1, degree + k, next);
        current.pop_back();
      }
    }
  };
  rec(0, 0, 0);
  return out;
}

CupAction tensor_action(const TensorBasis& t, const std::vector<GradedBasis>& factors,
                        const std::vector<const CupAction*>& actions, const std::vector<Integer>& coeffs) {
  std::map<int, std::map<std::vector<std::pair<int, std::size_t>>, std::size_t>> index;
  for (const auto& [k, list] : t.tuples)
    for (std::size_t i = 0; i < list.size(); ++i) index[k][list[i]] = i;
  CupAction out;
  for (const auto& [k, list] : t.tuples) {
    auto target = t.tuples.find(k + 2);
    if (target == t.tuples.end()) continue;
    Matrix m(target->second.size(), list.size());
    for (std::size_t col = 0; col < list.size(); ++col) {
      for (std::size_t f = 0; f < factors.size(); ++f) {
        if (!actions[f] || coeffs[f] == 0) continue;
        auto [deg, idx] = list[col][f];
        auto act = actions[f]->find(deg);
        if (act == actions[f]->end()) continue;
        for (std::size_t r = 0; r < act->second.rows(); ++r) {
          const Integer& v = act->second(r, idx);
          if (v == 0) continue;
          auto image = list[col];
          image[f] = {deg + 2, r};
          m(index[k + 2].at(image), col) += coeffs[f] * v;
        }
      }
    }
    if (!m.is_zero()) out[k] = m;
  }
  return out;
}

ManifoldAtom product(const std::vector<ManifoldAtom>& factors) {
  if (factors.empty()) return builtin_atom("pt");
  if (factors.size() == 1) return factors.front();
  ManifoldAtom out;
  std::vector<GradedBasis> bases;
  std::size_t torsion_factors = 0;
  std::set<long> primes;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ManifoldAtom& f = factors[i];
    out.name += (i ? "x" : "") + f.name;
    out.dimension += f.dimension;
    out.orientable = out.orientable && f.orientable;
    bases.push_back(f.basis);
    if (!f.cohomology().torsion_part().is_zero()) ++torsion_factors;
    for (const auto& [p, data] : f.mod_p) primes.insert(p);
  }
  if (torsion_factors <= 1) {
    TensorBasis t = tensor_basis(bases);
    out.basis = t.basis;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (const auto& [cls, action] : factors[i].classes) {
        std::vector<const CupAction*> acts(factors.size(), nullptr);
        std::vector<Integer> coeffs(factors.size(), 0);
        acts[i] = &action;
        coeffs[i] = 1;
        out.classes[std::to_string(i + 1) + "." + cls] = tensor_action(t, bases, acts, coeffs);
      }
    }
  } else {
    GradedModule h = factors.front().cohomology();
    for (std::size_t i = 1; i < factors.size(); ++i) h = kunneth_cohomology(h, factors[i].cohomology());
    for (const auto& [k, m] : h.entries()) out.basis[k] = m.cyclic_orders();
    out.has_cup_basis = false;
  }
  for (long p : primes) {
    std::vector<ModPData> reduced;
    std::vector<GradedBasis> pb;
    for (const ManifoldAtom& f : factors) {
      reduced.push_back(f.reduce(p));
      pb.push_back(free_basis(reduced.back().dims));
    }
    TensorBasis t = tensor_basis(pb);
    ModPData data;
    for (const auto& [k, list] : t.basis) data.dims[k] = list.size();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (const auto& [cls, action] : reduced[i].classes) {
        std::vector<const CupAction*> acts(factors.size(), nullptr);
        std::vector<Integer> coeffs(factors.size(), 0);
        acts[i] = &action;
        coeffs[i] = 1;
        CupAction a = tensor_action(t, pb, acts, coeffs);
        for (auto& [k, m] : a) m = reduce_mod(m, p);
        data.classes[std::to_string(i + 1) + "." + cls] = a;
      }
    }
    out.mod_p[p] = data;
  }
  return out;
}

}  // namespace strathom
