#include "strathom/topology/stratified_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace strathom {

namespace {

constexpr std::size_t kMaxReported = 20;

std::string braces(const std::vector<std::string>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
  return s + "}";
}

void for_each_subset(const Simplex& s, const std::function<void(const Simplex&)>& f) {
  const std::size_t n = s.size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Simplex t;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) t.push_back(s[i]);
    f(t);
  }
}

}  // namespace

std::optional<int> FilteredComplex::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

const std::vector<Simplex>& FilteredComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || static_cast<std::size_t>(k) >= by_dim_.size()) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t FilteredComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& l : by_dim_) n += l.size();
  return n;
}

std::optional<std::size_t> FilteredComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > lookup_.size()) return std::nullopt;
  const auto& m = lookup_[s.size() - 1];
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<int>> FilteredComplex::join_parts(const Simplex& s) const {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(n_) + 1);
  for (int v : s) parts[static_cast<std::size_t>(level(v))].push_back(v);
  return parts;
}

int FilteredComplex::max_level(const Simplex& s) const { return s.empty() ? -1 : level(s.back()); }

std::vector<int> FilteredComplex::singular_strata() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < strata_.size(); ++i)
    if (!strata_[i].regular) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> FilteredComplex::ids(const Simplex& s) const {
  std::vector<std::string> out;
  for (int v : s) out.push_back(vertex(v).id);
  return out;
}

RawComplex FilteredComplex::raw() const {
  RawComplex r;
  r.dimension = n_;
  r.vertices = vertices_;
  for (const auto& list : by_dim_)
    for (const auto& s : list) r.simplices.push_back(ids(s));
  return r;
}

FilteredComplex validate(const RawComplex& raw) {
  std::vector<std::string> errors;
  auto report = [&](const std::string& e) {
    if (errors.size() < kMaxReported) errors.push_back(e);
  };
  FilteredComplex x;
  x.n_ = raw.dimension;
  if (raw.dimension < 0) report("dimension must be nonnegative");

  std::map<std::string, std::size_t> input_index;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    const auto& v = raw.vertices[i];
    if (!input_index.emplace(v.id, i).second) report("duplicate vertex id '" + v.id + "'");
    if (v.level < 0 || v.level > raw.dimension)
      report("vertex '" + v.id + "' has level " + std::to_string(v.level) + " outside 0.." +
             std::to_string(raw.dimension));
  }
  if (!errors.empty()) throw ValidationError(errors);

  std::vector<std::size_t> order(raw.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw.vertices[a].level < raw.vertices[b].level; });
  std::map<std::string, int> new_index;
  for (std::size_t i = 0; i < order.size(); ++i) {
    x.vertices_.push_back(raw.vertices[order[i]]);
    new_index[raw.vertices[order[i]].id] = static_cast<int>(i);
  }

  std::set<Simplex> all;
  for (std::size_t v = 0; v < x.vertices_.size(); ++v) all.insert({static_cast<int>(v)});
  std::vector<Simplex> given;
  for (const auto& ids : raw.simplices) {
    Simplex s;
    bool ok = true;
    for (const auto& id : ids) {
      auto it = new_index.find(id);
      if (it == new_index.end()) {
        report("simplex " + braces(ids) + " uses unknown vertex '" + id + "'");
        ok = false;
      } else {
        s.push_back(it->second);
      }
    }
    if (!ok) continue;
    std::sort(s.begin(), s.end());
    if (s.empty()) {
      report("empty simplex");
      continue;
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      report("simplex " + braces(ids) + " repeats a vertex");
      continue;
    }
    if (static_cast<int>(s.size()) - 1 > raw.dimension) {
      report("simplex " + braces(ids) + " has dimension above " + std::to_string(raw.dimension));
      continue;
    }
    given.push_back(s);
  }
  if (raw.facets_only) {
    for (const auto& s : given) for_each_subset(s, [&](const Simplex& t) { all.insert(t); });
  } else {
    all.insert(given.begin(), given.end());
    for (const auto& s : all) {
      if (s.size() < 2) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(i));
        if (!all.count(f)) report("missing face " + braces(x.ids(f)) + " of " + braces(x.ids(s)));
      }
    }
  }
  if (!errors.empty()) throw ValidationError(errors);

  std::size_t top = 0;
  for (const auto& s : all) top = std::max(top, s.size());
  x.by_dim_.assign(top, {});
  x.lookup_.assign(top, {});
  for (const auto& s : all) {
    auto& list = x.by_dim_[s.size() - 1];
    x.lookup_[s.size() - 1].emplace(s, list.size());
    list.push_back(s);
  }

  const int n = raw.dimension;
  bool has_regular = std::any_of(x.vertices_.begin(), x.vertices_.end(), [n](const Vertex& v) { return v.level == n; });
  if (!has_regular) report("no vertex of level " + std::to_string(n) + " (no regular simplex)");

  std::set<Simplex> non_maximal;
  for (const auto& s : all) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<long>(i));
      non_maximal.insert(f);
    }
  }
  for (const auto& s : all) {
    if (non_maximal.count(s)) continue;
    if (static_cast<int>(s.size()) - 1 != n || x.max_level(s) != n)
      report("maximal simplex " + braces(x.ids(s)) + " of dimension " + std::to_string(s.size() - 1) +
             " violates purity");
  }
  for (const auto& s : all)
    if (static_cast<int>(s.size()) - 1 > x.max_level(s))
      report("simplex " + braces(x.ids(s)) + " has dimension above its stratum dimension " +
             std::to_string(x.max_level(s)));
  if (!errors.empty()) throw ValidationError(errors);

  // Strata: components of level-i vertices joined by level-i edges.
  std::vector<int> parent(x.vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : x.simplices(1))
    if (x.level(e[0]) == x.level(e[1])) parent[find(e[0])] = find(e[1]);
  std::map<int, int> root_to_stratum;
  x.vertex_stratum_.assign(x.vertices_.size(), -1);
  for (std::size_t v = 0; v < x.vertices_.size(); ++v) {
    int r = find(static_cast<int>(v));
    auto [it, inserted] = root_to_stratum.emplace(r, static_cast<int>(x.strata_.size()));
    if (inserted) {
      Stratum st;
      st.level = x.vertices_[v].level;
      st.codim = n - st.level;
      st.regular = st.level == n;
      st.name = "L" + std::to_string(st.level) + ":" + x.vertices_[v].id;
      x.strata_.push_back(st);
    }
    x.strata_[static_cast<std::size_t>(it->second)].vertices.push_back(static_cast<int>(v));
    x.vertex_stratum_[v] = it->second;
  }
  return x;
}

namespace {

std::string fresh_id(const RawComplex& r, const std::string& base) {
  std::set<std::string> used;
  for (const auto& v : r.vertices) used.insert(v.id);
  std::string id = base;
  for (int i = 1; used.count(id); ++i) id = base + std::to_string(i);
  return id;
}

}  // namespace

FilteredComplex cone(const FilteredComplex& link) {
  if (link.vertex_count() == 0) throw ValidationError("cannot cone an empty link");
  RawComplex r = link.raw();
  const std::string apex = fresh_id(r, "apex");
  for (auto& v : r.vertices) ++v.level;
  r.dimension += 1;
  const std::size_t m = r.simplices.size();
  for (std::size_t i = 0; i < m; ++i) {
    auto s = r.simplices[i];
    s.insert(s.begin(), apex);
    r.simplices.push_back(std::move(s));
  }
  r.vertices.insert(r.vertices.begin(), Vertex{apex, 0});
  r.simplices.push_back({apex});
  return validate(r);
}

FilteredComplex suspension(const FilteredComplex& link) {
  if (link.vertex_count() == 0) throw ValidationError("cannot suspend an empty link");
  RawComplex r = link.raw();
  const std::string north = fresh_id(r, "north");
  const std::string south = fresh_id(r, "south");
  for (auto& v : r.vertices) ++v.level;
  r.dimension += 1;
  const std::size_t m = r.simplices.size();
  for (const auto& apex : {north, south}) {
    for (std::size_t i = 0; i < m; ++i) {
      auto s = r.simplices[i];
      s.insert(s.begin(), apex);
      r.simplices.push_back(std::move(s));
    }
    r.simplices.push_back({apex});
  }
  r.vertices.insert(r.vertices.begin(), {Vertex{north, 0}, Vertex{south, 0}});
  return validate(r);
}

FilteredComplex disjoint_union(const FilteredComplex& a, const FilteredComplex& b) {
  if (a.dimension() != b.dimension()) throw ValidationError("disjoint union of complexes of different dimension");
  RawComplex r;
  r.dimension = a.dimension();
  int tag = 1;
  for (const FilteredComplex* part : {&a, &b}) {
    RawComplex p = part->raw();
    const std::string prefix = std::to_string(tag++) + ".";
    for (auto v : p.vertices) r.vertices.push_back({prefix + v.id, v.level});
    for (auto s : p.simplices) {
      for (auto& id : s) id = prefix + id;
      r.simplices.push_back(std::move(s));
    }
  }
  return validate(r);
}

GMPerversity::GMPerversity(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  std::vector<std::string> errors;
  if (static_cast<int>(values_.size()) != n + 1)
    throw ValidationError("GM perversity needs " + std::to_string(n + 1) + " values p(0..n)");
  for (int i = 0; i <= std::min(n, 2); ++i)
    if (values_[static_cast<std::size_t>(i)] != 0) errors.push_back("p(" + std::to_string(i) + ") must be 0");
  for (int i = 2; i < n; ++i) {
    int a = values_[static_cast<std::size_t>(i)], b = values_[static_cast<std::size_t>(i + 1)];
    if (b < a || b > a + 1)
      errors.push_back("growth condition fails between p(" + std::to_string(i) + ") and p(" + std::to_string(i + 1) +
                       ")");
  }
  if (!errors.empty()) throw ValidationError(errors);
}

GMPerversity GMPerversity::zero(int n) { return GMPerversity(n, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)); }

GMPerversity GMPerversity::top(int n) {
  std::vector<int> v;
  for (int i = 0; i <= n; ++i) v.push_back(top_perversity(i));
  return GMPerversity(n, v);
}

GMPerversity GMPerversity::constant(int n, int k) {
  std::vector<int> v;
  for (int i = 0; i <= n; ++i) v.push_back(std::max(0, std::min(k, i - 2)));
  return GMPerversity(n, v);
}

int GMPerversity::operator()(int codim) const {
  if (codim < 0 || codim > n_) throw std::out_of_range("codimension outside 0..n");
  return values_[static_cast<std::size_t>(codim)];
}

std::string GMPerversity::name() const {
  std::string s = "GM(";
  for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
  return s + ")";
}

int top_perversity(int codim) { return codim >= 2 ? codim - 2 : 0; }

GMPerversity complementary(const GMPerversity& p) {
  std::vector<int> v;
  for (int i = 0; i <= p.dimension(); ++i) v.push_back(top_perversity(i) - p(i));
  return GMPerversity(p.dimension(), v);
}

Perversity::Perversity(const FilteredComplex& x, std::vector<int> values) : values_(std::move(values)) {
  if (values_.size() != x.strata().size())
    throw ValidationError("perversity has " + std::to_string(values_.size()) + " values for " +
                          std::to_string(x.strata().size()) + " strata");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (x.strata()[i].regular && values_[i] != 0)
      throw ValidationError("perversity must vanish on the regular stratum " + x.strata()[i].name);
}

Perversity Perversity::from_gm(const FilteredComplex& x, const GMPerversity& p) {
  if (p.dimension() != x.dimension()) throw ValidationError("GM perversity dimension does not match the complex");
  std::vector<int> v;
  for (const auto& s : x.strata()) v.push_back(s.regular ? 0 : p(s.codim));
  return Perversity(x, v);
}

Perversity Perversity::uniform(const FilteredComplex& x, int k) {
  std::vector<int> v;
  for (const auto& s : x.strata()) v.push_back(s.regular ? 0 : k);
  return Perversity(x, v);
}

std::string Perversity::name() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
  return s + "]";
}

Perversity complementary(const FilteredComplex& x, const Perversity& p) {
  std::vector<int> v;
  for (std::size_t i = 0; i < x.strata().size(); ++i) {
    const auto& s = x.strata()[i];
    v.push_back(s.regular ? 0 : top_perversity(s.codim) - p(static_cast<int>(i)));
  }
  return Perversity(x, v);
}

bool leq(const Perversity& p, const Perversity& q) {
  if (p.values().size() != q.values().size()) throw ValidationError("perversities on different complexes");
  for (std::size_t i = 0; i < p.values().size(); ++i)
    if (p.values()[i] > q.values()[i]) return false;
  return true;
}

}  // namespace strathom
