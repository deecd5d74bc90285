#include <algorithm>
#include <array>
#include <iterator>
#include <set>

#include "strathom/topology/stratified_complex.hpp"

namespace strathom {

namespace {

using Facets = std::vector<std::vector<int>>;

FilteredComplex manifold(int n, const Facets& facets) {
  RawComplex r;
  r.dimension = n;
  r.facets_only = true;
  std::set<int> used;
  for (const auto& f : facets) used.insert(f.begin(), f.end());
  for (int v : used) r.vertices.push_back({std::to_string(v), n});
  for (const auto& f : facets) {
    std::vector<std::string> ids;
    for (int v : f) ids.push_back(std::to_string(v));
    r.simplices.push_back(ids);
  }
  return validate(r);
}

Facets boundary_of_simplex(int n) {
  Facets out;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(v);
    out.push_back(f);
  }
  return out;
}

// Barycentric subdivision of the boundary of the 4-dimensional cross-polytope
// modulo the antipodal map. A face is a signed subset of {1,2,3,4}; its class
// is represented with a positive smallest coordinate.
Facets projective_three_space() {
  using Face = std::vector<int>;  // signed coordinates, sorted by |c|
  auto canonical = [](Face f) {
    if (f.front() < 0)
      for (int& c : f) c = -c;
    return f;
  };
  std::map<Face, int> ids;
  auto id_of = [&](const Face& f) {
    Face c = canonical(f);
    auto it = ids.find(c);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(ids.size());
    ids.emplace(c, id);
    return id;
  };
  std::set<std::vector<int>> facets;
  std::array<int, 4> perm{1, 2, 3, 4};
  do {
    for (int signs = 0; signs < 16; ++signs) {
      // Flag of faces {c0} < {c0,c1} < ... built from the permutation.
      std::vector<int> facet;
      Face face;
      for (int i = 0; i < 4; ++i) {
        int c = perm[static_cast<std::size_t>(i)];
        face.push_back((signs >> (c - 1)) & 1 ? -c : c);
        Face sorted = face;
        std::sort(sorted.begin(), sorted.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
        facet.push_back(id_of(sorted));
      }
      std::sort(facet.begin(), facet.end());
      facets.insert(facet);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Facets(facets.begin(), facets.end());
}

// Greedy edge contractions subject to the link condition lk(a) & lk(b) = lk(ab),
// which preserve the PL type of a closed manifold.
Facets contract_edges(Facets facets) {
  auto faces_of = [](const Facets& fs) {
    std::set<std::vector<int>> all;
    for (const auto& f : fs)
      for (unsigned long mask = 1; mask < (1UL << f.size()); ++mask) {
        std::vector<int> t;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (mask & (1UL << i)) t.push_back(f[i]);
        all.insert(t);
      }
    return all;
  };
  auto link = [](const std::set<std::vector<int>>& all, const std::vector<int>& s) {
    std::set<std::vector<int>> out;
    for (const auto& t : all) {
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end()) || t.size() == s.size()) continue;
      std::vector<int> rest;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
      out.insert(rest);
    }
    return out;
  };
  for (bool changed = true; changed;) {
    changed = false;
    auto all = faces_of(facets);
    for (const auto& e : all) {
      if (e.size() != 2) continue;
      auto la = link(all, {e[0]}), lb = link(all, {e[1]}), lab = link(all, e);
      std::set<std::vector<int>> common;
      std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::inserter(common, common.begin()));
      if (common != lab) continue;
      Facets next;
      for (auto f : facets) {
        if (std::count(f.begin(), f.end(), e[1]) == 0) {
          next.push_back(f);
          continue;
        }
        if (std::count(f.begin(), f.end(), e[0]) != 0) continue;
        std::replace(f.begin(), f.end(), e[1], e[0]);
        std::sort(f.begin(), f.end());
        next.push_back(f);
      }
      facets = next;
      changed = true;
      break;
    }
  }
  return facets;
}

}  // namespace

std::vector<std::string> triangulation_names() { return {"S1", "S2", "S3", "RP2", "T2", "RP3"}; }

FilteredComplex triangulation(const std::string& name) {
  if (name == "S1") return manifold(1, boundary_of_simplex(1));
  if (name == "S2") return manifold(2, boundary_of_simplex(2));
  if (name == "S3") return manifold(3, boundary_of_simplex(3));
  if (name == "RP2")
    return manifold(2, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                        {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
  if (name == "T2") {
    Facets f;
    for (int i = 0; i < 7; ++i) {
      f.push_back({i, (i + 1) % 7, (i + 3) % 7});
      f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return manifold(2, f);
  }
  if (name == "RP3") return manifold(3, contract_edges(projective_three_space()));
  throw ValidationError("no triangulation registered for '" + name + "'");
}

}  // namespace strathom
