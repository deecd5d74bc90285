#include "strathom/topology/blowup_cochains.hpp"

#include <set>

namespace strathom {

namespace {

bool eps(const BlowupCell& c, int i) { return (c.cone_vertex >> i) & 1U; }

int factor_degree(const FilteredComplex& x, const BlowupCell& c, const std::vector<std::vector<int>>& parts, int i) {
  const int size = static_cast<int>(parts[static_cast<std::size_t>(i)].size());
  if (i == x.dimension()) return size - 1;
  return size - 1 + (eps(c, i) ? 1 : 0);
}

Simplex without(const Simplex& s, int v) {
  Simplex out;
  for (int w : s)
    if (w != v) out.push_back(w);
  return out;
}

}  // namespace

int cell_degree(const FilteredComplex& x, const BlowupCell& c, int from) {
  auto parts = x.join_parts(c.face);
  int d = 0;
  for (int i = from + 1; i <= x.dimension(); ++i) d += factor_degree(x, c, parts, i);
  return d;
}

int local_perverse_degree(const FilteredComplex& x, const BlowupCell& c, int l) {
  const int n = x.dimension();
  if (l < 1 || l > n) throw std::out_of_range("perverse degree index outside 1..n");
  if (eps(c, n - l)) return kMinusInfinity;
  return cell_degree(x, c, n - l);
}

std::vector<BlowupCell> cells_over(const FilteredComplex& x, const Simplex& s, bool faces) {
  const int n = x.dimension();
  std::vector<Simplex> taus;
  if (faces) {
    const std::size_t k = s.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Simplex t;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) t.push_back(s[i]);
      if (x.is_regular(t)) taus.push_back(t);
    }
  } else if (x.is_regular(s)) {
    taus.push_back(s);
  }
  std::vector<BlowupCell> out;
  for (const auto& t : taus) {
    auto parts = x.join_parts(t);
    unsigned forced = 0;
    std::vector<int> free_levels;
    for (int i = 0; i < n; ++i) {
      if (parts[static_cast<std::size_t>(i)].empty())
        forced |= 1U << i;
      else
        free_levels.push_back(i);
    }
    for (unsigned m = 0; m < (1U << free_levels.size()); ++m) {
      unsigned e = forced;
      for (std::size_t j = 0; j < free_levels.size(); ++j)
        if (m & (1U << j)) e |= 1U << free_levels[j];
      out.push_back({t, e});
    }
  }
  return out;
}

std::vector<std::pair<BlowupCell, int>> cell_boundary(const FilteredComplex& x, const BlowupCell& c) {
  const int n = x.dimension();
  auto parts = x.join_parts(c.face);
  std::vector<std::pair<BlowupCell, int>> out;
  int before = 0;  // total degree of the factors left of i
  for (int i = 0; i <= n; ++i) {
    const auto& f = parts[static_cast<std::size_t>(i)];
    const int sign = before % 2 == 0 ? 1 : -1;
    if (i < n && eps(c, i)) {
      if (!f.empty()) out.push_back({{c.face, c.cone_vertex & ~(1U << i)}, sign});
      for (std::size_t k = 0; k < f.size(); ++k)
        out.push_back({{without(c.face, f[k]), c.cone_vertex}, (k % 2 == 0 ? -1 : 1) * sign});
    } else if (f.size() > 1) {
      for (std::size_t k = 0; k < f.size(); ++k) {
        BlowupCell g{without(c.face, f[k]), c.cone_vertex};
        out.push_back({g, (k % 2 == 0 ? 1 : -1) * sign});
      }
    }
    before += factor_degree(x, c, parts, i);
  }
  return out;
}

namespace {

BlowupBasis assemble(const FilteredComplex& x, const std::vector<BlowupCell>& all) {
  BlowupBasis b;
  std::map<BlowupCell, std::pair<int, std::size_t>> index;
  std::set<BlowupCell> unique(all.begin(), all.end());
  for (const auto& c : unique) {
    int d = cell_degree(x, c);
    index[c] = {d, b.cells[d].size()};
    b.cells[d].push_back(c);
  }
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (const auto& [d, list] : b.cells) dims[d] = list.size();
  for (const auto& [d, list] : b.cells) {
    auto next = b.cells.find(d + 1);
    if (next == b.cells.end()) continue;
    Matrix delta(next->second.size(), list.size());
    for (std::size_t r = 0; r < next->second.size(); ++r)
      for (const auto& [face, sign] : cell_boundary(x, next->second[r])) {
        auto it = index.find(face);
        if (it == index.end()) throw std::logic_error("cell boundary leaves the cell set");
        delta(r, it->second.second) += sign;
      }
    diffs[d] = delta;
  }
  b.complex = ChainComplex(Orientation::Cohomological, dims, diffs);
  return b;
}

}  // namespace

LocalBlowupComplex local_complex(const FilteredComplex& x, const Simplex& s) {
  if (!x.is_regular(s)) throw ValidationError("local blown-up complex needs a regular simplex");
  LocalBlowupComplex l;
  static_cast<BlowupBasis&>(l) = assemble(x, cells_over(x, s, true));
  return l;
}

BlowupBasis global_blowup_complex(const FilteredComplex& x) {
  std::vector<BlowupCell> all;
  for (int k = 0; k <= x.dimension(); ++k)
    for (const auto& s : x.simplices(k)) {
      auto cells = cells_over(x, s, false);
      all.insert(all.end(), cells.begin(), cells.end());
    }
  return assemble(x, all);
}

bool allowable(const FilteredComplex& x, const BlowupCell& c, const Perversity& p) {
  const int n = x.dimension();
  auto parts = x.join_parts(c.face);
  for (int i = 0; i < n; ++i) {
    if (eps(c, i)) continue;
    const int stratum = x.stratum_of_vertex(parts[static_cast<std::size_t>(i)].front());
    if (cell_degree(x, c, i) > p(stratum)) return false;
  }
  return true;
}

BlowupComplex blowup_complex(const FilteredComplex& x, const Perversity& p, const Coefficients& ring) {
  BlowupComplex b;
  b.global = global_blowup_complex(x);
  std::map<int, std::vector<bool>> allowed;
  for (const auto& [d, list] : b.global.cells)
    for (const auto& c : list) allowed[d].push_back(allowable(x, c, p));
  b.intersection = admissible_subcomplex(b.global.complex, allowed, ring);
  return b;
}

GradedModule blowup_cohomology(const FilteredComplex& x, const Perversity& p, const Coefficients& ring) {
  return homology_all(blowup_complex(x, p, ring).complex(), ring);
}

ChainComplex relative_complex(const FilteredComplex& x, const Perversity& p, const Perversity& q,
                              const Coefficients& ring) {
  if (!leq(p, q)) throw ValidationError("relative complex needs p <= q on every stratum");
  BlowupComplex small = blowup_complex(x, p, ring);
  BlowupComplex big = blowup_complex(x, q, ring);
  ChainMap inc = inclusion_map(small.intersection, big.intersection);
  return mapping_cone(inc, small.complex(), big.complex());
}

GradedModule relative_cohomology(const FilteredComplex& x, const Perversity& p, const Perversity& q,
                                 const Coefficients& ring) {
  return homology_all(relative_complex(x, p, q, ring), ring);
}

}  // namespace strathom
