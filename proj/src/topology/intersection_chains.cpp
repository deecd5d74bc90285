#include "strathom/topology/intersection_chains.hpp"

#include <algorithm>

namespace strathom {

PerverseDegreeVector perverse_degree(const FilteredComplex& x, const Simplex& s) {
  const int n = x.dimension();
  PerverseDegreeVector out(static_cast<std::size_t>(n) + 1, kMinusInfinity);
  for (int l = 1; l <= n; ++l) {
    int count = 0;
    for (int v : s)
      if (x.level(v) <= n - l) ++count;
    out[static_cast<std::size_t>(l)] = count == 0 ? kMinusInfinity : count - 1;
  }
  return out;
}

bool meets(const FilteredComplex& x, const Simplex& s, int stratum) {
  return std::any_of(s.begin(), s.end(), [&](int v) { return x.stratum_of_vertex(v) == stratum; });
}

int stratum_degree(const FilteredComplex& x, const Simplex& s, int stratum) {
  if (!meets(x, s, stratum)) return kMinusInfinity;
  return perverse_degree(x, s)[static_cast<std::size_t>(x.strata()[static_cast<std::size_t>(stratum)].codim)];
}

bool allowable(const FilteredComplex& x, const Simplex& s, const Perversity& p) {
  const int dim = static_cast<int>(s.size()) - 1;
  PerverseDegreeVector deg = perverse_degree(x, s);
  for (int st : x.singular_strata()) {
    if (!meets(x, s, st)) continue;
    const int codim = x.strata()[static_cast<std::size_t>(st)].codim;
    if (deg[static_cast<std::size_t>(codim)] > dim - codim + p(st)) return false;
  }
  return true;
}

std::vector<std::pair<Simplex, int>> regular_boundary(const FilteredComplex& x, const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<long>(i));
    if (x.is_regular(f)) out.emplace_back(std::move(f), i % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::vector<Simplex> regular_simplices(const FilteredComplex& x, int k) {
  std::vector<Simplex> out;
  for (const auto& s : x.simplices(k))
    if (x.is_regular(s)) out.push_back(s);
  return out;
}

namespace {

std::map<Simplex, std::size_t> positions(const std::vector<Simplex>& list) {
  std::map<Simplex, std::size_t> m;
  for (std::size_t i = 0; i < list.size(); ++i) m.emplace(list[i], i);
  return m;
}

}  // namespace

AdmissibleSubcomplex admissible_subcomplex(const ChainComplex& full, const std::map<int, std::vector<bool>>& allowed,
                                           const Coefficients& ring) {
  const Coefficients work = ring.is_prime_field() ? ring : Coefficients::integers();
  const int step = full.step();
  AdmissibleSubcomplex out;
  std::map<int, std::vector<std::size_t>> blocked;
  for (const auto& [k, n] : full.dims()) {
    auto it = allowed.find(k);
    out.allowed[k];
    for (std::size_t i = 0; i < n; ++i)
      (it != allowed.end() && it->second.at(i) ? out.allowed[k] : blocked[k]).push_back(i);
  }
  for (const auto& [k, cols] : out.allowed) {
    Matrix d = full.differential(k);
    auto target = blocked.find(k + step);
    Matrix constraint = target == blocked.end() ? Matrix(0, cols.size()) : d.select_rows(target->second).select_columns(cols);
    Kernel lattice;
    if (constraint.rows() == 0 || constraint.reduced(work).is_zero()) {
      lattice.basis = Matrix::identity(cols.size());
      lattice.coords = Matrix::identity(cols.size());
    } else {
      lattice = kernel(constraint, work);
    }
    out.lattice[k] = std::move(lattice);
  }
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (const auto& [k, l] : out.lattice) dims[k] = l.dim();
  for (const auto& [k, l] : out.lattice) {
    auto next = out.lattice.find(k + step);
    if (next == out.lattice.end() || l.dim() == 0 || next->second.dim() == 0) continue;
    Matrix d = full.differential(k).select_rows(out.allowed[k + step]).select_columns(out.allowed[k]);
    Matrix image = (d * l.basis).reduced(work);
    Matrix restricted = (next->second.coords * image).reduced(work);
    if (!((next->second.basis * restricted).reduced(work) == image))
      throw std::logic_error("differential leaves the admissible lattice");
    diffs[k] = restricted;
  }
  out.complex = ChainComplex(full.orientation(), dims, diffs, {}, work);
  return out;
}

ChainMap inclusion_map(const AdmissibleSubcomplex& sub, const AdmissibleSubcomplex& super) {
  const Coefficients& work = super.complex.ring();
  ChainMap f;
  for (const auto& [k, l] : sub.lattice) {
    auto big = super.lattice.find(k);
    if (big == super.lattice.end()) throw ValidationError("inclusion between complexes of different support");
    std::map<std::size_t, std::size_t> pos;
    const auto& big_allowed = super.allowed.at(k);
    for (std::size_t i = 0; i < big_allowed.size(); ++i) pos[big_allowed[i]] = i;
    const auto& small_allowed = sub.allowed.at(k);
    Matrix embedded(big_allowed.size(), l.dim());
    for (std::size_t i = 0; i < small_allowed.size(); ++i) {
      auto it = pos.find(small_allowed[i]);
      if (it == pos.end()) throw ValidationError("sub complex is not contained in the larger one");
      for (std::size_t j = 0; j < l.dim(); ++j) embedded(it->second, j) = l.basis(i, j);
    }
    Matrix coords = (big->second.coords * embedded).reduced(work);
    if (!((big->second.basis * coords).reduced(work) == embedded.reduced(work)))
      throw ValidationError("sub lattice is not contained in the larger lattice");
    f.components[k] = coords;
  }
  return f;
}

ChainComplex regular_chain_complex(const FilteredComplex& x) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  std::map<int, std::vector<Simplex>> cells;
  for (int k = 0; k <= x.dimension(); ++k) {
    cells[k] = regular_simplices(x, k);
    dims[k] = cells[k].size();
  }
  for (int k = 1; k <= x.dimension(); ++k) {
    auto pos = positions(cells[k - 1]);
    Matrix d(cells[k - 1].size(), cells[k].size());
    for (std::size_t j = 0; j < cells[k].size(); ++j)
      for (const auto& [f, sign] : regular_boundary(x, cells[k][j])) d(pos.at(f), j) += sign;
    diffs[k] = d;
  }
  return ChainComplex(Orientation::Homological, dims, diffs);
}

IntersectionComplex intersection_complex(const FilteredComplex& x, const Perversity& p, const Coefficients& ring) {
  ChainComplex full = regular_chain_complex(x);
  std::map<int, std::vector<bool>> allowed;
  std::map<int, std::vector<Simplex>> cells;
  for (int k = 0; k <= x.dimension(); ++k) {
    cells[k] = regular_simplices(x, k);
    for (const auto& s : cells[k]) allowed[k].push_back(allowable(x, s, p));
  }
  IntersectionComplex ic;
  ic.lattices = admissible_subcomplex(full, allowed, ring);
  ic.complex = ic.lattices.complex;
  for (const auto& [k, idx] : ic.lattices.allowed) {
    for (std::size_t i : idx) ic.allowable_simplices[k].push_back(cells[k][i]);
    ic.basis[k] = ic.lattices.lattice[k].basis;
  }
  return ic;
}

GradedModule intersection_homology(const FilteredComplex& x, const Perversity& p, const Coefficients& ring) {
  return homology_all(intersection_complex(x, p, ring).complex, ring);
}

GradedModule intersection_cohomology(const FilteredComplex& x, const Perversity& p, const Coefficients& ring) {
  return homology_all(intersection_complex(x, p, ring).complex.dual(), ring);
}

ChainComplex simplicial_chain_complex(const FilteredComplex& x) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int k = 0; k <= x.dimension(); ++k) dims[k] = x.simplices(k).size();
  for (int k = 1; k <= x.dimension(); ++k) {
    const auto& cols = x.simplices(k);
    Matrix d(x.simplices(k - 1).size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        Simplex f = cols[j];
        f.erase(f.begin() + static_cast<long>(i));
        d(*x.index_of(f), j) = i % 2 == 0 ? 1 : -1;
      }
    diffs[k] = d;
  }
  return ChainComplex(Orientation::Homological, dims, diffs);
}

}  // namespace strathom
