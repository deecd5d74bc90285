#include "strathom/algebra/chain_complex.hpp"

#include <set>

namespace strathom {

ChainComplex::ChainComplex(Orientation orientation, std::map<int, std::size_t> dims,
                           std::map<int, Matrix> differentials, std::map<int, std::vector<std::string>> labels,
                           const Coefficients& ring)
    : orientation_(orientation),
      dims_(std::move(dims)),
      diffs_(std::move(differentials)),
      labels_(std::move(labels)),
      ring_(ring) {
  for (auto it = dims_.begin(); it != dims_.end();) it = it->second == 0 ? dims_.erase(it) : std::next(it);
  std::vector<std::string> errors;
  for (const auto& [k, d] : diffs_) {
    if (d.rows() != dim(k + step()) || d.cols() != dim(k))
      errors.push_back("differential in degree " + std::to_string(k) + " has shape " + std::to_string(d.rows()) +
                       "x" + std::to_string(d.cols()) + ", expected " + std::to_string(dim(k + step())) + "x" +
                       std::to_string(dim(k)));
  }
  for (const auto& [k, l] : labels_)
    if (l.size() != dim(k)) errors.push_back("label count mismatch in degree " + std::to_string(k));
  if (!errors.empty()) throw ValidationError(errors);
  if (!is_complex()) throw ValidationError("composition of consecutive differentials is not zero");
}

std::size_t ChainComplex::dim(int k) const {
  auto it = dims_.find(k);
  return it == dims_.end() ? 0 : it->second;
}

Matrix ChainComplex::differential(int k) const {
  auto it = diffs_.find(k);
  if (it != diffs_.end()) return it->second;
  return Matrix(dim(k + step()), dim(k));
}

const std::vector<std::string>& ChainComplex::labels(int k) const {
  static const std::vector<std::string> none;
  auto it = labels_.find(k);
  return it == labels_.end() ? none : it->second;
}

int ChainComplex::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
int ChainComplex::max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

bool ChainComplex::is_complex() const {
  for (const auto& [k, d] : diffs_) {
    auto next = diffs_.find(k + step());
    if (next == diffs_.end()) continue;
    if (!(next->second * d).reduced(ring_).is_zero()) return false;
  }
  return true;
}

ChainComplex ChainComplex::dual() const {
  Orientation o = orientation_ == Orientation::Homological ? Orientation::Cohomological : Orientation::Homological;
  std::map<int, Matrix> diffs;
  // The dual differential leaves degree k and is the transpose of the
  // original one arriving at k.
  for (const auto& [k, d] : diffs_) {
    int target = k + step();
    Matrix t = d.transpose();
    if (target % 2 == 0) t = -t;
    diffs.emplace(target, std::move(t));
  }
  return ChainComplex(o, dims_, std::move(diffs), labels_, ring_);
}

FGModule homology(const ChainComplex& c, int k, const Coefficients& requested) {
  // A complex of residues only has homology over its own field.
  const Coefficients& ring = c.ring().is_prime_field() ? c.ring() : requested;
  const std::size_t n = c.dim(k);
  if (n == 0) return {};
  Coefficients work = ring.is_prime_field() ? ring : Coefficients::integers();
  std::size_t rank_out = c.dim(k + c.step()) == 0 ? 0 : rank(c.differential(k), work);
  std::vector<Integer> in;
  if (c.dim(k - c.step()) != 0) in = smith(c.differential(k - c.step()), work, false).diagonal;
  std::size_t free_rank = n - rank_out - in.size();
  if (ring.kind() != Coefficients::Kind::Integers) return FGModule::free(free_rank);
  return FGModule::from_orders(free_rank, in);
}

GradedModule homology_all(const ChainComplex& c, const Coefficients& ring) {
  GradedModule g;
  for (const auto& [k, n] : c.dims()) g.set(k, homology(c, k, ring));
  return g;
}

Matrix ChainMap::at(const ChainComplex& src, const ChainComplex& tgt, int k) const {
  auto it = components.find(k);
  if (it != components.end()) return it->second;
  return Matrix(tgt.dim(k), src.dim(k));
}

void check_chain_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt) {
  if (src.orientation() != tgt.orientation()) throw ValidationError("chain map between complexes of different orientation");
  std::vector<std::string> errors;
  for (const auto& [k, m] : f.components)
    if (m.rows() != tgt.dim(k) || m.cols() != src.dim(k))
      errors.push_back("chain map component in degree " + std::to_string(k) + " has the wrong shape");
  if (!errors.empty()) throw ValidationError(errors);
  std::set<int> degrees;
  for (const auto& [k, n] : src.dims()) degrees.insert(k);
  for (int k : degrees) {
    Matrix lhs = tgt.differential(k) * f.at(src, tgt, k);
    Matrix rhs = f.at(src, tgt, k + src.step()) * src.differential(k);
    if (!(lhs.reduced(tgt.ring()) == rhs.reduced(tgt.ring()))) errors.push_back("chain map does not commute with differentials in degree " + std::to_string(k));
  }
  if (!errors.empty()) throw ValidationError(errors);
}

namespace {

void place(Matrix& big, const Matrix& block, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) big(r0 + i, c0 + j) = block(i, j);
}

}  // namespace

ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt) {
  check_chain_map(f, src, tgt);
  const int s = tgt.step();
  std::set<int> degrees;
  for (const auto& [k, n] : tgt.dims()) degrees.insert(k);
  for (const auto& [k, n] : src.dims()) degrees.insert(k - s);
  std::map<int, std::size_t> dims;
  for (int k : degrees) dims[k] = tgt.dim(k) + src.dim(k + s);
  std::map<int, Matrix> diffs;
  for (int k : degrees) {
    const int t = k + s;
    const std::size_t rows = tgt.dim(t) + src.dim(t + s);
    const std::size_t cols = tgt.dim(k) + src.dim(k + s);
    if (rows == 0 || cols == 0) continue;
    Matrix d(rows, cols);
    place(d, tgt.differential(k), 0, 0);
    place(d, f.at(src, tgt, t), 0, tgt.dim(k));
    place(d, -src.differential(t), tgt.dim(t), tgt.dim(k));
    diffs.emplace(k, std::move(d));
  }
  return ChainComplex(tgt.orientation(), std::move(dims), std::move(diffs), {}, tgt.ring());
}

HomologyPresentation homology_presentation(const ChainComplex& c, int k) {
  HomologyPresentation h;
  h.cycles = kernel(c.differential(k));
  Matrix boundaries = c.differential(k - c.step());
  h.presentation = Presentation{h.cycles.dim(), h.cycles.coords * boundaries};
  return h;
}

ModuleMap induced_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt, int k) {
  HomologyPresentation a = homology_presentation(src, k);
  HomologyPresentation b = homology_presentation(tgt, k);
  Matrix m = b.cycles.coords * (f.at(src, tgt, k) * a.cycles.basis);
  ModuleMap g{a.presentation, b.presentation, m};
  g.validate();
  return g;
}

}  // namespace strathom
