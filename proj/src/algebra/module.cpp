#include "strathom/algebra/module.hpp"

#include <algorithm>
#include <sstream>

#include "strathom/algebra/smith.hpp"

namespace strathom {

FGModule FGModule::free(std::size_t rank) {
  FGModule m;
  m.free_rank_ = rank;
  return m;
}

FGModule FGModule::cyclic(const Integer& order) { return from_orders(0, {order}); }

FGModule FGModule::from_orders(std::size_t free_rank, const std::vector<Integer>& orders) {
  FGModule m;
  m.free_rank_ = free_rank;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (o == 0)
      ++m.free_rank_;
    else if (abs(o) != 1)
      finite.push_back(abs(o));
  }
  if (finite.empty()) return m;
  Matrix d(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
  for (const auto& f : invariant_factors(d))
    if (f != 1) m.torsion_.push_back(f);
  return m;
}

Integer FGModule::order() const {
  if (free_rank_ != 0) throw std::domain_error("order of a module with a free part");
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

std::size_t FGModule::p_rank(long p) const {
  std::size_t n = 0;
  for (const auto& d : torsion_)
    if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) ++n;
  return n;
}

std::vector<Integer> FGModule::cyclic_orders() const {
  std::vector<Integer> out(free_rank_, Integer(0));
  out.insert(out.end(), torsion_.begin(), torsion_.end());
  return out;
}

std::size_t FGModule::tensor_dimension(const Coefficients& ring) const {
  if (ring.is_prime_field()) return free_rank_ + p_rank(ring.characteristic());
  return free_rank_;
}

std::string FGModule::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1)
    parts.push_back("Z");
  else if (free_rank_ > 1)
    parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return out;
}

FGModule operator+(const FGModule& a, const FGModule& b) {
  std::vector<Integer> orders = a.torsion_;
  orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
  return FGModule::from_orders(a.free_rank_ + b.free_rank_, orders);
}

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

FGModule tensor(const FGModule& a, const FGModule& b) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < a.free_rank(); ++i) orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  for (std::size_t i = 0; i < b.free_rank(); ++i) orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
  for (const auto& x : a.torsion())
    for (const auto& y : b.torsion()) orders.push_back(gcd_of(x, y));
  return FGModule::from_orders(a.free_rank() * b.free_rank(), orders);
}

FGModule tor(const FGModule& a, const FGModule& b) {
  std::vector<Integer> orders;
  for (const auto& x : a.torsion())
    for (const auto& y : b.torsion()) orders.push_back(gcd_of(x, y));
  return FGModule::from_orders(0, orders);
}

FGModule hom_dual(const FGModule& m) { return m.free_part(); }
FGModule ext_dual(const FGModule& m) { return m.torsion_part(); }

GradedModule::GradedModule(std::initializer_list<std::pair<const int, FGModule>> init) {
  for (const auto& [k, m] : init) set(k, m);
}

const FGModule& GradedModule::operator[](int k) const {
  static const FGModule zero;
  auto it = parts_.find(k);
  return it == parts_.end() ? zero : it->second;
}

void GradedModule::set(int k, const FGModule& m) {
  if (m.is_zero())
    parts_.erase(k);
  else
    parts_[k] = m;
}

std::vector<int> GradedModule::degrees() const {
  std::vector<int> out;
  for (const auto& [k, m] : parts_) out.push_back(k);
  return out;
}

bool GradedModule::is_torsion() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const auto& e) { return e.second.is_torsion(); });
}

int GradedModule::min_degree() const { return parts_.empty() ? 0 : parts_.begin()->first; }
int GradedModule::max_degree() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }

GradedModule GradedModule::shifted(int s) const {
  GradedModule g;
  for (const auto& [k, m] : parts_) g.set(k + s, m);
  return g;
}

GradedModule GradedModule::free_part() const {
  GradedModule g;
  for (const auto& [k, m] : parts_) g.set(k, m.free_part());
  return g;
}

GradedModule GradedModule::torsion_part() const {
  GradedModule g;
  for (const auto& [k, m] : parts_) g.set(k, m.torsion_part());
  return g;
}

std::string GradedModule::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : parts_) {
    os << (first ? "" : ", ") << k << ": " << m.to_string();
    first = false;
  }
  return os.str();
}

GradedModule operator+(const GradedModule& a, const GradedModule& b) {
  GradedModule g = a;
  for (const auto& [k, m] : b.parts_) g.add(k, m);
  return g;
}

GradedModule verdier_dual_homology(const GradedModule& h, int /*n*/) {
  GradedModule out;
  if (h.is_zero()) return out;
  for (int k = h.min_degree() - 1; k <= h.max_degree(); ++k) out.set(k, hom_dual(h[k]) + ext_dual(h[k + 1]));
  return out;
}

GradedModule regrade(const GradedModule& g, int n) {
  GradedModule out;
  for (const auto& [k, m] : g.entries()) out.set(n - k, m);
  return out;
}

GradedModule kunneth(const GradedModule& a, const GradedModule& b) {
  GradedModule out;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) {
      out.add(i + j, tensor(x, y));
      out.add(i + j + 1, tor(x, y));
    }
  return out;
}

GradedModule kunneth_cohomology(const GradedModule& a, const GradedModule& b) {
  GradedModule out;
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) {
      out.add(i + j, tensor(x, y));
      out.add(i + j - 1, tor(x, y));
    }
  return out;
}

GradedModule cohomology_from_homology(const GradedModule& h) {
  GradedModule out;
  if (h.is_zero()) return out;
  for (int k = h.min_degree(); k <= h.max_degree() + 1; ++k) out.set(k, h[k].free_part() + h[k - 1].torsion_part());
  return out;
}

namespace {

void require_field(const Coefficients& ring) {
  if (!ring.is_field()) throw std::invalid_argument("field coefficients required");
}

}  // namespace

std::size_t field_homology_dimension(const GradedModule& h, int k, const Coefficients& ring) {
  require_field(ring);
  if (!ring.is_prime_field()) return h[k].free_rank();
  long p = ring.characteristic();
  return h[k].free_rank() + h[k].p_rank(p) + h[k - 1].p_rank(p);
}

std::size_t field_cohomology_dimension(const GradedModule& h, int k, const Coefficients& ring) {
  require_field(ring);
  if (!ring.is_prime_field()) return h[k].free_rank();
  long p = ring.characteristic();
  return h[k].free_rank() + h[k].p_rank(p) + h[k + 1].p_rank(p);
}

GradedModule over_field_from_homology(const GradedModule& h, const Coefficients& ring) {
  GradedModule out;
  if (h.is_zero()) return out;
  for (int k = h.min_degree(); k <= h.max_degree() + 1; ++k)
    out.set(k, FGModule::free(field_homology_dimension(h, k, ring)));
  return out;
}

Presentation Presentation::free(std::size_t n) { return {n, Matrix(n, 0)}; }

Presentation Presentation::cyclic(const std::vector<Integer>& orders) {
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) finite.push_back(i);
  Presentation p{orders.size(), Matrix(orders.size(), finite.size())};
  for (std::size_t j = 0; j < finite.size(); ++j) p.relations(finite[j], j) = orders[finite[j]];
  return p;
}

FGModule Presentation::module() const {
  auto factors = smith(relations, Coefficients::integers(), false).diagonal;
  return FGModule::from_orders(generators - factors.size(), factors);
}

ModuleMap ModuleMap::between(const FGModule& dom, const FGModule& cod, const Matrix& m) {
  ModuleMap f{Presentation::of(dom), Presentation::of(cod), m};
  if (m.rows() != f.codomain.generators || m.cols() != f.domain.generators)
    throw ValidationError("module map matrix has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(f.codomain.generators) +
                          "x" + std::to_string(f.domain.generators));
  f.validate();
  return f;
}

ModuleMap ModuleMap::identity(const FGModule& m) {
  return between(m, m, Matrix::identity(m.number_of_generators()));
}

bool in_column_span(const Matrix& r, const std::vector<Integer>& x) {
  if (r.cols() == 0) return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
  SmithDecomposition s = smith(r, Coefficients::integers(), true);
  std::vector<Integer> y = s.U * x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < s.rank()) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.diagonal[i].get_mpz_t())) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

void ModuleMap::validate() const {
  if (matrix.rows() != codomain.generators || matrix.cols() != domain.generators)
    throw ValidationError("module map matrix shape does not match its presentations");
  Matrix image = matrix * domain.relations;
  std::vector<std::string> bad;
  for (std::size_t j = 0; j < image.cols(); ++j)
    if (!in_column_span(codomain.relations, image.column(j)))
      bad.push_back("relation " + std::to_string(j) + " of the domain does not map to a relation");
  if (!bad.empty()) throw ValidationError(bad);
}

FGModule lattice_quotient(const Matrix& m_gens, const Matrix& n_gens) {
  const std::size_t dim = m_gens.rows();
  if (n_gens.rows() != dim) throw std::invalid_argument("lattice_quotient: ambient mismatch");
  SmithDecomposition s = smith(m_gens, Coefficients::integers(), true);
  const std::size_t r = s.rank();
  Matrix coords(r, n_gens.cols());
  for (std::size_t j = 0; j < n_gens.cols(); ++j) {
    std::vector<Integer> y = s.U * n_gens.column(j);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i < r) {
        if (!mpz_divisible_p(y[i].get_mpz_t(), s.diagonal[i].get_mpz_t()))
          throw ValidationError("sublattice is not contained in the ambient lattice");
        mpz_divexact(coords(i, j).get_mpz_t(), y[i].get_mpz_t(), s.diagonal[i].get_mpz_t());
      } else if (y[i] != 0) {
        throw ValidationError("sublattice is not contained in the ambient lattice");
      }
    }
  }
  return Presentation{r, coords}.module();
}

KerCoker ker_coker(const ModuleMap& f) {
  f.validate();
  const std::size_t n = f.domain.generators;
  KerCoker out;
  out.cokernel = Presentation{f.codomain.generators, Matrix::hstack(f.matrix, f.codomain.relations)}.module();
  Matrix stacked = Matrix::hstack(f.matrix, f.codomain.relations);
  Kernel k = kernel(stacked);
  std::vector<std::size_t> top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = i;
  Matrix lifted = k.basis.select_rows(top);
  out.kernel = lattice_quotient(lifted, f.domain.relations);
  return out;
}

}  // namespace strathom
