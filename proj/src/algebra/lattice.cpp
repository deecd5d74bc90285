#include "strathom/algebra/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "strathom/algebra/smith.hpp"

namespace strathom {

namespace {

Matrix top_rows(const Matrix& m, std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return m.select_rows(idx);
}

Matrix kernel_basis(const Matrix& a, std::size_t cols) {
  if (a.rows() == 0) return Matrix::identity(cols);
  if (cols == 0) return Matrix(0, 0);
  return kernel(a).basis;
}

}  // namespace

Matrix saturation(const Matrix& gens) {
  const std::size_t g = gens.rows();
  if (gens.cols() == 0 || gens.is_zero()) return Matrix(g, 0);
  Matrix annihilator = kernel_basis(gens.transpose(), g);
  if (annihilator.cols() == 0) return Matrix::identity(g);
  return kernel_basis(annihilator.transpose(), g);
}

Matrix lattice_intersection(const Matrix& a, const Matrix& b) {
  const std::size_t g = a.rows();
  if (b.rows() != g) throw std::invalid_argument("lattice_intersection: ambient mismatch");
  if (a.cols() == 0 || b.cols() == 0) return Matrix(g, 0);
  Matrix k = kernel_basis(Matrix::hstack(a, -b), a.cols() + b.cols());
  if (k.cols() == 0) return Matrix(g, 0);
  return a * top_rows(k, a.cols());
}

Matrix lattice_preimage(const Matrix& f, const Matrix& target) {
  const std::size_t g = f.cols();
  if (target.rows() != f.rows()) throw std::invalid_argument("lattice_preimage: ambient mismatch");
  if (g == 0) return Matrix(0, 0);
  Matrix k = kernel_basis(Matrix::hstack(f, target), g + target.cols());
  if (k.cols() == 0) return Matrix(g, 0);
  return top_rows(k, g);
}

SubQuotient::SubQuotient(const Matrix& numerator, const Matrix& denominator) : ambient_(numerator.rows()) {
  if (denominator.rows() != ambient_) throw std::invalid_argument("SubQuotient: ambient mismatch");
  std::size_t r = 0;
  Matrix u_inv = Matrix::identity(ambient_);
  if (numerator.cols() > 0 && ambient_ > 0) {
    SmithDecomposition s = smith(numerator);
    basis_u_ = s.U;
    u_inv = s.U_inv;
    r = s.rank();
    for (std::size_t i = 0; i < r; ++i) basis_d_.push_back(abs(s.diagonal[i]));
  } else {
    basis_u_ = Matrix::identity(ambient_);
  }
  // Relations in numerator coordinates.
  Matrix rel(r, denominator.cols());
  for (std::size_t j = 0; j < denominator.cols(); ++j) {
    std::vector<Integer> c;
    if (!numerator_coords(denominator.column(j), c))
      throw ValidationError("denominator lattice is not contained in the numerator");
    for (std::size_t i = 0; i < r; ++i) rel(i, j) = c[i];
  }
  std::vector<Integer> diag;
  quotient_u_ = Matrix::identity(r);
  Matrix quotient_u_inv = Matrix::identity(r);
  if (r > 0 && rel.cols() > 0) {
    SmithDecomposition s = smith(rel);
    quotient_u_ = s.U;
    quotient_u_inv = s.U_inv;
    for (std::size_t i = 0; i < s.rank(); ++i) diag.push_back(abs(s.diagonal[i]));
  }

  for (std::size_t i = diag.size(); i < r; ++i) {
    slots_.push_back(i);
    orders_.push_back(0);
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 1) continue;
    slots_.push_back(i);
    orders_.push_back(diag[i]);
  }

  // Ambient generator i = sum_j basis_j * quotient_u_inv(j, i), basis_j = d_j * U^{-1} e_j.
  generators_ = Matrix(ambient_, slots_.size());
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      Integer coeff = quotient_u_inv(j, slots_[k]) * basis_d_[j];
      if (coeff == 0) continue;
      for (std::size_t a = 0; a < ambient_; ++a) generators_(a, k) += coeff * u_inv(a, j);
    }
  }
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  for (const Integer& o : orders_) {
    if (o == 0) ++free_rank;
    else torsion.push_back(o);
  }
  module_ = FGModule::from_orders(free_rank, torsion);
}

SubQuotient SubQuotient::of(const Presentation& p) {
  return SubQuotient(Matrix::identity(p.generators), p.relations);
}

bool SubQuotient::numerator_coords(const std::vector<Integer>& x, std::vector<Integer>& c) const {
  if (x.size() != ambient_) throw std::invalid_argument("SubQuotient: vector size mismatch");
  std::vector<Integer> y = ambient_ > 0 ? basis_u_ * x : std::vector<Integer>{};
  const std::size_t r = basis_d_.size();
  c.assign(r, 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), basis_d_[i].get_mpz_t())) return false;
      mpz_divexact(c[i].get_mpz_t(), y[i].get_mpz_t(), basis_d_[i].get_mpz_t());
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

bool SubQuotient::contains(const std::vector<Integer>& x) const {
  std::vector<Integer> c;
  return numerator_coords(x, c);
}

std::vector<Integer> SubQuotient::coordinates(const std::vector<Integer>& x) const {
  std::vector<Integer> c;
  if (!numerator_coords(x, c)) throw ValidationError("vector outside the numerator lattice");
  std::vector<Integer> z = c.empty() ? c : quotient_u_ * c;
  std::vector<Integer> out(slots_.size());
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    out[k] = z[slots_[k]];
    if (orders_[k] != 0) mpz_fdiv_r(out[k].get_mpz_t(), out[k].get_mpz_t(), orders_[k].get_mpz_t());
  }
  return out;
}

ModuleMap induced_map(const SubQuotient& dom, const SubQuotient& cod, const Matrix& f) {
  if (f.cols() != dom.ambient() || f.rows() != cod.ambient())
    throw std::invalid_argument("induced_map: shape mismatch");
  const Matrix& gens = dom.generators();
  Matrix m(cod.orders().size(), gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    std::vector<Integer> image = f * gens.column(j);
    std::vector<Integer> c = cod.coordinates(image);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  ModuleMap out = ModuleMap::between(dom.module(), cod.module(), m);
  out.validate();
  return out;
}

}  // namespace strathom
