#include "strathom/algebra/smith.hpp"

#include <algorithm>
#include <limits>

namespace strathom {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state: the working matrix plus the four transforms.
class Reducer {
 public:
  Reducer(const Matrix& a, const Coefficients& ring, bool transforms)
      : a_(a.reduced(ring)), ring_(ring), modp_(ring.is_prime_field()), transforms_(transforms) {
    if (transforms_) {
      u_ = Matrix::identity(a.rows());
      ui_ = Matrix::identity(a.rows());
      v_ = Matrix::identity(a.cols());
      vi_ = Matrix::identity(a.cols());
    }
  }

  void row_add(std::size_t i, std::size_t j, const Integer& c) {
    a_.add_row_multiple(i, j, c);
    if (modp_) a_.reduce_row(i, ring_);
    if (!transforms_) return;
    u_.add_row_multiple(i, j, c);
    ui_.add_col_multiple(j, i, -c);
    if (modp_) {
      u_.reduce_row(i, ring_);
      ui_.reduce_col(j, ring_);
    }
  }

  void col_add(std::size_t j, std::size_t i, const Integer& c) {
    a_.add_col_multiple(j, i, c);
    if (modp_) a_.reduce_col(j, ring_);
    if (!transforms_) return;
    v_.add_col_multiple(j, i, c);
    vi_.add_row_multiple(i, j, -c);
    if (modp_) {
      v_.reduce_col(j, ring_);
      vi_.reduce_row(i, ring_);
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    if (!transforms_) return;
    u_.swap_rows(i, j);
    ui_.swap_cols(i, j);
  }

  void col_swap(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    if (!transforms_) return;
    v_.swap_cols(i, j);
    vi_.swap_rows(i, j);
  }

  // Multiply row i by a unit s (inverse sinv).
  void row_scale(std::size_t i, const Integer& s, const Integer& sinv) {
    a_.scale_row(i, s);
    if (modp_) a_.reduce_row(i, ring_);
    if (!transforms_) return;
    u_.scale_row(i, s);
    ui_.scale_col(i, sinv);
    if (modp_) {
      u_.reduce_row(i, ring_);
      ui_.reduce_col(i, ring_);
    }
  }

  // Pivot of minimal absolute value in the active block, ties broken by the
  // Markowitz fill-in estimate. Returns false when the block is zero.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::vector<std::size_t> row_nnz(m, 0), col_nnz(n, 0);
    const Integer* best = nullptr;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        ++row_nnz[i];
        ++col_nnz[j];
        max_bits_ = std::max(max_bits_, mpz_sizeinbase(x.get_mpz_t(), 2));
        if (best == nullptr || cmpabs(x, *best) < 0) best = &x;
      }
    if (best == nullptr) return false;
    const Integer target = abs(*best);
    std::size_t best_fill = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = a_(i, j);
        if (x == 0 || cmpabs(x, target) != 0) continue;
        std::size_t fill = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (fill < best_fill) {
          best_fill = fill;
          pi = i;
          pj = j;
        }
      }
    return true;
  }

  // Quotient rounding to the nearest integer keeps remainders small.
  static Integer nearest_quotient(const Integer& x, const Integer& d) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    Integer twice = 2 * abs(r);
    if (cmp(twice, abs(d)) > 0) q += 1;
    return q;
  }

  Integer quotient(const Integer& x, const Integer& d) const {
    if (modp_) {
      Integer q = x * ring_.inverse(d);
      ring_.normalize(q);
      return q;
    }
    return nearest_quotient(x, d);
  }

  // Clears row t and column t beyond the pivot; returns false if a smaller
  // remainder appeared and the pivot has to be replaced.
  bool clear_cross(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a_(i, t) == 0) continue;
      Integer q = quotient(a_(i, t), a_(t, t));
      row_add(i, t, -q);
      if (a_(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a_(t, j) == 0) continue;
      Integer q = quotient(a_(t, j), a_(t, t));
      col_add(j, t, -q);
      if (a_(t, j) != 0) clean = false;
    }
    return clean;
  }

  // Moves the smallest nonzero entry of row t / column t onto the diagonal.
  void repivot_cross(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < m; ++i)
      if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n; ++j)
      if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
        bi = t;
        bj = j;
      }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  // Finds an entry of the remaining block not divisible by the pivot.
  bool find_nondivisible(std::size_t t, std::size_t& ri) const {
    if (modp_) return false;
    const std::size_t m = a_.rows(), n = a_.cols();
    const Integer& d = a_(t, t);
    if (d == 1 || d == -1) return false;
    for (std::size_t i = t + 1; i < m; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), d.get_mpz_t())) {
          ri = i;
          return true;
        }
    return false;
  }

  void run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      std::size_t pi = t, pj = t;
      if (!find_pivot(t, pi, pj)) break;
      row_swap(t, pi);
      col_swap(t, pj);
      for (;;) {
        while (!clear_cross(t)) repivot_cross(t);
        std::size_t ri = 0;
        if (!find_nondivisible(t, ri)) break;
        row_add(t, ri, Integer(1));
      }
      if (modp_) {
        Integer inv = ring_.inverse(a_(t, t));
        row_scale(t, inv, a_(t, t));
      } else if (a_(t, t) < 0) {
        row_scale(t, Integer(-1), Integer(-1));
      }
      diagonal_.push_back(a_(t, t));
    }
  }

  Matrix a_;
  Coefficients ring_;
  bool modp_;
  bool transforms_;
  Matrix u_, ui_, v_, vi_;
  std::vector<Integer> diagonal_;
  std::size_t max_bits_ = 0;
};

}  // namespace

Matrix SmithDecomposition::diagonal_matrix() const {
  Matrix d(source.rows(), source.cols());
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

SmithDecomposition smith(const Matrix& a, const Coefficients& ring, bool transforms) {
  Reducer r(a, ring, transforms);
  r.run();
  SmithDecomposition out;
  out.source = a;
  out.diagonal = std::move(r.diagonal_);
  out.has_transforms = transforms;
  out.ring = ring;
  out.max_bits = r.max_bits_;
  if (transforms) {
    out.U = std::move(r.u_);
    out.V = std::move(r.v_);
    out.U_inv = std::move(r.ui_);
    out.V_inv = std::move(r.vi_);
  }
  return out;
}

SmithDecomposition smith(const IntMatrix& a, const Coefficients& ring, bool transforms) {
  return smith(a.dense(), ring, transforms);
}

std::vector<Integer> invariant_factors(const Matrix& a) {
  return smith(a, Coefficients::integers(), false).diagonal;
}

std::size_t rank(const Matrix& a, const Coefficients& ring) {
  return smith(a, ring, false).rank();
}

Kernel kernel(const Matrix& a, const Coefficients& ring) {
  const std::size_t n = a.cols();
  Kernel k;
  if (a.rows() == 0) {
    k.basis = Matrix::identity(n);
    k.coords = Matrix::identity(n);
    return k;
  }
  SmithDecomposition s = smith(a, ring, true);
  std::vector<std::size_t> tail;
  for (std::size_t j = s.rank(); j < n; ++j) tail.push_back(j);
  k.basis = s.V.select_columns(tail);
  k.coords = s.V_inv.select_rows(tail);
  return k;
}

Integer determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Matrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = x;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace strathom
