#include <random>
#include <sstream>

#include "doctest.h"
#include "strathom/algebra/smith.hpp"

using namespace strathom;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t max_dim, int range) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-range, range);
  std::bernoulli_distribution sparse(0.3);
  Matrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) ? 0 : entry(rng);
  return m;
}

// gcd of all k x k minors, by enumerating row and column subsets.
Integer minor_gcd(const Matrix& a, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      Matrix sub = a.select_rows(rs).select_columns(cs);
      Integer d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next(cs, a.cols()));
  } while (next(rs, a.rows()));
  return g;
}

}  // namespace

TEST_CASE("smith of a 2x2 matrix") {
  Matrix a{{2, 4}, {6, 8}};
  auto s = smith(a);
  REQUIRE(s.diagonal == std::vector<Integer>{2, 4});
  CHECK(s.U * a * s.V == s.diagonal_matrix());
}

TEST_CASE("smith of identity and zero") {
  auto s = smith(Matrix::identity(3));
  CHECK(s.diagonal == std::vector<Integer>{1, 1, 1});
  auto z = smith(Matrix(1, 1));
  CHECK(z.rank() == 0);
}

TEST_CASE("smith over a prime field") {
  Matrix a{{2, 4}, {6, 8}};
  auto s = smith(a, Coefficients::prime_field(2));
  CHECK(s.rank() == 0);
  auto t = smith(a, Coefficients::prime_field(3));
  CHECK(t.rank() == 2);
  CHECK((t.U * a * t.V).reduced(Coefficients::prime_field(3)) == t.diagonal_matrix());
}

TEST_CASE("smith invariants on random matrices") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix a = random_matrix(rng, 10, 9);
    auto s = smith(a);
    REQUIRE(s.U * a * s.V == s.diagonal_matrix());
    REQUIRE(s.U * s.U_inv == Matrix::identity(a.rows()));
    REQUIRE(s.V * s.V_inv == Matrix::identity(a.cols()));
    REQUIRE(abs(determinant(s.U)) == 1);
    REQUIRE(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < s.rank(); ++i) {
      REQUIRE(s.diagonal[i] > 0);
      if (i > 0) REQUIRE(mpz_divisible_p(s.diagonal[i].get_mpz_t(), s.diagonal[i - 1].get_mpz_t()));
    }
    if (trial % 10 == 0 && a.rows() <= 8 && a.cols() <= 8) {
      Integer prod = 1;
      for (std::size_t k = 1; k <= 3 && k <= std::min(a.rows(), a.cols()); ++k) {
        prod *= k <= s.rank() ? s.diagonal[k - 1] : Integer(0);
        REQUIRE(minor_gcd(a, k) == prod);
      }
    }
  }
}

TEST_CASE("kernel is saturated and exact") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix a = random_matrix(rng, 7, 4);
    Kernel k = kernel(a);
    CHECK(k.dim() == a.cols() - rank(a));
    CHECK((a * k.basis).is_zero());
    CHECK(k.coords * k.basis == Matrix::identity(k.dim()));
  }
}

TEST_CASE("triplet round trip") {
  Matrix a{{0, 3}, {-7, 0}, {0, 0}};
  IntMatrix s(a);
  std::stringstream io;
  s.write_triplets(io);
  IntMatrix back = IntMatrix::read_triplets(io);
  CHECK(back == s);
  CHECK(back.dense() == a);
  CHECK(back.nonzeros() == 2);
}

TEST_CASE("triplet parse errors carry the line number") {
  std::stringstream io("2 2\n0 5 1\n");
  CHECK_THROWS_WITH_AS(IntMatrix::read_triplets(io), "triplet file line 2: index out of bounds", ValidationError);
}
