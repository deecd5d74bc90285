#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "strathom/algebra/chain_complex.hpp"
#include "strathom/algebra/module.hpp"

using namespace strathom;

namespace {

FGModule Z(std::size_t r = 1) { return FGModule::free(r); }
FGModule Zn(long d) { return FGModule::cyclic(d); }

// Simplicial chain complex from facets, built independently of the topology
// module: all faces enumerated, boundary with alternating signs.
ChainComplex simplicial(const std::vector<std::vector<int>>& facets) {
  std::map<int, std::vector<std::vector<int>>> faces;
  std::set<std::vector<int>> seen;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(f[i]);
      if (seen.insert(s).second) faces[static_cast<int>(s.size()) - 1].push_back(s);
    }
  }
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (auto& [k, list] : faces) {
    std::sort(list.begin(), list.end());
    dims[k] = list.size();
  }
  for (const auto& [k, list] : faces) {
    if (k == 0) continue;
    const auto& lower = faces[k - 1];
    Matrix d(lower.size(), list.size());
    for (std::size_t j = 0; j < list.size(); ++j)
      for (std::size_t i = 0; i < list[j].size(); ++i) {
        auto face = list[j];
        face.erase(face.begin() + static_cast<long>(i));
        auto pos = std::lower_bound(lower.begin(), lower.end(), face) - lower.begin();
        d(static_cast<std::size_t>(pos), j) = (i % 2 == 0) ? 1 : -1;
      }
    diffs[k] = d;
  }
  return ChainComplex(Orientation::Homological, dims, diffs);
}

const std::vector<std::vector<int>> kRP2 = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                            {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};

GradedModule random_graded(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank(0, 2), count(0, 2), order(2, 12);
  GradedModule g;
  for (int k = 0; k < 4; ++k) {
    std::vector<Integer> orders;
    for (int i = count(rng); i > 0; --i) orders.push_back(order(rng));
    g.set(k, FGModule::from_orders(static_cast<std::size_t>(rank(rng)), orders));
  }
  return g;
}

}  // namespace

TEST_CASE("module normalization") {
  CHECK(FGModule::from_orders(0, {2, 3}) == Zn(6));
  CHECK(FGModule::from_orders(0, {4, 6}).torsion() == std::vector<Integer>{2, 12});
  CHECK(FGModule::from_orders(1, {0, 1, -5}).to_string() == "Z^2 + Z/5");
  CHECK(FGModule::zero().to_string() == "0");
  CHECK((Zn(2) + Zn(2)).order() == 4);
}

TEST_CASE("homology of small simplicial complexes") {
  auto circle = simplicial({{0, 1}, {1, 2}, {0, 2}});
  CHECK(homology(circle, 0) == Z());
  CHECK(homology(circle, 1) == Z());
  auto rp2 = simplicial(kRP2);
  CHECK(homology(rp2, 0) == Z());
  CHECK(homology(rp2, 1) == Zn(2));
  CHECK(homology(rp2, 2).is_zero());
  CHECK(homology(rp2, 1, Coefficients::prime_field(2)) == Z());
  CHECK(homology(rp2, 2, Coefficients::prime_field(2)) == Z());
  CHECK(homology(rp2, 1, Coefficients::rationals()).is_zero());
  CHECK(homology_all(ChainComplex()).is_zero());
}

TEST_CASE("universal coefficients on simplicial complexes") {
  for (const auto& facets : {kRP2, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}}}) {
    auto c = simplicial(facets);
    GradedModule h = homology_all(c);
    GradedModule co = homology_all(c.dual());
    CHECK(co == cohomology_from_homology(h));
    for (long p : {2L, 3L, 5L}) {
      auto f = Coefficients::prime_field(p);
      for (int k = 0; k <= 3; ++k) {
        CHECK(homology(c, k, f).free_rank() == field_homology_dimension(h, k, f));
        CHECK(homology(c.dual(), k, f).free_rank() == field_cohomology_dimension(co, k, f));
      }
    }
  }
}

TEST_CASE("hom and ext duals") {
  CHECK(hom_dual(Z(2) + Zn(2)) == Z(2));
  CHECK(ext_dual(Z(2) + Zn(2)) == Zn(2));
  CHECK(hom_dual(Zn(2) + Zn(4)).is_zero());
  CHECK(ext_dual(Zn(2) + Zn(4)) == Zn(2) + Zn(4));
}

TEST_CASE("verdier dual of cohomology") {
  CHECK(verdier_dual_homology(GradedModule{{0, Z()}}, 0) == GradedModule{{0, Z()}});
  CHECK(verdier_dual_homology(GradedModule{{2, Zn(2)}}, 2) == GradedModule{{1, Zn(2)}});
  CHECK(verdier_dual_homology(GradedModule{{0, Z()}, {1, Z() + Zn(3)}}, 1) ==
        GradedModule{{0, Z() + Zn(3)}, {1, Z()}});
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    GradedModule h = random_graded(rng);
    const int n = 3;
    GradedModule once = regrade(verdier_dual_homology(h, n), n);
    GradedModule twice = regrade(verdier_dual_homology(once, n), n);
    CHECK(twice == h);
  }
}

TEST_CASE("ker and coker of module maps") {
  auto two = ModuleMap::between(Z(), Z(), Matrix{{2}});
  auto r = ker_coker(two);
  CHECK(r.kernel.is_zero());
  CHECK(r.cokernel == Zn(2));

  auto id = ker_coker(ModuleMap::identity(Zn(2) + Zn(2)));
  CHECK(id.kernel.is_zero());
  CHECK(id.cokernel.is_zero());

  // f*(a) = a + b, f*(b) = -a on Z/2 + Z/2, minus the identity.
  Matrix f{{1, -1}, {1, 0}};
  auto g = ker_coker(ModuleMap::between(Zn(2) + Zn(2), Zn(2) + Zn(2), f - Matrix::identity(2)));
  CHECK(g.kernel.is_zero());
  CHECK(g.cokernel.is_zero());

  auto proj = ker_coker(ModuleMap::between(Z(), Zn(4), Matrix{{2}}));
  CHECK(proj.kernel == Z());
  CHECK(proj.cokernel == Zn(2));
  auto inc = ker_coker(ModuleMap::between(Zn(2), Zn(4), Matrix{{2}}));
  CHECK(inc.kernel.is_zero());
  CHECK(inc.cokernel == Zn(2));

  CHECK_THROWS_AS(ModuleMap::between(Zn(2), Z(), Matrix{{1}}), ValidationError);
}

TEST_CASE("kunneth") {
  GradedModule s1{{0, Z()}, {1, Z()}};
  GradedModule rp3{{0, Z()}, {1, Zn(2)}, {3, Z()}};
  GradedModule point{{0, Z()}};
  CHECK(kunneth(s1, s1) == GradedModule{{0, Z()}, {1, Z(2)}, {2, Z()}});
  CHECK(kunneth(rp3, s1) == GradedModule{{0, Z()}, {1, Z() + Zn(2)}, {2, Zn(2)}, {3, Z()}, {4, Z()}});
  CHECK(kunneth(rp3, point) == rp3);
  GradedModule rp2{{0, Z()}, {1, Zn(2)}};
  CHECK(kunneth(rp2, rp2) == GradedModule{{0, Z()}, {1, Zn(2) + Zn(2)}, {2, Zn(2)}, {3, Zn(2)}});
  CHECK(kunneth_cohomology(cohomology_from_homology(rp2), cohomology_from_homology(rp2)) ==
        cohomology_from_homology(kunneth(rp2, rp2)));
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    GradedModule a = random_graded(rng), b = random_graded(rng);
    CHECK(kunneth(a, b) == kunneth(b, a));
    CHECK(kunneth_cohomology(cohomology_from_homology(a), cohomology_from_homology(b)) ==
          cohomology_from_homology(kunneth(a, b)));
  }
}

TEST_CASE("mapping cones") {
  auto circle = simplicial({{0, 1}, {1, 2}, {0, 2}});
  ChainMap id, zero, twice;
  for (int k = 0; k <= 1; ++k) {
    id.components[k] = Matrix::identity(3);
    Matrix t = Matrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) t(i, i) = 2;
    twice.components[k] = t;
  }
  CHECK(homology_all(mapping_cone(id, circle, circle)).is_zero());
  GradedModule h = homology_all(circle);
  CHECK(homology_all(mapping_cone(zero, circle, circle)) == h + h.shifted(1));
  GradedModule c2 = homology_all(mapping_cone(twice, circle, circle));
  CHECK(c2 == GradedModule{{0, Zn(2)}, {1, Zn(2)}});
  // Long exact sequence bookkeeping: 0 -> coker f_k -> H_k(cone) -> ker f_{k-1} -> 0.
  for (int k = 0; k <= 2; ++k) {
    KerCoker here = k <= 1 ? ker_coker(induced_map(twice, circle, circle, k)) : KerCoker{};
    KerCoker below = k >= 1 ? ker_coker(induced_map(twice, circle, circle, k - 1)) : KerCoker{};
    CHECK(c2[k].free_rank() == here.cokernel.free_rank() + below.kernel.free_rank());
    if (c2[k].is_torsion()) CHECK(c2[k].order() == here.cokernel.order() * below.kernel.order());
  }
  ChainMap bad;
  bad.components[0] = Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(mapping_cone(bad, circle, circle), ValidationError);
}

TEST_CASE("complex construction rejects d*d != 0") {
  std::map<int, std::size_t> dims{{0, 1}, {1, 1}, {2, 1}};
  std::map<int, Matrix> diffs{{1, Matrix{{1}}}, {2, Matrix{{1}}}};
  CHECK_THROWS_AS(ChainComplex(Orientation::Homological, dims, diffs), ValidationError);
}
