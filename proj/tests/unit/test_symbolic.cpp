#include <doctest.h>

#include "strathom/algebra/lattice.hpp"
#include "strathom/symbolic/profile.hpp"

using namespace strathom;

namespace {

FGModule Z(std::size_t r = 1) { return FGModule::free(r); }
FGModule Zn(long d) { return FGModule::cyclic(d); }
FGModule Zn2(long d) { return Zn(d) + Zn(d); }

ManifoldAtom atom(const std::string& s) { return builtin_atom(s); }

ManifoldAtom t2rp3() { return product({atom("S1"), atom("S1"), atom("RP3")}); }

}  // namespace

TEST_CASE("lattice helpers") {
  Matrix r{{2, 0}, {0, 0}};
  Matrix sat = saturation(r);
  CHECK(lattice_quotient(sat, r) == Zn(2));
  Matrix a{{2, 0}, {0, 1}}, b{{3, 0}, {0, 2}};
  CHECK(lattice_quotient(Matrix::identity(2), lattice_intersection(a, b)) == Zn(6) + Zn(2));
  Matrix f{{2}};
  CHECK(lattice_quotient(Matrix::identity(1), lattice_preimage(f, Matrix{{4}})) == Zn(2));

  SubQuotient q(Matrix::identity(2), Matrix{{2, 0}, {0, 3}});
  CHECK(q.module() == Zn(6));
  CHECK(q.coordinates({1, 1}).size() == 1);
  ModuleMap times5 = induced_map(q, q, Matrix{{5, 0}, {0, 5}});
  CHECK(ker_coker(times5).kernel.is_zero());
  CHECK(ker_coker(times5).cokernel.is_zero());
  ModuleMap times2 = induced_map(q, q, Matrix{{2, 0}, {0, 2}});
  CHECK(ker_coker(times2).kernel == Zn(2));
}

TEST_CASE("atoms") {
  for (const char* name : {"pt", "S1", "S2", "S3", "S5", "T2", "RP3", "CP2"}) CHECK_NOTHROW(atom(name).check());
  CHECK_THROWS_AS(atom("K3"), ValidationError);
  CHECK(atom("RP3").cohomology() == GradedModule{{0, Z()}, {2, Zn(2)}, {3, Z()}});
  CHECK(atom("RP3").homology() == GradedModule{{0, Z()}, {1, Zn(2)}, {3, Z()}});
  ManifoldAtom m = t2rp3();
  CHECK(m.dimension == 5);
  CHECK_NOTHROW(m.check());
  CHECK(m.at(3) == Z() + Zn2(2));
  CHECK(m.homology()[2] == Z() + Zn2(2));
  CHECK(m.cohomology() == kunneth_cohomology(kunneth_cohomology(atom("S1").cohomology(), atom("S1").cohomology()),
                                             atom("RP3").cohomology()));
  ManifoldAtom rr = product({atom("RP3"), atom("RP3")});
  CHECK_FALSE(rr.has_cup_basis);
  CHECK(rr.cohomology() == kunneth_cohomology(atom("RP3").cohomology(), atom("RP3").cohomology()));
  // Mod 2 dimensions of a product agree with universal coefficients.
  ModPData two = m.reduce(2);
  for (int k = 0; k <= 5; ++k)
    CHECK(two.dims[k] == field_cohomology_dimension(m.cohomology(), k, Coefficients::prime_field(2)));

  ManifoldAtom bad = atom("S2");
  bad.basis[2] = {0, 0};
  CHECK_THROWS_AS(bad.check(), ValidationError);
}

TEST_CASE("suspension of RP3, p = 1") {
  IntersectionProfile p = eval_suspension(atom("RP3"), 1, 1);
  CHECK(p.dimension == 4);
  CHECK(p.blowup == GradedModule{{0, Z()}, {3, Zn(2)}, {4, Z()}});
  CHECK(p.gh_dp == GradedModule{{0, Z()}, {2, Zn(2)}, {4, Z()}});
  REQUIRE(p.peripheral.count(2));
  CHECK(*p.peripheral.at(2).total == Zn2(2));
  CHECK(p.peripheral.at(2).sub == Zn(2));
  CHECK(p.peripheral.at(2).quotient == Zn(2));
  CHECK_FALSE(p.locally_torsion_free());
  CHECK(p.strata[0].witness == Zn(2));
  CHECK(eval_suspension(atom("S3"), 1, 1).locally_torsion_free());
  CHECK(eval_suspension(atom("S3"), 0, 2).peripheral.empty());
}

TEST_CASE("cone formulas") {
  IntersectionProfile c = eval_cone(atom_profile(atom("RP3")), 1);
  CHECK(c.gh_dp == GradedModule{{0, Z()}, {2, Zn(2)}});
  CHECK(c.blowup == GradedModule{{0, Z()}});
  CHECK(c.peripheral_total() == GradedModule{{2, Zn(2)}});
  CHECK_FALSE(c.compact);
  CHECK(eval_cone(atom_profile(atom("S3")), 1).peripheral_total().is_zero());
  IntersectionProfile c2 = eval_cone(atom_profile(t2rp3()), 2);
  CHECK(c2.peripheral_total() == GradedModule{{3, Zn2(2)}});
  CHECK_THROWS_AS(eval_cone(c, 0), ValidationError);
  CHECK_THROWS_AS(eval_cone(atom_profile(atom("S2")), 2), ValidationError);
}

TEST_CASE("isolated singularities") {
  IntersectionProfile p = eval_isolated(4, {atom("RP3"), atom("RP3")}, {1, 1});
  CHECK(p.peripheral_total() == GradedModule{{2, Zn2(2)}});
  CHECK(eval_isolated(4, {atom("S3")}, {1}).peripheral.empty());
  CHECK_THROWS_AS(eval_isolated(4, {atom("S2")}, {1}), ValidationError);
}

namespace {

CircleBundle bundle(std::vector<std::string> base, std::vector<std::pair<long, std::string>> e) {
  CircleBundle b;
  for (const auto& s : base) b.base.push_back(atom(s));
  for (const auto& [c, cls] : e) b.euler.push_back({c, cls});
  return b;
}

}  // namespace

TEST_CASE("Gysin: circle bundles") {
  auto h = gysin_cohomology(bundle({"S2"}, {{2, "w"}}));
  CHECK(*h[0].total == Z());
  CHECK(h[1].total->is_zero());
  CHECK(*h[2].total == Zn(2));
  CHECK(*h[3].total == Z());
  // Hopf bundle and trivial bundle.
  auto hopf = gysin_cohomology(bundle({"S2"}, {{1, "w"}}));
  CHECK(*hopf[3].total == Z());
  CHECK(hopf[2].total->is_zero());
  auto triv = gysin_cohomology(bundle({"S2"}, {{0, "w"}}));
  CHECK(*triv[1].total == Z());
  CHECK(*triv[2].total == Z());
  // Unit circle bundle of O(3) over CP2.
  auto cp = gysin_cohomology(bundle({"CP2"}, {{3, "w"}}));
  CHECK(*cp[2].total == Zn(3));
  CHECK(*cp[4].total == Zn(3));
  CHECK(*cp[5].total == Z());
}

TEST_CASE("Gysin extension resolved by mod p ranks") {
  auto h = gysin_cohomology(bundle({"S2", "RP3", "S3"}, {{3, "w"}, {1, "u"}, {0, ""}}));
  REQUIRE(h[5].sub == Zn(3) + Zn(6));
  REQUIRE(h[5].quotient == Zn(2));
  REQUIRE(h[5].resolved());
  CHECK(*h[5].total == Zn2(6));
  // Rational and mod p dimensions are consistent in every degree.
  for (auto& [j, e] : h) CHECK(e.resolved());
  // Free sub: 0 -> Z -> H^3 -> Z + Z/2 -> 0 and the torsion is absorbed.
  auto g = gysin_cohomology(bundle({"S2", "RP3"}, {{2, "w"}, {1, "u"}}));
  REQUIRE(g[3].sub == Z());
  REQUIRE(g[3].quotient == Z() + Zn(2));
  REQUIRE(g[3].resolved());
  CHECK(*g[3].total == Z(2));
}

TEST_CASE("Thom space over S2, Euler class 2") {
  IntersectionProfile p = eval_thom_circle(bundle({"S2"}, {{2, "w"}}), 1);
  CHECK(p.dimension == 4);
  CHECK(p.peripheral_total() == GradedModule{{2, Zn(2)}});
  REQUIRE(p.chi);
  const ModuleMap& chi2 = p.chi->parts.at(2);
  CHECK(chi2.matrix.rows() == 1);
  CHECK(chi2.matrix.cols() == 1);
  CHECK(abs(chi2.matrix(0, 0)) == 2);
  CHECK(p.blowup == GradedModule{{0, Z()}, {2, Z()}, {4, Z()}});
  CHECK(p.gh_dp == GradedModule{{0, Z()}, {2, Z()}, {4, Z()}});
}

TEST_CASE("Thom space over RP3 x CP2 x S1") {
  IntersectionProfile p = eval_thom_circle(bundle({"RP3", "CP2", "S1"}, {{1, "a"}, {3, "w"}, {0, ""}}), 4);
  CHECK(p.dimension == 10);
  CHECK(p.peripheral_total() == GradedModule{{5, Zn2(3)}});
}

TEST_CASE("Thom space over S2 x RP3 x S3") {
  IntersectionProfile p = eval_thom_circle(bundle({"S2", "RP3", "S3"}, {{3, "w"}, {1, "a"}, {0, ""}}), 4);
  CHECK(p.peripheral_total() == GradedModule{{5, Zn2(6)}});
  REQUIRE(p.chi);
  const ModuleMap& chi5 = p.chi->parts.at(5);
  CHECK(chi5.domain.module() == Z(2));
  CHECK(chi5.codomain.module() == Z(2) + Zn(2));
  CHECK(ker_coker(chi5).cokernel == Zn(3) + Zn(6));
  // The stated matrix (a, b) -> (3a, 3b, b mod 2) has the same cokernel.
  ModuleMap stated = ModuleMap::between(Z(2), Z(2) + Zn(2), Matrix{{3, 0}, {0, 3}, {0, 1}});
  CHECK(ker_coker(stated).cokernel == ker_coker(chi5).cokernel);
  const ModuleMap& chi6 = p.chi->parts.at(6);
  CHECK(chi6.domain.module() == Zn(2));
  CHECK(chi6.codomain.module().is_zero());
}

TEST_CASE("mapping torus of the suspended homeomorphism") {
  IntersectionProfile l = eval_suspension(t2rp3(), 2, 2);
  REQUIRE(l.peripheral_total() == GradedModule{{3, Zn2(2) + Zn2(2)}});
  AutomorphismData f;
  // g*(a x u) = (a + b) x u, g*(b x u) = -a x u on each apex copy.
  f.peripheral[3] = Matrix{{1, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 0}};
  IntersectionProfile x = eval_mapping_torus(l, f);
  CHECK(x.peripheral_total().is_zero());
  CHECK(x.peripheral_resolved());
  CHECK_FALSE(x.locally_torsion_free());
  CHECK(x.strata[0].witness == Zn2(2));

  AutomorphismData id;
  id.peripheral[3] = Matrix::identity(4);
  IntersectionProfile y = eval_mapping_torus(l, id);
  CHECK(y.peripheral_total() == GradedModule{{3, Zn2(2) + Zn2(2)}, {4, Zn2(2) + Zn2(2)}});

  AutomorphismData bad;
  bad.peripheral[3] = Matrix{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK_THROWS_AS(eval_mapping_torus(l, bad), ValidationError);
  CHECK_THROWS_AS(eval_mapping_torus(l, AutomorphismData{}), ValidationError);
}

TEST_CASE("relative suspension") {
  ManifoldAtom m = product({atom("CP2"), atom("S1")});
  CHECK(relative_suspension(m, {1}, {3}) == GradedModule{{2, Z(2)}, {3, Z(2)}});
  CHECK(relative_suspension(m, {2}, {2}).is_zero());
  CHECK(relative_suspension(atom("S3"), {0}, {1}).is_zero());
  CHECK_THROWS_AS(relative_suspension(m, {3}, {1}), ValidationError);
}
