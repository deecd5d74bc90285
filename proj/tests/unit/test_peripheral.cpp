#include <doctest.h>

#include "strathom/analysis/peripheral.hpp"

using namespace strathom;

namespace {

FGModule Z(std::size_t r = 1) { return FGModule::free(r); }
FGModule Zn(long d) { return FGModule::cyclic(d); }
FGModule Zn2(long d) { return Zn(d) + Zn(d); }

CircleBundle bundle(std::vector<std::string> base, std::vector<std::pair<long, std::string>> e) {
  CircleBundle b;
  for (const auto& s : base) b.base.push_back(builtin_atom(s));
  for (const auto& [c, cls] : e) b.euler.push_back({c, cls});
  return b;
}

const CheckResult& check_named(const DualityReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

DualityReport thom(std::vector<std::string> base, std::vector<std::pair<long, std::string>> e, int k) {
  CircleBundle b = bundle(base, e);
  IntersectionProfile p = eval_thom_circle(b, k);
  IntersectionProfile d = eval_thom_circle(b, p.dimension - 2 - k);
  return analyze(p, &d);
}

}  // namespace

TEST_CASE("components of explicit maps") {
  GradedModuleMap id;
  id.parts[0] = ModuleMap::identity(Z(2) + Zn(3));
  Components c = components(id);
  CHECK(c.F.is_zero());
  CHECK(c.T_K.is_zero());
  CHECK(c.T_C.is_zero());
  CHECK(peripheral(id).empty());

  GradedModuleMap two;
  two.parts[2] = ModuleMap::between(Z(), Z(), Matrix{{2}});
  c = components(two);
  CHECK(c.F == GradedModule{{2, Zn(2)}});
  CHECK(c.T_K.is_zero());
  CHECK(c.T_C.is_zero());
  CHECK(*peripheral(two).at(2).total == Zn(2));

  GradedModuleMap stated;
  stated.parts[5] = ModuleMap::between(Z(2), Z(2) + Zn(2), Matrix{{3, 0}, {0, 3}, {0, 1}});
  stated.parts[6] = ModuleMap::between(Zn(2), FGModule::zero(), Matrix(0, 1));
  c = components(stated);
  CHECK(c.F == GradedModule{{5, Zn2(3)}});
  CHECK(c.T_C == GradedModule{{5, Zn(2)}});
  CHECK(c.T_K == GradedModule{{6, Zn(2)}});
  auto r = peripheral(stated);
  CHECK(r.at(5).sub == Zn(3) + Zn(6));
  CHECK(r.at(5).quotient == Zn(2));
  CHECK_FALSE(r.at(5).resolved());
  CHECK(r.at(5).order() == 36);
}

TEST_CASE("suspension of RP3: verdicts") {
  IntersectionProfile p = eval_suspension(builtin_atom("RP3"), 1, 1);
  DualityReport r = analyze(p, &p);
  REQUIRE(r.comps);
  CHECK(r.comps->T_K == GradedModule{{3, Zn(2)}});
  CHECK(r.comps->T_C == GradedModule{{2, Zn(2)}});
  CHECK(r.comps->F.is_zero());
  CHECK(*r.verdicts.torsion_free_nonsingular);
  CHECK_FALSE(*r.verdicts.torsion_nonsingular);
  CHECK_FALSE(*r.verdicts.poincare_duality);
  CHECK_FALSE(*r.verdicts.locally_torsion_free);
  CHECK(r.all_checks_pass());
  CHECK(check_named(r, "T_K^k(p) = T_C^{n+1-k}(Dp)").status == "pass");
  CHECK(check_named(r, "R^k(p) = R^{n-k}(Dp)").status == "pass");
}

TEST_CASE("suspension of T2 x RP3, p = 2") {
  ManifoldAtom m = product({builtin_atom("S1"), builtin_atom("S1"), builtin_atom("RP3")});
  IntersectionProfile p = eval_suspension(m, 2, 2);
  DualityReport r = analyze(p, &p);
  CHECK(r.comps->T_K == GradedModule{{4, Zn2(2)}});
  CHECK(r.comps->T_C == GradedModule{{3, Zn2(2)}});
  CHECK(r.all_checks_pass());
}

TEST_CASE("unequal apex values pair with the dual profile") {
  ManifoldAtom m = product({builtin_atom("S1"), builtin_atom("S1"), builtin_atom("RP3")});
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      IntersectionProfile p = eval_suspension(m, a, b);
      IntersectionProfile d = eval_suspension(m, 4 - a, 4 - b);
      DualityReport r = analyze(p, &d);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.status != "fail", c.name << " " << a << b << c.detail);
    }
}

TEST_CASE("Thom spaces: verdicts and checks") {
  DualityReport a = thom({"S2"}, {{2, "w"}}, 1);
  CHECK_FALSE(*a.verdicts.torsion_free_nonsingular);
  CHECK(*a.verdicts.torsion_nonsingular);
  CHECK(a.comps->F == GradedModule{{2, Zn(2)}});
  CHECK(a.all_checks_pass());

  DualityReport b = thom({"RP3", "CP2", "S1"}, {{1, "a"}, {3, "w"}, {0, ""}}, 4);
  CHECK(b.comps->F == GradedModule{{5, Zn2(3)}});
  CHECK(b.all_checks_pass());

  DualityReport c = thom({"S2", "RP3", "S3"}, {{3, "w"}, {1, "a"}, {0, ""}}, 4);
  CHECK(c.comps->F == GradedModule{{5, Zn2(3)}});
  CHECK(c.comps->T_K == GradedModule{{6, Zn(2)}});
  CHECK(c.comps->T_C == GradedModule{{5, Zn(2)}});
  CHECK_FALSE(*c.verdicts.torsion_free_nonsingular);
  CHECK_FALSE(*c.verdicts.torsion_nonsingular);
  CHECK(c.all_checks_pass());
  // 0 -> Z3^2 -> (Z6^2)/Z2 -> Z2 -> 0 balances in orders.
  CHECK(c.profile.peripheral.at(5).order() / c.comps->T_C[5].order() ==
        c.comps->F[5].order() * c.comps->T_K[6].order());
}

TEST_CASE("every Thom example at every perversity passes the suite") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::pair<long, std::string>>>> cases = {
      {{"S2"}, {{2, "w"}}},
      {{"S2"}, {{5, "w"}}},
      {{"CP2"}, {{3, "w"}}},
      {{"S2", "S2"}, {{2, "w"}, {3, "w"}}},
      {{"RP3", "CP2", "S1"}, {{1, "a"}, {3, "w"}, {0, ""}}},
      {{"S2", "RP3", "S3"}, {{3, "w"}, {1, "a"}, {0, ""}}},
      {{"S2", "RP3"}, {{2, "w"}, {1, "a"}}},
  };
  for (const auto& [base, e] : cases) {
    CircleBundle b = bundle(base, e);
    const int n = eval_thom_circle(b, 0).dimension;
    for (int k = 0; k <= n - 2; ++k) {
      DualityReport r = thom(base, e, k);
      for (const auto& c : r.checks)
        CHECK_MESSAGE(c.status != "fail", r.profile.space << " k=" << k << ": " << c.name << c.detail);
    }
  }
}

TEST_CASE("mapping torus: duality without local torsion freeness") {
  ManifoldAtom m = product({builtin_atom("S1"), builtin_atom("S1"), builtin_atom("RP3")});
  IntersectionProfile l = eval_suspension(m, 2, 2);
  AutomorphismData f;
  f.peripheral[3] = Matrix{{1, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 0}};
  IntersectionProfile x = eval_mapping_torus(l, f);
  DualityReport r = analyze(x, &x);
  CHECK(*r.verdicts.poincare_duality);
  CHECK_FALSE(*r.verdicts.locally_torsion_free);
  CHECK_FALSE(r.comps);
  CHECK(check_named(r, "duality iff both pairings non-singular").status == "insufficient data");
  CHECK(r.all_checks_pass());
}

TEST_CASE("cones are not compact") {
  IntersectionProfile c = eval_cone(atom_profile(builtin_atom("RP3")), 1);
  DualityReport r = analyze(c, &c);
  CHECK(check_named(r, "T_K^k(p) = T_C^{n+1-k}(Dp)").status == "not applicable");
  CHECK(r.comps->T_C == GradedModule{{2, Zn(2)}});
  CHECK(r.all_checks_pass());
}

TEST_CASE("manifolds satisfy duality") {
  for (const char* s : {"S3", "RP3", "CP2", "T2"}) {
    IntersectionProfile p = atom_profile(builtin_atom(s));
    DualityReport r = analyze(p, &p);
    CHECK(*r.verdicts.poincare_duality);
    CHECK(*r.verdicts.torsion_nonsingular);
    CHECK(r.all_checks_pass());
  }
}
