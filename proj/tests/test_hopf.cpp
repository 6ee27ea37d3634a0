#include <doctest.h>

#include <random>

#include "qh/hopf.hpp"

using namespace qh;

namespace {

HopfStructure make(const char* group, const char* weights, std::vector<std::vector<long>> char_exps, int L) {
  const auto G = FinAbGroup::parse(group);
  BimoduleAction act;
  for (const auto& ex : char_exps) {
    Character c;
    for (long k : ex) c.values.push_back(Cyc::root_of_unity(L, k));
    act.right_chars.push_back(c);
  }
  return HopfStructure(CoveringQuiver(G, G.parse_weights(weights)), act, L);
}

Tensor tensor_of(const PathAlgebra& A, const Elem& x, const Elem& y) {
  Tensor t;
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) t.add(p, q, a * b);
  return t;
}

}  // namespace

TEST_CASE("structure maps on Z2 by hand") {
  const auto H = make("Z2", "(1),(1)", {{1}, {1}}, 2);
  const auto& A = H.algebra();
  const Cyc one = A.one();
  // a = (a_0, e): v_e -> v_g and b = (a_0, g): v_g -> v_e
  const Path a = A.path(0, {0}), b = A.path(1, {0});
  const Path ve = A.trivial_path(0), vg = A.trivial_path(1);
  Tensor expect;
  expect.add(a, ve, one);
  expect.add(b, vg, one);
  expect.add(ve, a, one);
  expect.add(vg, b, -one);
  CHECK(H.delta(a) == expect);

  Tensor dv;
  dv.add(vg, ve, one);
  dv.add(ve, vg, one);
  CHECK(H.delta(vg) == dv);

  CHECK(H.counit(A.vertex(0)).is_one());
  CHECK(H.counit(A.vertex(1)).is_zero());
  CHECK(H.counit(A.arrow(0, 0)).is_zero());
  CHECK(H.antipode(a) == Elem::term(b, -one));
  CHECK(H.antipode(b) == Elem::term(a, one));  // -chi(g) = 1
  CHECK(H.antipode(vg) == A.vertex(1));

  CHECK(H.left_act(1, A.arrow(0, 0)) == A.arrow(1, 0));
  CHECK(H.right_act(A.arrow(0, 0), 1) == -one * A.arrow(1, 0));
  CHECK(H.left_act(1, A.vertex(0)) == A.vertex(1));
}

TEST_CASE("delta is multiplicative and S anti-multiplicative on paths") {
  const auto H = make("Z3", "(1),(2)", {{1}, {2}}, 3);
  const auto& A = H.algebra();
  for (int v = 0; v < 3; ++v)
    for (const auto& p : A.paths_starting_at(v, 3)) {
      const Path first = A.subpath(p, 0, 1), rest = A.subpath(p, 1, 2);
      const Elem P = Elem::term(p, A.one()), F = Elem::term(first, A.one()), R = Elem::term(rest, A.one());
      CHECK(A.multiply(R, F) == P);
      CHECK(H.delta(P) == A.multiply(H.delta(R), H.delta(F)));
      CHECK(H.antipode(P) == A.multiply(H.antipode(F), H.antipode(R)));
    }
}

TEST_CASE("grouplikes") {
  const auto H = make("Z2xZ2", "(1,0),(0,1)", {{2, 0}, {0, 2}}, 4);
  const auto& A = H.algebra();
  const auto& G = H.quiver().group();
  for (const auto& chi : G.characters(4)) {
    const Elem e = H.grouplike(chi);
    CHECK(H.delta(e) == tensor_of(A, e, e));
    CHECK(H.counit(e).is_one());
  }
  CHECK(H.commutation_check().ok);
}

TEST_CASE("axioms hold for allowable actions") {
  CHECK(make("Z2", "(1),(1)", {{1}, {1}}, 2).verify_hopf_axioms(4).ok);
  CHECK(make("Z3", "(1),(1)", {{1}, {2}}, 3).verify_hopf_axioms(3).ok);
  CHECK(make("Z2xZ2", "(1,0),(0,1)", {{2, 0}, {0, 2}}, 4).verify_hopf_axioms(3).ok);
  CHECK(make("Z4", "(2),(2)", {{1}, {3}}, 4).verify_hopf_axioms(3).ok);
}

TEST_CASE("non-allowable actions are rejected") {
  CHECK_THROWS_AS(make("Z2", "(1),(1)", {{1}, {1}}, 4), AllowabilityError);  // i on an involution
  CHECK_THROWS_AS(make("Z2", "(1),(1)", {{1}}, 2), AllowabilityError);
  const auto G = FinAbGroup::parse("Z2");
  BimoduleAction mixed{{Character{{Cyc::rational(2, -1)}}, Character{{Cyc::rational(4, -1)}}}};
  const CoveringQuiver Q(G, G.parse_weights("(1),(1)"));
  CHECK_FALSE(check_allowable(Q, mixed, 4).ok);
}

TEST_CASE("Hopf ideals on Z2") {
  const auto H = make("Z2", "(1),(1)", {{1}, {1}}, 2);
  const auto& A = H.algebra();
  const Elem X = A.family_sum(0), Y = A.family_sum(1);
  const Elem XX = A.multiply(X, X), YY = A.multiply(Y, Y), XY = A.multiply(X, Y), YX = A.multiply(Y, X);

  const GradedIdeal good(A, {XX, YY, XY + YX});
  const auto rep = H.is_hopf_ideal(good);
  CHECK(rep.admissible);
  CHECK(rep.hopf);
  REQUIRE(rep.quotient);
  CHECK(rep.quotient->dimension == 8);
  CHECK(H.g_stability(good).stable);

  const GradedIdeal bad(A, {XX, YY, XY - YX});
  const auto rb = H.is_hopf_ideal(bad);
  CHECK(rb.admissible);
  CHECK_FALSE(rb.hopf);
  REQUIRE(rb.diagnostics.size() == 1);
  CHECK(rb.diagnostics[0].check == "coproduct");
  CHECK(rb.diagnostics[0].bidegree == std::make_pair(1, 1));
  CHECK_FALSE(H.reduce_tensor(bad, H.delta(XY - YX)).is_zero());
  CHECK(H.reduce_tensor(good, H.delta(XY + YX)).is_zero());

  const GradedIdeal loose(A, {XY});
  CHECK_FALSE(H.is_hopf_ideal(loose, 5).admissible);

  const GradedIdeal lopsided(A, {A.arrow(0, 0), XX, YY, XY});
  CHECK_FALSE(H.g_stability(lopsided).stable);
}

TEST_CASE("an ideal containing vertices is not Hopf") {
  const auto H = make("Z2", "(1),(1)", {{1}, {1}}, 2);
  const auto& A = H.algebra();
  const Elem X = A.family_sum(0), Y = A.family_sum(1);
  const GradedIdeal I(A, {A.vertex(0) - A.vertex(1), A.multiply(X, X), A.multiply(Y, Y)});
  const auto rep = H.is_hopf_ideal(I, 6);
  CHECK_FALSE(rep.hopf);
}
