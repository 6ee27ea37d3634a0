#include <doctest.h>

#include <string>

#include "qh/quiver.hpp"

using namespace qh;

TEST_CASE("arrow (a_i, s) runs from v_{s^-1} to v_{w_i s^-1}") {
  for (const char* spec : {"Z3", "Z2xZ4"}) {
    const auto G = FinAbGroup::parse(spec);
    const WeightSeq W{G.element(1), G.element(G.order() - 1)};
    const CoveringQuiver Q(G, W);
    CHECK(Q.num_arrows() == 2 * G.order());
    for (const auto& a : Q.arrows()) {
      const auto sinv = G.inv(a.shift);
      CHECK(Q.source(a) == G.index_of(sinv));
      CHECK(Q.target(a) == G.index_of(G.mul(W[a.family], sinv)));
    }
    for (int v = 0; v < G.order(); ++v)
      for (int i = 0; i < 2; ++i) {
        const auto a = Q.arrow_from(v, i);
        CHECK(Q.source(a) == v);
        CHECK(Q.step(v, i) == Q.target(a));
        CHECK(Q.step_back(Q.step(v, i), i) == v);
      }
  }
}

TEST_CASE("the two-vertex quiver of Z2") {
  const auto G = FinAbGroup::parse("Z2");
  const CoveringQuiver Q(G, G.parse_weights("(1),(1)"));
  const auto e = G.identity(), g = G.element(1);
  CHECK(Q.source({0, e}) == 0);
  CHECK(Q.target({0, e}) == 1);
  CHECK(Q.source({1, g}) == 1);
  CHECK(Q.target({1, g}) == 0);
  CHECK(Q.connected_components().count() == 1);
  const auto dot = Q.to_dot();
  int edges = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  CHECK(edges == 4);
  CHECK(Q.to_json()["arrows"].size() == 4);
}

TEST_CASE("components are the cosets of <W>") {
  const auto G = FinAbGroup::parse("Z4");
  const CoveringQuiver Q(G, G.parse_weights("(2),(2)"));
  const auto c = Q.connected_components();
  CHECK(c.count() == 2);
  CHECK(c.component_of[0] == c.component_of[2]);
  CHECK(c.component_of[1] == c.component_of[3]);
  CHECK(c.component_of[0] != c.component_of[1]);
  CHECK(c.principal == c.component_of[Q.identity_vertex()]);

  const auto H = FinAbGroup::parse("Z4xZ4");
  CHECK(CoveringQuiver(H, H.parse_weights("(2,0),(0,2)")).connected_components().count() == 4);
}

TEST_CASE("invalid weights are rejected") {
  const auto G = FinAbGroup::parse("Z2");
  CHECK_THROWS_AS(CoveringQuiver(G, {GroupElt{{0, 1}}}), QuiverError);
}
