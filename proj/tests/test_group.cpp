#include <doctest.h>

#include "qh/group.hpp"

using namespace qh;

TEST_CASE("parsing and element order") {
  const auto G = FinAbGroup::parse("Z2xZ4");
  CHECK(G.order() == 8);
  CHECK(G.exponent() == 4);
  CHECK(G.rank() == 2);
  CHECK(G.element(0) == G.identity());
  CHECK(G.element(1).exps == std::vector<int>{0, 1});
  CHECK(G.element(4).exps == std::vector<int>{1, 0});
  CHECK(G.parse_element("(1,3)") == G.element(7));
  CHECK(G.parse_element("e") == G.identity());
  CHECK(G.parse_weights("(1,0),(0,1)").size() == 2);
  CHECK_THROWS_AS(FinAbGroup::parse("Q8"), GroupError);
  CHECK_THROWS_AS(G.parse_element("(1,2,3)"), GroupError);
}

TEST_CASE("multiplication tables match modular arithmetic") {
  const auto G = FinAbGroup::parse("Z3xZ4");
  for (int a = 0; a < G.order(); ++a) {
    const auto x = G.element(a);
    for (int b = 0; b < G.order(); ++b) {
      const auto y = G.element(b);
      GroupElt z{{(x.exps[0] + y.exps[0]) % 3, (x.exps[1] + y.exps[1]) % 4}};
      CHECK(G.mul(x, y) == z);
      CHECK(G.element(G.mul_index(a, b)) == z);
    }
    CHECK(G.mul(x, G.inv(x)) == G.identity());
    CHECK(G.element(G.inv_index(a)) == G.inv(x));
  }
  CHECK(G.order_of(G.parse_element("(1,2)")) == 6);
  CHECK(G.pow(G.parse_element("(1,1)"), -1) == G.parse_element("(2,3)"));
}

TEST_CASE("mixing groups is an error") {
  const auto G = FinAbGroup::parse("Z2");
  const auto H = FinAbGroup::parse("Z2xZ2");
  CHECK_THROWS_AS(G.mul(G.identity(), H.identity()), GroupError);
}

TEST_CASE("subgroups and weights") {
  const auto G = FinAbGroup::parse("Z4xZ4");
  const auto N = G.subgroup_generated({G.parse_element("(2,0)"), G.parse_element("(0,2)")});
  CHECK(N.elements.size() == 4);
  CHECK(N.index == 4);
  CHECK(N.coset_reps.size() == 4);
  CHECK(G.subgroup_generated({G.parse_element("(1,0)"), G.parse_element("(0,1)")}).index == 1);
  CHECK(G.is_weight_sequence(G.parse_weights("(1,0),(1,0)")));
}

TEST_CASE("characters are all homomorphisms into mu_L") {
  const auto G = FinAbGroup::parse("Z2xZ4");
  const auto chars = G.characters(4);
  CHECK(chars.size() == 8);
  for (const auto& c : chars) {
    CHECK(G.is_character(c));
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        CHECK(G.character_eval(c, G.element(G.mul_index(a, b))) ==
              G.character_eval(c, G.element(a)) * G.character_eval(c, G.element(b)));
  }
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i + 1; j < chars.size(); ++j) CHECK_FALSE(chars[i] == chars[j]);
  CHECK(G.characters(8).size() == 8);
  CHECK_THROWS(G.characters(2));
  const Character bad{{Cyc::root_of_unity(4, 1), Cyc::one(4)}};  // i on an element of order 2
  CHECK_FALSE(G.is_character(bad));
}
