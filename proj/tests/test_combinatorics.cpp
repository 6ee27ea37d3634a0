#include <doctest.h>

#include <numeric>

#include "oracle.hpp"
#include "qh/combinatorics.hpp"

using namespace qh;

namespace {

// Gaussian binomial [m choose l]_t via the q-Pascal recurrence.
std::vector<long long> gauss_binomial(int m, int l) {
  std::vector<std::vector<std::vector<long long>>> T(m + 1);
  for (int a = 0; a <= m; ++a) {
    T[a].resize(a + 1);
    T[a][0] = {1};
    T[a][a] = {1};
    for (int b = 1; b < a; ++b) {
      // [a,b] = [a-1,b-1] + t^b [a-1,b]
      const auto& x = T[a - 1][b - 1];
      const auto& y = T[a - 1][b];
      std::vector<long long> out(std::max(x.size(), y.size() + b), 0);
      for (std::size_t k = 0; k < x.size(); ++k) out[k] += x[k];
      for (std::size_t k = 0; k < y.size(); ++k) out[k + b] += y[k];
      T[a][b] = out;
    }
  }
  return T[m][l];
}

long long binomial(int m, int l) {
  long long r = 1;
  for (int i = 1; i <= l; ++i) r = r * (m - l + i) / i;
  return r;
}

}  // namespace

TEST_CASE("small values") {
  CHECK(h1(2, 1, Cyc::rational(1, 5)) == Cyc::rational(1, 6));
  CHECK(h1_poly(4, 2).coeffs == std::vector<long long>{1, 1, 2, 1, 1});
  CHECK(h1(4, 2, Cyc::root_of_unity(4, 1)).is_zero());
  CHECK(h1(2, 1, Cyc::rational(2, -1)).is_zero());
  CHECK(h1_poly(4, 2).to_string() == "1 + t + 2t^2 + t^3 + t^4");
}

TEST_CASE("all three sums equal the Gaussian binomial") {
  for (int m = 2; m <= 10; ++m)
    for (int l = 1; l < m; ++l) {
      const auto g = gauss_binomial(m, l);
      CHECK(h1_poly(m, l).coeffs == g);
      CHECK(h2_poly(m, l).coeffs == g);
      CHECK(h3_poly(m, l).coeffs == g);
      CHECK(h1_poly(m, l).total() == binomial(m, l));
    }
  for (int m = 2; m <= 10; ++m) CHECK(h_identity_check(m));
}

TEST_CASE("direct evaluation matches the polynomials") {
  for (int m = 2; m <= 8; ++m)
    for (int l = 1; l < m; ++l)
      for (int L : {1, 4, 5, 6}) {
        const Cyc t = L == 1 ? Cyc::rational(1, mpq_class(2, 3)) : Cyc::root_of_unity(L, 1) + Cyc::one(L);
        CHECK(h1(m, l, t) == h1_poly(m, l).evaluate(t));
        CHECK(h2(m, l, t) == h2_poly(m, l).evaluate(t));
        CHECK(h3(m, l, t) == h3_poly(m, l).evaluate(t));
        CHECK(oracle::close(oracle::embed(h1(m, l, t)), oracle::embed(h2(m, l, t)), 1e-6));
      }
}

TEST_CASE("weights: reversal is invisible, a shift is not") {
  for (int m = 3; m <= 8; ++m)
    for (int l = 1; l < m; ++l) {
      std::vector<int> w(l);
      for (int i = 0; i < l; ++i) w[i] = i + 1;  // reversed order of l+1-i
      CHECK(simplex_poly(m, l, w) == h2_poly(m, l));
    }
  for (int m = 2; m <= 8; ++m) {
    const auto bad = h_identity_mismatch(m, true);
    REQUIRE(bad.has_value());
    CHECK(bad->l == 1);
    CHECK(bad->h1.coeffs != bad->h2.coeffs);
    CHECK(bad->to_json().contains("h2"));
  }
}

TEST_CASE("vanishing exactly at primitive roots") {
  for (int m = 2; m <= 12; ++m)
    for (int k = 0; k < m; ++k) {
      const Cyc t = Cyc::root_of_unity(m, k);
      CHECK(vanishing_criterion(m, t) == (std::gcd(k, m) == 1));
      if (std::gcd(k, m) != 1) CHECK(nonvanishing_l(m, t).has_value());
    }
  CHECK_FALSE(vanishing_criterion(3, Cyc::rational(1, 2)));
}

TEST_CASE("generating product") {
  for (int m = 1; m <= 12; ++m) CHECK(generating_function_check(m));
  const auto poly = generating_product(3, Cyc::rational(1, 2));  // (1+2x)(1+4x)(1+8x)
  CHECK(poly[1] == Cyc::rational(1, 14));
  CHECK(poly[3] == Cyc::rational(1, 64));
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(h1_poly(3, 0), CombinatoricsError);
  CHECK_THROWS_AS(h2_poly(3, 3), CombinatoricsError);
  CHECK_THROWS_AS(h_identity_mismatch(1), CombinatoricsError);
  CHECK_THROWS_AS(simplex_poly(4, 2, {1}), CombinatoricsError);
}
