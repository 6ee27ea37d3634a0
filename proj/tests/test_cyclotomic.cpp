#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "qh/cyclotomic.hpp"

using namespace qh;

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Cyc random_cyc(int L, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Cyc x = Cyc::zero(L);
  for (int k = 0; k < L; ++k) x += Cyc::rational(L, mpq_class(num(rng), den(rng))) * Cyc::root_of_unity(L, k);
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 40; ++n) {
    std::vector<long> prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<long> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
  const auto p105 = cyclotomic_polynomial(105);
  CHECK(std::find(p105.begin(), p105.end(), -2) != p105.end());
}

TEST_CASE("euler phi by counting") {
  for (int n = 1; n <= 60; ++n) {
    int count = 0;
    for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("field operations agree with the complex embedding") {
  std::mt19937 rng(7);
  for (int L : {1, 2, 3, 4, 5, 7, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Cyc a = random_cyc(L, rng), b = random_cyc(L, rng);
      CHECK(oracle::close(oracle::embed(a + b), oracle::embed(a) + oracle::embed(b)));
      CHECK(oracle::close(oracle::embed(a - b), oracle::embed(a) - oracle::embed(b)));
      CHECK(oracle::close(oracle::embed(a * b), oracle::embed(a) * oracle::embed(b), 1e-7));
      if (!b.is_zero()) {
        CHECK((b * b.inv()).is_one());
        CHECK(oracle::close(oracle::embed(b.inv()), 1.0 / oracle::embed(b), 1e-6));
      }
    }
  }
}

TEST_CASE("roots of unity") {
  for (int L : {1, 2, 3, 4, 6, 8, 12}) {
    const Cyc z = Cyc::root_of_unity(L, 1);
    CHECK(z.pow(L).is_one());
    Cyc sum = Cyc::zero(L);
    for (const auto& r : roots_of_unity(L)) sum += r;
    CHECK(sum.is_zero() == (L > 1));
    for (int k = 0; k < L; ++k) {
      const Cyc r = Cyc::root_of_unity(L, k);
      CHECK(r.multiplicative_order() == std::optional<long>(L / std::gcd(k, L)));
      CHECK(r.is_primitive_root(L) == (std::gcd(k, L) == 1));
      CHECK(r.root_exponent() == std::optional<long>(k));
    }
  }
  CHECK(Cyc::rational(4, -1).multiplicative_order() == std::optional<long>(2));
  CHECK_FALSE(Cyc::rational(4, 2).multiplicative_order().has_value());
  CHECK_FALSE(Cyc::zero(3).multiplicative_order().has_value());
  CHECK(Cyc::root_of_unity(12, 1).pow(-1) == Cyc::root_of_unity(12, 11));
  CHECK(is_primitive_mth_root(Cyc::one(5), 1));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Cyc::one(3) + Cyc::one(4), ConductorMismatch);
  CHECK_THROWS_AS(Cyc::zero(5).inv(), DivisionByZero);
  CHECK_THROWS_AS(Cyc::zero(5).pow(-1), DivisionByZero);
}

TEST_CASE("printing and json round trip") {
  CHECK(Cyc::rational(4, mpq_class(-3, 2)).to_string() == "-3/2");
  CHECK(Cyc::root_of_unity(8, 3).to_string() == "z8^3");
  std::mt19937 rng(11);
  for (int L : {1, 5, 12}) {
    const Cyc a = random_cyc(L, rng);
    CHECK(Cyc::from_json(a.to_json()) == a);
  }
}
