#pragma once

// The sums H1, H2, H3 over weakly increasing / simplex-constrained tuples and
// the root-of-unity vanishing criterion for H1.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qh/cyclotomic.hpp"

namespace qh {

class CombinatoricsError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integer polynomial in t: coeffs[k] counts the tuples of weight k.
struct HPolynomial {
  int m = 0;
  int l = 0;
  std::vector<long long> coeffs;

  long long total() const;
  Cyc evaluate(const Cyc& t) const;
  std::string to_string() const;
  friend bool operator==(const HPolynomial&, const HPolynomial&) = default;
};

// Coefficient vectors (memoized, trailing zeros trimmed).
HPolynomial h1_poly(int m, int l);
HPolynomial h2_poly(int m, int l);
/// The H2 sum with arbitrary weights w_1..w_l on the same simplex.
HPolynomial simplex_poly(int m, int l, const std::vector<int>& weights);
/// Weights that break the identity: (l+2-i) instead of (l+1-i). Any permutation
/// of the true weights gives the same polynomial, since the simplex is symmetric.
std::vector<int> shifted_h2_weights(int l);
HPolynomial h3_poly(int m, int l);

// Direct evaluation by walking the tuples.
Cyc h1(int m, int l, const Cyc& t);
Cyc h2(int m, int l, const Cyc& t);
Cyc h3(int m, int l, const Cyc& t);

struct IdentityMismatch {
  int m = 0;
  int l = 0;
  HPolynomial h1, h2, h3;
  nlohmann::json to_json() const;
};

/// First l where the three polynomials differ; nullopt when they agree for every 0 < l < m.
/// With perturb, H2 uses shifted_h2_weights (a negative control).
std::optional<IdentityMismatch> h_identity_mismatch(int m, bool perturb = false);
bool h_identity_check(int m);

/// Smallest l in (0, m) with h1(m, l, t) != 0.
std::optional<int> nonvanishing_l(int m, const Cyc& t);
/// h1(m, l, t) = 0 for every 0 < l < m.
bool vanishing_criterion(int m, const Cyc& t);

/// Coefficients in x of prod_{r=1}^{m} (1 + t^r x), lowest degree first.
std::vector<Cyc> generating_product(int m, const Cyc& t);
/// prod_{r=1}^{m} (1 + z_m^r x) == 1 - (-x)^m coefficientwise.
bool generating_function_check(int m);

}  // namespace qh
