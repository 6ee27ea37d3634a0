#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_L).
//
// An element is stored as its residue modulo the L-th cyclotomic polynomial,
// i.e. as a rational vector of length phi(L) in the power basis
// 1, z, ..., z^(phi(L)-1) with z = zeta_L. The representation is canonical, so
// equality and the zero test are exact coefficient comparisons.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qh {

class CycError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different conductors were combined.
class ConductorMismatch : public CycError {
public:
  using CycError::CycError;
};

class DivisionByZero : public CycError {
public:
  using CycError::CycError;
};

namespace detail {
struct CyclotomicField;
}

/// Integer coefficients of the L-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int L);
int euler_phi(int L);

class Cyc {
public:
  /// Zero of Q(zeta_1) = Q.
  Cyc();

  static Cyc zero(int conductor);
  static Cyc one(int conductor);
  static Cyc rational(int conductor, const mpq_class& value);
  static Cyc root_of_unity(int conductor, long k);

  int conductor() const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only meaningful when is_rational().
  const mpq_class& rational_part() const { return coeffs_[0]; }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }

  /// Throws DivisionByZero on zero.
  Cyc inv() const;
  Cyc pow(long k) const;

  /// Smallest d >= 1 with x^d = 1, or nullopt if x is not a root of unity.
  std::optional<long> multiplicative_order() const;
  bool is_primitive_root(long m) const;
  /// Returns k with x = zeta_L^k (0 <= k < L) when x is an L-th root of unity.
  std::optional<long> root_exponent() const;

  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
  /// Arbitrary but total order (conductor, then coefficients), for use as map key.
  friend bool operator<(const Cyc& a, const Cyc& b);

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Cyc from_json(const nlohmann::json& j);

private:
  Cyc(std::shared_ptr<const detail::CyclotomicField> field,
      std::vector<mpq_class> coeffs);
  void check_same_field(const Cyc& o) const;

  std::shared_ptr<const detail::CyclotomicField> field_;
  std::vector<mpq_class> coeffs_;
};

/// Free-function spellings of the field operations.
inline Cyc root_of_unity(int conductor, long k) { return Cyc::root_of_unity(conductor, k); }
inline std::optional<long> multiplicative_order(const Cyc& x) { return x.multiplicative_order(); }
inline bool is_primitive_mth_root(const Cyc& x, long m) { return x.is_primitive_root(m); }

/// All L-th roots of unity zeta_L^0, ..., zeta_L^(L-1).
std::vector<Cyc> roots_of_unity(int conductor);

long lcm(long a, long b);

}  // namespace qh
