#include "qh/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qh {

long lcm(long a, long b) { return std::lcm(a, b); }

int euler_phi(int L) {
  if (L < 1) throw CycError("conductor must be positive");
  int result = L;
  int n = L;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using IntPoly = std::vector<long>;

// Exact division of integer polynomials; divisor must be monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  IntPoly quot(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int L) {
  if (L < 1) throw CycError("conductor must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(L); it != memo.end()) return it->second;
  }
  IntPoly poly(L + 1, 0);
  poly[0] = -1;
  poly[L] = 1;
  for (int d = 1; d < L; ++d)
    if (L % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  memo.emplace(L, poly);
  return poly;
}

namespace detail {

struct CyclotomicField {
  int L = 1;
  int phi = 1;
  // powers[j] = z^j reduced modulo Phi_L, for 0 <= j < max(L, 2*phi - 1).
  std::vector<std::vector<mpq_class>> powers;

  explicit CyclotomicField(int conductor) : L(conductor), phi(euler_phi(conductor)) {
    const IntPoly poly = cyclotomic_polynomial(L);
    const int count = std::max(L, 2 * phi - 1);
    powers.reserve(count);
    std::vector<mpq_class> cur(phi, 0);
    cur[0] = 1;
    for (int j = 0; j < count; ++j) {
      powers.push_back(cur);
      // multiply by z, then eliminate z^phi using the monic Phi_L
      mpq_class top = cur[phi - 1];
      for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < phi; ++i) cur[i] -= top * poly[i];
    }
  }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::CyclotomicField> field_for(int L) {
  if (L < 1) throw CycError("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const detail::CyclotomicField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[L];
  if (!slot) slot = std::make_shared<detail::CyclotomicField>(L);
  return slot;
}

}  // namespace

Cyc::Cyc() : Cyc(field_for(1), {mpq_class(0)}) {}

Cyc::Cyc(std::shared_ptr<const detail::CyclotomicField> field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

Cyc Cyc::zero(int conductor) {
  auto f = field_for(conductor);
  const int phi = f->phi;
  return Cyc(std::move(f), std::vector<mpq_class>(phi, 0));
}

Cyc Cyc::one(int conductor) { return rational(conductor, 1); }

Cyc Cyc::rational(int conductor, const mpq_class& value) {
  Cyc c = zero(conductor);
  c.coeffs_[0] = value;
  c.coeffs_[0].canonicalize();
  return c;
}

Cyc Cyc::root_of_unity(int conductor, long k) {
  auto f = field_for(conductor);
  long r = k % conductor;
  if (r < 0) r += conductor;
  auto coeffs = f->powers[r];
  return Cyc(std::move(f), std::move(coeffs));
}

int Cyc::conductor() const { return field_->L; }

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && coeffs_[0] == 1; }

void Cyc::check_same_field(const Cyc& o) const {
  if (field_->L != o.field_->L)
    throw ConductorMismatch("mixed conductors " + std::to_string(field_->L) + " and " +
                            std::to_string(o.field_->L));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  check_same_field(o);
  const int phi = field_->phi;
  if (phi == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<mpq_class> prod(2 * phi - 1, 0);
  bool any = false;
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
      any = true;
    }
  }
  for (int i = 0; i < phi; ++i) coeffs_[i] = any ? prod[i] : mpq_class(0);
  if (!any) return *this;
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = field_->powers[k];
    for (int i = 0; i < phi; ++i)
      if (red[i] != 0) coeffs_[i] += prod[k] * red[i];
  }
  return *this;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
  const int phi = field_->phi;
  if (is_rational()) return rational(conductor(), 1 / coeffs_[0]);
  // Solve M c = e_0, where column j of M holds the coefficients of this * z^j.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1, 0));
  for (int j = 0; j < phi; ++j) {
    Cyc col = *this * Cyc(field_, field_->powers[j]);
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    mpq_class s = 1 / m[c][c];
    for (int k = c; k <= phi; ++k) m[c][k] *= s;
    for (int r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> out(phi);
  for (int i = 0; i < phi; ++i) out[i] = m[i][phi];
  return Cyc(field_, std::move(out));
}

Cyc Cyc::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Cyc result = one(conductor());
  Cyc base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::optional<long> Cyc::multiplicative_order() const {
  if (is_zero()) return std::nullopt;
  // The roots of unity in Q(zeta_L) are exactly the lcm(L, 2)-th roots.
  const long n = lcm(conductor(), 2);
  if (!pow(n).is_one()) return std::nullopt;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0 && pow(d).is_one()) return d;
  return std::nullopt;
}

bool Cyc::is_primitive_root(long m) const {
  auto ord = multiplicative_order();
  return ord && *ord == m;
}

std::optional<long> Cyc::root_exponent() const {
  const int L = conductor();
  for (int k = 0; k < L; ++k)
    if (coeffs_ == field_->powers[k]) return k;
  return std::nullopt;
}

bool operator==(const Cyc& a, const Cyc& b) {
  return a.field_->L == b.field_->L && a.coeffs_ == b.coeffs_;
}

bool operator<(const Cyc& a, const Cyc& b) {
  if (a.field_->L != b.field_->L) return a.field_->L < b.field_->L;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Cyc::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  if (auto k = root_exponent()) return "z" + std::to_string(conductor()) + "^" + std::to_string(*k);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << conductor();
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

nlohmann::json Cyc::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.get_str());
  return {{"conductor", conductor()}, {"coeffs", coeffs}};
}

Cyc Cyc::from_json(const nlohmann::json& j) {
  const int L = j.at("conductor").get<int>();
  Cyc c = zero(L);
  const auto& arr = j.at("coeffs");
  if (arr.size() != c.coeffs_.size()) throw CycError("coefficient vector has wrong length");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    c.coeffs_[i] = mpq_class(arr[i].get<std::string>());
    c.coeffs_[i].canonicalize();
  }
  return c;
}

std::vector<Cyc> roots_of_unity(int conductor) {
  std::vector<Cyc> out;
  out.reserve(conductor);
  for (int k = 0; k < conductor; ++k) out.push_back(Cyc::root_of_unity(conductor, k));
  return out;
}

}  // namespace qh
