#include "qh/combinatorics.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qh {

namespace {

void check_range(int m, int l) {
  if (m < 2 || l <= 0 || l >= m)
    throw CombinatoricsError("need 0 < l < m, got m=" + std::to_string(m) + ", l=" + std::to_string(l));
}

// Calls f(weight) once per weakly increasing tuple 0 <= m_1 <= ... <= m_l <= top.
void walk_increasing(int l, int top, const std::function<void(int)>& f) {
  std::function<void(int, int, int)> rec = [&](int pos, int lo, int weight) {
    if (pos == l) return f(weight);
    for (int v = lo; v <= top; ++v) rec(pos + 1, v, weight + v);
  };
  rec(0, 0, 0);
}

// Calls f(weight) once per tuple n_1..n_k >= 0 with sum <= budget, weight sum w_i n_i.
void walk_simplex(const std::vector<int>& w, int budget, const std::function<void(int)>& f) {
  const int k = static_cast<int>(w.size());
  std::function<void(int, int, int)> rec = [&](int pos, int left, int weight) {
    if (pos == k) return f(weight);
    for (int v = 0; v <= left; ++v) rec(pos + 1, left - v, weight + w[pos] * v);
  };
  if (budget >= 0) rec(0, budget, 0);
}

std::vector<int> h2_weights(int l) {
  std::vector<int> w(l);
  for (int i = 1; i <= l; ++i) w[i - 1] = l + 1 - i;
  return w;
}

void bump(std::vector<long long>& c, int k, long long by = 1) {
  if (static_cast<int>(c.size()) <= k) c.resize(k + 1, 0);
  c[k] += by;
}

HPolynomial trimmed(int m, int l, std::vector<long long> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return HPolynomial{m, l, std::move(c)};
}

template <class Build>
HPolynomial memo(int which, int m, int l, Build build) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, HPolynomial> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(which, m, l);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache.emplace(key, build()).first->second;
}

// Sum of t^w over the weights produced by `walk`, with t^k taken from a power table.
Cyc eval_walk(const Cyc& t, int max_weight, const std::function<void(const std::function<void(int)>&)>& walk) {
  std::vector<Cyc> pw{Cyc::one(t.conductor())};
  for (int k = 1; k <= max_weight; ++k) pw.push_back(pw.back() * t);
  Cyc acc = Cyc::zero(t.conductor());
  walk([&](int w) { acc += pw[w]; });
  return acc;
}

}  // namespace

long long HPolynomial::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0LL); }

Cyc HPolynomial::evaluate(const Cyc& t) const {
  Cyc acc = Cyc::zero(t.conductor());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + Cyc::rational(t.conductor(), static_cast<long>(*it));
  return acc;
}

std::string HPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || coeffs[k] != 1) os << coeffs[k];
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

HPolynomial h1_poly(int m, int l) {
  check_range(m, l);
  return memo(1, m, l, [&] {
    std::vector<long long> c;
    walk_increasing(l, m - l, [&](int w) { bump(c, w); });
    return trimmed(m, l, c);
  });
}

HPolynomial h2_poly(int m, int l) {
  check_range(m, l);
  return memo(2, m, l, [&] { return simplex_poly(m, l, h2_weights(l)); });
}

HPolynomial simplex_poly(int m, int l, const std::vector<int>& weights) {
  check_range(m, l);
  if (static_cast<int>(weights.size()) != l) throw CombinatoricsError("need one weight per variable");
  std::vector<long long> c;
  walk_simplex(weights, m - l, [&](int w) { bump(c, w); });
  return trimmed(m, l, c);
}

std::vector<int> shifted_h2_weights(int l) {
  auto w = h2_weights(l);
  for (int& x : w) ++x;
  return w;
}

HPolynomial h3_poly(int m, int l) {
  check_range(m, l);
  return memo(3, m, l, [&] {
    std::vector<long long> c;
    std::vector<int> head(l - 1);
    for (int i = 1; i < l; ++i) head[i - 1] = l - i;
    walk_simplex(head, m - l, [&](int w) { bump(c, w + m - l); });
    walk_simplex(h2_weights(l), m - l - 1, [&](int w) { bump(c, w); });
    return trimmed(m, l, c);
  });
}

Cyc h1(int m, int l, const Cyc& t) {
  check_range(m, l);
  return eval_walk(t, l * (m - l), [&](const auto& f) { walk_increasing(l, m - l, f); });
}

Cyc h2(int m, int l, const Cyc& t) {
  check_range(m, l);
  return eval_walk(t, l * (m - l), [&](const auto& f) { walk_simplex(h2_weights(l), m - l, f); });
}

Cyc h3(int m, int l, const Cyc& t) {
  check_range(m, l);
  std::vector<int> head(l - 1);
  for (int i = 1; i < l; ++i) head[i - 1] = l - i;
  return eval_walk(t, l * (m - l), [&](const auto& f) {
    walk_simplex(head, m - l, [&](int w) { f(w + m - l); });
    walk_simplex(h2_weights(l), m - l - 1, f);
  });
}

nlohmann::json IdentityMismatch::to_json() const {
  return {{"m", m}, {"l", l}, {"h1", h1.coeffs}, {"h2", h2.coeffs}, {"h3", h3.coeffs}};
}

std::optional<IdentityMismatch> h_identity_mismatch(int m, bool perturb) {
  if (m < 2) throw CombinatoricsError("need m >= 2");
  for (int l = 1; l < m; ++l) {
    auto a = h1_poly(m, l), b = perturb ? simplex_poly(m, l, shifted_h2_weights(l)) : h2_poly(m, l), c = h3_poly(m, l);
    if (a.coeffs != b.coeffs || a.coeffs != c.coeffs) return IdentityMismatch{m, l, a, b, c};
  }
  return std::nullopt;
}

bool h_identity_check(int m) { return !h_identity_mismatch(m).has_value(); }

std::optional<int> nonvanishing_l(int m, const Cyc& t) {
  if (m < 2) throw CombinatoricsError("need m >= 2");
  for (int l = 1; l < m; ++l)
    if (!h1(m, l, t).is_zero()) return l;
  return std::nullopt;
}

bool vanishing_criterion(int m, const Cyc& t) { return !nonvanishing_l(m, t).has_value(); }

std::vector<Cyc> generating_product(int m, const Cyc& t) {
  const int L = t.conductor();
  std::vector<Cyc> poly{Cyc::one(L)};
  Cyc tr = Cyc::one(L);
  for (int r = 1; r <= m; ++r) {
    tr *= t;
    std::vector<Cyc> next(poly.size() + 1, Cyc::zero(L));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] += tr * poly[k];
    }
    poly = std::move(next);
  }
  return poly;
}

bool generating_function_check(int m) {
  if (m < 1) throw CombinatoricsError("need m >= 1");
  const auto poly = generating_product(m, Cyc::root_of_unity(m, 1));
  for (int k = 0; k <= m; ++k) {
    long expect = k == 0 ? 1 : (k == m ? -((m % 2 == 0) ? 1 : -1) : 0);
    if (poly[k] != Cyc::rational(m, expect)) return false;
  }
  return true;
}

}  // namespace qh
