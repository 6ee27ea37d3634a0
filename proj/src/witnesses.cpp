#include "qh/witnesses.hpp"

#include <numeric>
#include <tuple>

namespace qh {

namespace {

using Vec3 = std::map<std::tuple<int, int, int>, Cyc>;

template <class K>
void add_to(std::map<K, Cyc>& m, const K& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

Vec single(int i, const Cyc& c) {
  Vec v;
  if (!c.is_zero()) v.emplace(i, c);
  return v;
}

Vec scaled(const Cyc& c, const Vec& a) {
  Vec out;
  for (const auto& [i, x] : a) add_to(out, i, c * x);
  return out;
}

Vec2 delta_vec(const HopfTables& t, const Vec& a) {
  Vec2 out;
  for (const auto& [i, c] : a)
    for (const auto& [k, x] : t.delta[i]) add_to(out, k, c * x);
  return out;
}

Cyc eps_vec(const HopfTables& t, const Vec& a) {
  Cyc e = Cyc::zero(t.conductor);
  for (const auto& [i, c] : a) e += c * t.eps[i];
  return e;
}

Vec antipode_vec(const HopfTables& t, const Vec& a) {
  Vec out;
  for (const auto& [i, c] : a)
    for (const auto& [k, x] : t.antipode[i]) add_to(out, k, c * x);
  return out;
}

std::string monomial_label(const std::vector<std::pair<std::string, int>>& powers) {
  std::string s;
  for (const auto& [name, e] : powers) {
    if (e == 0) continue;
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// Fills delta, eps and antipode from generator data, given that basis element
// i equals the ordered product of words[i] exactly.
void derive_from_generators(HopfTables& t, const std::vector<std::vector<int>>& words, const std::map<int, Vec2>& gd,
                            const std::map<int, Cyc>& ge, const std::map<int, Vec>& gs) {
  const int n = t.dim();
  const int one = t.unit.begin()->first;
  t.delta.assign(n, {});
  t.eps.assign(n, Cyc::zero(t.conductor));
  t.antipode.assign(n, {});
  for (int i = 0; i < n; ++i) {
    Vec2 d{{{one, one}, Cyc::one(t.conductor)}};
    Cyc e = Cyc::one(t.conductor);
    Vec s = t.unit;
    for (int g : words[i]) {
      d = detail::mult_vec2(t, d, gd.at(g));
      e *= ge.at(g);
      s = detail::mult_vec(t, gs.at(g), s);
    }
    t.delta[i] = std::move(d);
    t.eps[i] = e;
    t.antipode[i] = std::move(s);
  }
}

}  // namespace

namespace detail {

Vec mult_vec(const HopfTables& t, const Vec& a, const Vec& b) {
  const int n = t.dim();
  Vec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const Cyc xy = x * y;
      for (const auto& [k, z] : t.mult[i * n + j]) add_to(out, k, xy * z);
    }
  return out;
}

Vec2 mult_vec2(const HopfTables& t, const Vec2& a, const Vec2& b) {
  const int n = t.dim();
  Vec2 out;
  for (const auto& [ka, x] : a)
    for (const auto& [kb, y] : b) {
      const auto& l = t.mult[ka.first * n + kb.first];
      const auto& r = t.mult[ka.second * n + kb.second];
      if (l.empty() || r.empty()) continue;
      const Cyc xy = x * y;
      for (const auto& [i, u] : l)
        for (const auto& [j, v] : r) add_to(out, {i, j}, xy * u * v);
    }
  return out;
}

}  // namespace detail

std::optional<std::string> hopf_table_violation(const HopfTables& t) {
  const int n = t.dim();
  if (n == 0) return "empty basis";
  if (static_cast<int>(t.grade.size()) != n || static_cast<int>(t.mult.size()) != n * n ||
      static_cast<int>(t.delta.size()) != n || static_cast<int>(t.eps.size()) != n ||
      static_cast<int>(t.antipode.size()) != n)
    return "table shapes do not match the basis";
  try {
    using detail::mult_vec;
    const Cyc one = Cyc::one(t.conductor);
    std::vector<Vec> b(n);
    for (int i = 0; i < n; ++i) b[i] = single(i, one);
    auto at = [&](int i) { return t.labels[i]; };

    for (int i = 0; i < n; ++i)
      if (mult_vec(t, t.unit, b[i]) != b[i] || mult_vec(t, b[i], t.unit) != b[i]) return "unit law fails at " + at(i);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec& ij = t.mult[i * n + j];
        for (int k = 0; k < n; ++k)
          if (mult_vec(t, ij, b[k]) != mult_vec(t, b[i], t.mult[j * n + k]))
            return "associativity fails at (" + at(i) + ", " + at(j) + ", " + at(k) + ")";
      }

    Vec2 unit2;
    for (const auto& [i, x] : t.unit)
      for (const auto& [j, y] : t.unit) add_to(unit2, {i, j}, x * y);
    if (delta_vec(t, t.unit) != unit2) return "delta(1) != 1 (x) 1";
    if (eps_vec(t, t.unit) != one) return "eps(1) != 1";

    for (int i = 0; i < n; ++i) {
      const Vec2& d = t.delta[i];
      Vec3 left, right;
      Vec lc, rc, ls, rs;
      for (const auto& [k, c] : d) {
        for (const auto& [k2, c2] : t.delta[k.first]) add_to(left, {k2.first, k2.second, k.second}, c * c2);
        for (const auto& [k2, c2] : t.delta[k.second]) add_to(right, {k.first, k2.first, k2.second}, c * c2);
        add_to(lc, k.second, c * t.eps[k.first]);
        add_to(rc, k.first, c * t.eps[k.second]);
        for (const auto& [s, x] : mult_vec(t, t.antipode[k.first], b[k.second])) add_to(ls, s, c * x);
        for (const auto& [s, x] : mult_vec(t, b[k.first], t.antipode[k.second])) add_to(rs, s, c * x);
      }
      if (left != right) return "coassociativity fails at " + at(i);
      if (lc != b[i] || rc != b[i]) return "counit law fails at " + at(i);
      const Vec e1 = scaled(t.eps[i], t.unit);
      if (ls != e1 || rs != e1) return "antipode law fails at " + at(i);
    }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec& ij = t.mult[i * n + j];
        if (delta_vec(t, ij) != detail::mult_vec2(t, t.delta[i], t.delta[j]))
          return "delta not multiplicative at (" + at(i) + ", " + at(j) + ")";
        if (eps_vec(t, ij) != t.eps[i] * t.eps[j]) return "eps not multiplicative at (" + at(i) + ", " + at(j) + ")";
      }
  } catch (const CycError& e) {
    return std::string("inconsistent scalars: ") + e.what();
  }
  return std::nullopt;
}

PresentedHopfAlgebra::PresentedHopfAlgebra(HopfTables tables) : t_(std::move(tables)) {
  if (auto v = hopf_table_violation(t_)) throw HopfTableError(*v);
}

std::optional<int> PresentedHopfAlgebra::find(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (t_.labels[i] == label) return i;
  return std::nullopt;
}

Vec PresentedHopfAlgebra::basis(int i) const { return single(i, Cyc::one(t_.conductor)); }

Vec PresentedHopfAlgebra::basis(const std::string& label) const {
  auto i = find(label);
  if (!i) throw HopfTableError("no basis element " + label);
  return basis(*i);
}

Vec PresentedHopfAlgebra::multiply(const Vec& a, const Vec& b) const { return detail::mult_vec(t_, a, b); }
Vec2 PresentedHopfAlgebra::delta(const Vec& a) const { return delta_vec(t_, a); }
Cyc PresentedHopfAlgebra::eps(const Vec& a) const { return eps_vec(t_, a); }
Vec PresentedHopfAlgebra::antipode(const Vec& a) const { return antipode_vec(t_, a); }
Vec PresentedHopfAlgebra::scalar(const Cyc& c, const Vec& a) const { return scaled(c, a); }

Vec PresentedHopfAlgebra::add(const Vec& a, const Vec& b) const {
  Vec out = a;
  for (const auto& [i, x] : b) add_to(out, i, x);
  return out;
}

std::string PresentedHopfAlgebra::to_string(const Vec& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : a) {
    if (!s.empty()) s += " + ";
    s += (c.is_one() ? "" : "(" + c.to_string() + ")") + t_.labels[i];
  }
  return s;
}

nlohmann::json PresentedHopfAlgebra::to_json(const Vec& a) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [i, c] : a) j.push_back({{"basis", t_.labels[i]}, {"coeff", c.to_string()}});
  return j;
}

PresentedHopfAlgebra book_algebra(int n, const Cyc& q, int m) {
  if (n < 2 || !q.is_primitive_root(n)) throw HopfTableError("book algebra needs q a primitive n-th root of unity");
  if (m < 1 || std::gcd(m, n) != 1) throw HopfTableError("book algebra needs gcd(m, n) = 1");
  const int L = q.conductor();
  auto idx = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  HopfTables t;
  t.conductor = L;
  const int N = n * n * n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        t.labels.push_back(monomial_label({{"y", a}, {"x", b}, {"g", c}}));
        t.grade.push_back(a + b);
      }
  t.mult.assign(static_cast<std::size_t>(N) * N, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int a2 = 0; a2 < n - a; ++a2)
          for (int b2 = 0; b2 < n - b; ++b2)
            for (int c2 = 0; c2 < n; ++c2)
              t.mult[idx(a, b, c) * N + idx(a2, b2, c2)] =
                  single(idx(a + a2, b + b2, (c + c2) % n), q.pow(static_cast<long>(c) * (m * a2 + b2)));
  const Cyc one = Cyc::one(L);
  t.unit = single(idx(0, 0, 0), one);

  const int x = idx(0, 1, 0), y = idx(1, 0, 0), g = idx(0, 0, 1), e = idx(0, 0, 0);
  const int gm = idx(0, 0, m % n), ginv = idx(0, 0, n - 1), gminv = idx(0, 0, (n - m % n) % n);
  std::map<int, Vec2> gd{{x, {{{x, g}, one}, {{e, x}, one}}}, {y, {{{y, e}, one}, {{gm, y}, one}}}, {g, {{{g, g}, one}}}};
  std::map<int, Cyc> ge{{x, Cyc::zero(L)}, {y, Cyc::zero(L)}, {g, one}};
  std::map<int, Vec> gs{{x, scaled(-one, detail::mult_vec(t, single(x, one), single(ginv, one)))},
                        {y, scaled(-one, detail::mult_vec(t, single(gminv, one), single(y, one)))},
                        {g, single(ginv, one)}};
  std::vector<std::vector<int>> words(N);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto& w = words[idx(a, b, c)];
        w.insert(w.end(), a, y);
        w.insert(w.end(), b, x);
        w.insert(w.end(), c, g);
      }
  derive_from_generators(t, words, gd, ge, gs);
  return PresentedHopfAlgebra(std::move(t));
}

PresentedHopfAlgebra taft(int n, const Cyc& q, const std::string& xname, const std::string& gname) {
  if (n < 2 || !q.is_primitive_root(n)) throw HopfTableError("Taft algebra needs q a primitive n-th root of unity");
  const int L = q.conductor();
  auto idx = [n](int b, int c) { return b * n + c; };
  const int N = n * n;
  HopfTables t;
  t.conductor = L;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      t.labels.push_back(monomial_label({{xname, b}, {gname, c}}));
      t.grade.push_back(b);
    }
  t.mult.assign(static_cast<std::size_t>(N) * N, {});
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int b2 = 0; b2 < n - b; ++b2)
        for (int c2 = 0; c2 < n; ++c2)
          t.mult[idx(b, c) * N + idx(b2, c2)] = single(idx(b + b2, (c + c2) % n), q.pow(static_cast<long>(c) * b2));
  const Cyc one = Cyc::one(L);
  t.unit = single(idx(0, 0), one);
  const int x = idx(1, 0), g = idx(0, 1), e = idx(0, 0), ginv = idx(0, n - 1);
  std::map<int, Vec2> gd{{x, {{{x, g}, one}, {{e, x}, one}}}, {g, {{{g, g}, one}}}};
  std::map<int, Cyc> ge{{x, Cyc::zero(L)}, {g, one}};
  std::map<int, Vec> gs{{x, scaled(-one, detail::mult_vec(t, single(x, one), single(ginv, one)))}, {g, single(ginv, one)}};
  std::vector<std::vector<int>> words(N);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      auto& w = words[idx(b, c)];
      w.insert(w.end(), b, x);
      w.insert(w.end(), c, g);
    }
  derive_from_generators(t, words, gd, ge, gs);
  return PresentedHopfAlgebra(std::move(t));
}

PresentedHopfAlgebra tensor_hopf(const PresentedHopfAlgebra& A, const PresentedHopfAlgebra& B) {
  if (A.conductor() != B.conductor()) throw HopfTableError("tensor factors live over different fields");
  const auto& a = A.tables();
  const auto& b = B.tables();
  const int na = a.dim(), nb = b.dim(), n = na * nb;
  auto idx = [nb](int i, int j) { return i * nb + j; };
  HopfTables t;
  t.conductor = a.conductor;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      const std::string& la = a.labels[i];
      const std::string& lb = b.labels[j];
      t.labels.push_back(la == "1" ? lb : (lb == "1" ? la : la + lb));
      t.grade.push_back(a.grade[i] + b.grade[j]);
    }
  t.mult.assign(static_cast<std::size_t>(n) * n, {});
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          Vec& out = t.mult[idx(i, j) * n + idx(i2, j2)];
          for (const auto& [k, x] : a.mult[i * na + i2])
            for (const auto& [l, y] : b.mult[j * nb + j2]) add_to(out, idx(k, l), x * y);
        }
  for (const auto& [k, x] : a.unit)
    for (const auto& [l, y] : b.unit) add_to(t.unit, idx(k, l), x * y);
  t.delta.resize(n);
  t.eps.resize(n);
  t.antipode.resize(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      Vec2& d = t.delta[idx(i, j)];
      for (const auto& [ka, x] : a.delta[i])
        for (const auto& [kb, y] : b.delta[j]) add_to(d, {idx(ka.first, kb.first), idx(ka.second, kb.second)}, x * y);
      t.eps[idx(i, j)] = a.eps[i] * b.eps[j];
      for (const auto& [k, x] : a.antipode[i])
        for (const auto& [l, y] : b.antipode[j]) add_to(t.antipode[idx(i, j)], idx(k, l), x * y);
    }
  return PresentedHopfAlgebra(std::move(t));
}

PresentedHopfAlgebra ground_algebra(int conductor) {
  const Cyc one = Cyc::one(conductor);
  HopfTables t;
  t.conductor = conductor;
  t.labels = {"1"};
  t.grade = {0};
  t.mult = {single(0, one)};
  t.delta = {Vec2{{{0, 0}, one}}};
  t.eps = {one};
  t.antipode = {single(0, one)};
  t.unit = single(0, one);
  return PresentedHopfAlgebra(std::move(t));
}

int QuiverQuotient::index_of(const Path& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), p);
  if (it == basis.end() || *it != p) throw CatalogError("path is not a quotient basis element");
  return static_cast<int>(it - basis.begin());
}

Vec QuiverQuotient::coords(const Elem& x) const {
  Vec out;
  const Elem r = ideal->reduce(x);
  for (const auto& [p, c] : r.terms()) out.emplace(index_of(p), c);
  return out;
}

QuiverQuotient quiver_quotient(std::shared_ptr<const HopfStructure> hopf, std::shared_ptr<const GradedIdeal> ideal) {
  auto rep = hopf->is_hopf_ideal(*ideal);
  if (!rep.hopf) throw CatalogError("ideal is not a Hopf ideal");
  QuiverQuotient qq{hopf, ideal, {}, nullptr};
  for (const auto& level : rep.quotient->by_degree) qq.basis.insert(qq.basis.end(), level.begin(), level.end());
  std::sort(qq.basis.begin(), qq.basis.end());

  const auto& A = hopf->algebra();
  const int n = static_cast<int>(qq.basis.size());
  HopfTables t;
  t.conductor = A.conductor();
  for (const Path& p : qq.basis) {
    t.labels.push_back(A.path_string(p));
    t.grade.push_back(p.length);
  }
  std::vector<Elem> b;
  for (const Path& p : qq.basis) b.push_back(Elem::term(p, A.one()));
  t.mult.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.mult[i * n + j] = qq.coords(A.multiply(b[i], b[j]));
  for (int i = 0; i < n; ++i) {
    Vec2 d;
    const Tensor dt = hopf->reduce_tensor(*ideal, hopf->delta(qq.basis[i]));
    for (const auto& [k, c] : dt.terms())
      d.emplace(std::make_pair(qq.index_of(k.first), qq.index_of(k.second)), c);
    t.delta.push_back(std::move(d));
    t.eps.push_back(hopf->counit(b[i]));
    t.antipode.push_back(qq.coords(hopf->antipode(qq.basis[i])));
  }
  t.unit = qq.coords(A.unit());
  qq.algebra = std::make_shared<const PresentedHopfAlgebra>(std::move(t));
  return qq;
}

Vec HopfMorphism::apply(const Vec& x) const {
  Vec out;
  for (const auto& [i, c] : x)
    for (const auto& [k, y] : columns[i]) add_to(out, k, c * y);
  return out;
}

Vec2 HopfMorphism::apply2(const Vec2& x) const {
  Vec2 out;
  for (const auto& [k, c] : x)
    for (const auto& [i, y] : columns[k.first])
      for (const auto& [j, z] : columns[k.second]) add_to(out, {i, j}, c * y * z);
  return out;
}

nlohmann::json HopfMorphism::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (std::size_t i = 0; i < columns.size(); ++i)
    cols.push_back({{"source", domain->label(static_cast<int>(i))}, {"image", codomain->to_json(columns[i])}});
  return {{"domain_dim", domain->dim()},
          {"codomain_dim", codomain->dim()},
          {"columns", cols},
          {"extension_failures", extension_failures}};
}

HopfMorphism extend_from_quiver(const QuiverQuotient& dom, std::shared_ptr<const PresentedHopfAlgebra> cod,
                                const std::vector<Vec>& vertex_images,
                                const std::vector<std::vector<Vec>>& arrow_images) {
  const auto& A = dom.hopf->algebra();
  const auto& Q = A.quiver();
  const int nv = Q.num_vertices();
  if (static_cast<int>(vertex_images.size()) != nv || static_cast<int>(arrow_images.size()) != Q.num_families())
    throw HopfTableError("morphism data has the wrong shape");

  auto image_path = [&](const Path& p) {
    if (p.length == 0) return vertex_images[p.start];
    const auto fams = A.families(p);
    int v = p.start;
    Vec acc = arrow_images[fams[0]][v];
    v = Q.step(v, fams[0]);
    for (std::size_t i = 1; i < fams.size(); ++i) {
      acc = cod->multiply(arrow_images[fams[i]][v], acc);
      v = Q.step(v, fams[i]);
    }
    return acc;
  };
  auto image = [&](const Elem& x) {
    Vec out;
    for (const auto& [p, c] : x.terms())
      for (const auto& [k, y] : image_path(p)) add_to(out, k, c * y);
    return out;
  };

  HopfMorphism phi{dom.algebra, cod, {}, {}};
  for (const Path& p : dom.basis) phi.columns.push_back(image_path(p));

  Vec total;
  for (int v = 0; v < nv; ++v)
    for (const auto& [k, c] : vertex_images[v]) add_to(total, k, c);
  if (total != cod->tables().unit) phi.extension_failures.push_back("vertex images do not sum to 1");
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      const Vec prod = cod->multiply(vertex_images[v], vertex_images[w]);
      if (prod != (v == w ? vertex_images[v] : Vec{}))
        phi.extension_failures.push_back("vertex images not orthogonal idempotents at " + Q.vertex_label(v) + ", " +
                                         Q.vertex_label(w));
    }
  for (int i = 0; i < Q.num_families(); ++i)
    for (int v = 0; v < nv; ++v) {
      const Vec& a = arrow_images[i][v];
      const int w = Q.step(v, i);
      if (cod->multiply(vertex_images[w], a) != a || cod->multiply(a, vertex_images[v]) != a)
        phi.extension_failures.push_back("arrow image not between its vertex images: " + A.path_string(A.path(v, {i})));
    }
  for (const Elem& r : dom.ideal->generators())
    if (!image(r).empty()) phi.extension_failures.push_back("relation not sent to 0: " + A.to_string(r));
  return phi;
}

namespace {

// Arrow (a_i, s) goes to u_i * phi(v_s); in both examples every element has order <= 2, so v_s is its source.
HopfMorphism from_idempotents(std::shared_ptr<const HopfStructure> hopf, const TameFamily& fam,
                              std::shared_ptr<const PresentedHopfAlgebra> cod, const std::vector<Vec>& idempotents,
                              const std::vector<Vec>& u) {
  const auto& A = hopf->algebra();
  auto ideal = std::make_shared<const GradedIdeal>(build_lifted_ideal(A, fam));
  const auto qq = quiver_quotient(hopf, ideal);
  const auto& Q = A.quiver();
  const auto& G = Q.group();
  std::vector<std::vector<Vec>> arrows(Q.num_families(), std::vector<Vec>(Q.num_vertices()));
  for (int i = 0; i < Q.num_families(); ++i)
    for (int s = 0; s < G.order(); ++s) {
      const Arrow a{i, G.element(s)};
      arrows[i][Q.source(a)] = cod->multiply(u[i], idempotents[s]);
    }
  return extend_from_quiver(qq, cod, idempotents, arrows);
}

}  // namespace

HopfMorphism phi_book() {
  const int L = 2;
  const auto G = FinAbGroup::parse("Z2");
  const CoveringQuiver Q(G, G.parse_weights("(1),(1)"));
  const Character minus{{Cyc::rational(L, -1)}};
  auto hopf = std::make_shared<const HopfStructure>(Q, BimoduleAction{{minus, minus}}, L);
  auto cod = std::make_shared<const PresentedHopfAlgebra>(book_algebra(2, Cyc::rational(L, -1), 1));
  const Cyc half = Cyc::rational(L, mpq_class(1, 2));
  const Vec one = cod->basis("1"), g = cod->basis("g");
  std::vector<Vec> idem(2);
  idem[G.index_of(G.parse_element("e"))] = cod->scalar(half, cod->add(one, g));
  idem[G.index_of(G.parse_element("(1)"))] = cod->scalar(half, cod->add(one, cod->scalar(-Cyc::one(L), g)));
  const std::vector<Vec> u{cod->multiply(cod->basis("x"), g), cod->basis("y")};
  return from_idempotents(hopf, TameFamily::i2(1, Cyc::rational(L, -1)), cod, idem, u);
}

HopfMorphism phi_taft() {
  const int L = 2;
  const auto G = FinAbGroup::parse("Z2xZ2");
  const CoveringQuiver Q(G, G.parse_weights("(1,0),(0,1)"));
  const Cyc one_c = Cyc::one(L), minus = Cyc::rational(L, -1);
  const Character chi1{{minus, one_c}}, chi2{{one_c, minus}};
  auto hopf = std::make_shared<const HopfStructure>(Q, BimoduleAction{{chi1, chi2}}, L);
  auto cod = std::make_shared<const PresentedHopfAlgebra>(tensor_hopf(taft(2, minus, "x", "g"), taft(2, minus, "y", "h")));
  const Cyc half = Cyc::rational(L, mpq_class(1, 2));
  const Vec one = cod->basis("1"), g = cod->basis("g"), h = cod->basis("h");
  auto proj = [&](const Vec& t, int sign) { return cod->scalar(half, cod->add(one, cod->scalar(sign ? minus : one_c, t))); };
  std::vector<Vec> idem(G.order());
  for (int s = 0; s < G.order(); ++s) {
    const auto e = G.element(s);
    idem[s] = cod->multiply(proj(g, e.exps[0]), proj(h, e.exps[1]));
  }
  const std::vector<Vec> u{cod->multiply(cod->basis("x"), g), cod->multiply(cod->basis("y"), h)};
  return from_idempotents(hopf, TameFamily::i2(1, one_c), cod, idem, u);
}

nlohmann::json IsoReport::to_json() const {
  nlohmann::json j{{"ok", ok}, {"domain_dim", domain_dim}, {"codomain_dim", codomain_dim}};
  if (!ok) {
    j["failed_check"] = failed_check;
    j["witness"] = witness;
  }
  return j;
}

IsoReport verify_hopf_iso(const HopfMorphism& phi) {
  IsoReport rep;
  const auto& D = *phi.domain;
  const auto& C = *phi.codomain;
  rep.domain_dim = D.dim();
  rep.codomain_dim = C.dim();
  auto fail = [&](std::string check, nlohmann::json w) {
    rep.ok = false;
    rep.failed_check = std::move(check);
    rep.witness = std::move(w);
    return rep;
  };
  if (!phi.extension_failures.empty()) return fail("extension", phi.extension_failures);
  if (D.dim() != C.dim()) return fail("dimension", {{"domain", D.dim()}, {"codomain", C.dim()}});
  if (static_cast<int>(phi.columns.size()) != D.dim()) return fail("shape", {{"columns", phi.columns.size()}});
  if (D.conductor() != C.conductor()) return fail("field", {{"domain", D.conductor()}, {"codomain", C.conductor()}});

  const int n = D.dim();
  if (phi.apply(D.tables().unit) != C.tables().unit) return fail("unit", C.to_json(phi.apply(D.tables().unit)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec lhs = phi.apply(D.tables().mult[i * n + j]);
      const Vec rhs = C.multiply(phi.columns[i], phi.columns[j]);
      if (lhs != rhs)
        return fail("multiplicative", {{"left", D.label(i)}, {"right", D.label(j)}, {"phi(ab)", C.to_json(lhs)},
                                       {"phi(a)phi(b)", C.to_json(rhs)}});
    }
  for (int i = 0; i < n; ++i)
    if (phi.apply2(D.tables().delta[i]) != C.delta(phi.columns[i])) return fail("coproduct", {{"basis", D.label(i)}});
  for (int i = 0; i < n; ++i)
    if (C.eps(phi.columns[i]) != D.tables().eps[i]) return fail("counit", {{"basis", D.label(i)}});
  for (int i = 0; i < n; ++i)
    if (C.antipode(phi.columns[i]) != phi.apply(D.tables().antipode[i])) return fail("antipode", {{"basis", D.label(i)}});

  RowEchelon<int> ech;
  for (const Vec& c : phi.columns) ech.insert(c);
  if (static_cast<int>(ech.rank()) != n) return fail("bijective", {{"rank", ech.rank()}, {"dim", n}});

  // Radical degree never drops.
  for (int i = 0; i < n; ++i)
    for (const auto& [k, c] : phi.columns[i])
      if (C.tables().grade[k] < D.tables().grade[i])
        return fail("radical filtration", {{"basis", D.label(i)}, {"image term", C.label(k)}});
  rep.ok = true;
  return rep;
}

}  // namespace qh
