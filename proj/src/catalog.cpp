#include "qh/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace qh {

TameFamily TameFamily::i1(Cyc a) {
  if (a.is_zero()) throw CatalogError("I1 needs a != 0");
  return TameFamily{FamilyTag::I1, std::move(a), 1, 2};
}
TameFamily TameFamily::i2(int m, Cyc a) {
  if (m < 1) throw CatalogError("I2 needs m >= 1");
  if (a.is_zero()) throw CatalogError("I2 needs a != 0");
  return TameFamily{FamilyTag::I2, std::move(a), m, 2};
}
TameFamily TameFamily::i3(int n) {
  if (n < 2) throw CatalogError("I3 needs n >= 2");
  return TameFamily{FamilyTag::I3, std::nullopt, 1, n};
}
TameFamily TameFamily::i4(int m) {
  if (m < 1) throw CatalogError("I4 needs m >= 1");
  return TameFamily{FamilyTag::I4, std::nullopt, m, 2};
}
TameFamily TameFamily::case5() { return TameFamily{FamilyTag::Case5, std::nullopt, 1, 2}; }

std::string TameFamily::name() const {
  switch (tag) {
    case FamilyTag::I1: return "I1";
    case FamilyTag::I2: return "I2";
    case FamilyTag::I3: return "I3";
    case FamilyTag::I4: return "I4";
    case FamilyTag::Case5: return "Case5";
  }
  return "?";
}

std::string TameFamily::to_string() const {
  switch (tag) {
    case FamilyTag::I1: return "I1(" + a->to_string() + ")";
    case FamilyTag::I2: return "I2(" + std::to_string(m) + "," + a->to_string() + ")";
    case FamilyTag::I3: return "I3(" + std::to_string(n) + ")";
    case FamilyTag::I4: return "I4(" + std::to_string(m) + ")";
    case FamilyTag::Case5: return "Case5";
  }
  return "?";
}

nlohmann::json TameFamily::to_json() const {
  nlohmann::json j{{"family", name()}};
  if (tag == FamilyTag::I2 || tag == FamilyTag::I4) j["m"] = m;
  if (tag == FamilyTag::I3) j["n"] = n;
  if (a) j["a"] = a->to_string();
  return j;
}

std::vector<Elem> lifted_relations(const PathAlgebra& alg, const TameFamily& fam) {
  if (fam.tag == FamilyTag::Case5) throw CatalogError("family (5) has no Hopf lift");
  if (alg.num_families() != 2) throw CatalogError("tame families need exactly two arrow families");
  const Elem X = alg.family_sum(0), Y = alg.family_sum(1);
  auto mul = [&](const Elem& u, const Elem& v) { return alg.multiply(u, v); };
  const Elem XY = mul(X, Y), YX = mul(Y, X), XX = mul(X, X), YY = mul(Y, Y);
  switch (fam.tag) {
    case FamilyTag::I1: return {XX - YY, YX - (*fam.a) * XX, XY};
    case FamilyTag::I2: return {XX, YY, alg.power(XY, fam.m) - (*fam.a) * alg.power(YX, fam.m)};
    case FamilyTag::I3: return {alg.power(X, fam.n) - alg.power(Y, fam.n), XY, YX};
    case FamilyTag::I4: return {XX, YY, mul(alg.power(XY, fam.m), X) - mul(alg.power(YX, fam.m), Y)};
    case FamilyTag::Case5: break;
  }
  return {};
}

GradedIdeal build_lifted_ideal(const PathAlgebra& algebra, const TameFamily& fam) {
  return GradedIdeal(algebra, lifted_relations(algebra, fam));
}

GradedIdeal build_lifted_ideal(const HopfStructure& hopf, const TameFamily& fam) {
  return build_lifted_ideal(hopf.algebra(), fam);
}

namespace {

const char* kNeverI1I3 = "I1(a) and I3(n) never lift to Hopf ideals";
const char* kNeverI4 = "I4(m) never lifts to a Hopf ideal";
const char* kNeverCase5 = "family (5) is not local Frobenius, so never occurs";
const char* kCase1I2 = "W=(g,g): I2(m,a) is Hopf iff m=1 and p=q=a=-1";
const char* kCase2I2 = "W=(g,h): I2(m,a) is Hopf iff q1=p2=-1, a=(-1)^(m-1)q2^m=(-1)^(m-1)p1^(-m), p1q2 primitive m-th root";

std::optional<Verdict> never_hopf(const TameFamily& fam) {
  switch (fam.tag) {
    case FamilyTag::I1:
    case FamilyTag::I3: return Verdict{false, kNeverI1I3};
    case FamilyTag::I4: return Verdict{false, kNeverI4};
    case FamilyTag::Case5: return Verdict{false, kNeverCase5};
    case FamilyTag::I2: break;
  }
  return std::nullopt;
}

Cyc minus_one_power(int L, int e) { return Cyc::rational(L, e % 2 == 0 ? 1 : -1); }

}  // namespace

Verdict criterion_case1(int /*n*/, const Cyc& p, const Cyc& q, const TameFamily& fam) {
  if (auto v = never_hopf(fam)) return *v;
  const Cyc minus = Cyc::rational(p.conductor(), -1);
  const bool hopf = fam.m == 1 && p == minus && q == minus && *fam.a == minus;
  return Verdict{hopf, kCase1I2};
}

Verdict criterion_case2(int /*ord_g*/, int /*ord_h*/, const Cyc& q1, const Cyc& p1, const Cyc& q2, const Cyc& p2,
                        const TameFamily& fam) {
  if (auto v = never_hopf(fam)) return *v;
  const int L = q1.conductor();
  const Cyc minus = Cyc::rational(L, -1);
  const Cyc sign = minus_one_power(L, fam.m - 1);
  const Cyc& a = *fam.a;
  const bool first = q1 == minus && p2 == minus && a == sign * q2.pow(fam.m) && a == sign * p1.pow(-fam.m);
  const bool second = (p1 * q2).is_primitive_root(fam.m);
  return Verdict{first && second, kCase2I2};
}

const Cyc& CaseParameters::get(const std::string& name) const {
  for (const auto& [n, v] : named)
    if (n == name) return v;
  throw CatalogError("no parameter " + name);
}

nlohmann::json CaseParameters::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, v] : named) j[n] = v.to_string();
  return j;
}

CaseParameters case_parameters(const HopfStructure& hopf) {
  const auto& Q = hopf.quiver();
  if (Q.num_families() != 2) throw CatalogError("need two arrow families");
  const auto& G = Q.group();
  const int w1 = G.index_of(Q.weights()[0]), w2 = G.index_of(Q.weights()[1]);
  CaseParameters cp;
  if (w1 == w2) {
    cp.kind = 1;
    cp.named = {{"q", hopf.chi(0, w1).inv()}, {"p", hopf.chi(1, w1).inv()}};
  } else {
    cp.kind = 2;
    cp.named = {{"q1", hopf.chi(0, w1).inv()},
                {"p1", hopf.chi(0, w2).inv()},
                {"q2", hopf.chi(1, w1).inv()},
                {"p2", hopf.chi(1, w2).inv()}};
  }
  return cp;
}

Verdict criterion_verdict(const HopfStructure& hopf, const TameFamily& fam) {
  const auto cp = case_parameters(hopf);
  const auto& Q = hopf.quiver();
  const auto& G = Q.group();
  if (cp.kind == 1) return criterion_case1(G.order_of(Q.weights()[0]), cp.get("p"), cp.get("q"), fam);
  return criterion_case2(G.order_of(Q.weights()[0]), G.order_of(Q.weights()[1]), cp.get("q1"), cp.get("p1"),
                         cp.get("q2"), cp.get("p2"), fam);
}

std::optional<BimoduleAction> action_from_parameters(const CoveringQuiver& quiver, const std::vector<Cyc>& params,
                                                     int conductor) {
  if (quiver.num_families() != 2) throw CatalogError("need two arrow families");
  const auto& G = quiver.group();
  const auto& W = quiver.weights();
  const bool same = W[0] == W[1];
  if (params.size() != (same ? 2u : 4u))
    throw CatalogError(same ? "W=(g,g) takes two scalars q,p" : "W=(g,h) takes four scalars q1,p1,q2,p2");
  // Target values chi_i(w_j).
  std::vector<std::vector<Cyc>> want(2);
  for (const auto& c : params)
    if (c.conductor() != conductor) throw CatalogError("scalar conductor mismatch");
  if (same) {
    want[0] = {params[0].inv()};
    want[1] = {params[1].inv()};
  } else {
    want[0] = {params[0].inv(), params[1].inv()};
    want[1] = {params[2].inv(), params[3].inv()};
  }
  BimoduleAction act;
  const auto chars = G.characters(conductor);
  for (int i = 0; i < 2; ++i) {
    auto it = std::find_if(chars.begin(), chars.end(), [&](const Character& c) {
      for (std::size_t j = 0; j < want[i].size(); ++j)
        if (G.character_eval(c, W[j]) != want[i][j]) return false;
      return true;
    });
    if (it == chars.end()) return std::nullopt;
    act.right_chars.push_back(*it);
  }
  return act;
}

std::optional<int> TameInstance::dim() const {
  if (!quotient) return std::nullopt;
  return quotient->dimension;
}

nlohmann::json TameInstance::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : weights) w.push_back(group.element_string(x));
  nlohmann::json j{{"group", group.to_string()},
                   {"weights", w},
                   {"chars", params.to_json()},
                   {"family", family.name()},
                   {"m", family.tag == FamilyTag::I3 ? nlohmann::json(nullptr) : nlohmann::json(family.m)},
                   {"a", family.a ? nlohmann::json(family.a->to_string()) : nlohmann::json(nullptr)},
                   {"verdict", verdict ? "hopf" : "not_hopf"},
                   {"dim", dim() ? nlohmann::json(*dim()) : nlohmann::json(nullptr)},
                   {"criterion_ref", criterion_ref}};
  if (family.tag == FamilyTag::I3) j["n"] = family.n;
  if (oracle) j["oracle"] = *oracle ? "hopf" : "not_hopf";
  return j;
}

int dimension_formula(const TameInstance& instance) {
  if (!instance.verdict) throw CatalogError("dimension_formula needs a Hopf instance");
  if (!instance.quotient) throw CatalogError("instance has no computed quotient");
  return instance.quotient->dimension;
}

int predicted_dimension(const TameInstance& instance) {
  if (instance.family.tag != FamilyTag::I2) throw CatalogError("only I2 instances have a predicted dimension");
  return 4 * instance.family.m * instance.group.order();
}

EnumerationResult enumerate_tame(const FinAbGroup& G, const EnumerationOptions& opts) {
  const int L = opts.conductor.value_or(static_cast<int>(lcm(G.exponent(), 2)));
  if (L % G.exponent() != 0) throw CatalogError("conductor must be a multiple of the group exponent");
  const auto chars = G.characters(L);
  const auto roots = roots_of_unity(L);
  const int n = G.order();

  struct Weights {
    int w1, w2, mmax;
  };
  std::vector<Weights> ws;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.subgroup_generated({G.element(a), G.element(b)}).index == 1)
        ws.push_back({a, b, static_cast<int>(lcm(G.order_of(G.element(a)), G.order_of(G.element(b))))});

  // Family list per W, with a stable index for the swap comparison.
  auto families_for = [&](int mmax) {
    std::vector<TameFamily> fams;
    for (int m = 1; m <= mmax; ++m)
      for (const auto& a : roots) fams.push_back(TameFamily::i2(m, a));
    if (opts.include_all_families) {
      for (const auto& a : roots) fams.push_back(TameFamily::i1(a));
      fams.push_back(TameFamily::i3(2));
      fams.push_back(TameFamily::i4(1));
    }
    return fams;
  };

  std::size_t total = 0;
  for (const auto& w : ws) total += chars.size() * chars.size() * families_for(w.mmax).size();
  const std::size_t stride =
      opts.negative_samples > 0 ? std::max<std::size_t>(1, total / static_cast<std::size_t>(opts.negative_samples)) : 0;

  EnumerationResult res;
  std::size_t negatives_seen = 0;
  for (const auto& w : ws) {
    const CoveringQuiver Q(G, {G.element(w.w1), G.element(w.w2)});
    const PathAlgebra A(Q, L);
    const auto fams = families_for(w.mmax);
    std::map<std::size_t, std::unique_ptr<GradedIdeal>> ideals;
    auto ideal_for = [&](std::size_t f) -> const GradedIdeal& {
      auto& slot = ideals[f];
      if (!slot) slot = std::make_unique<GradedIdeal>(build_lifted_ideal(A, fams[f]));
      return *slot;
    };

    for (std::size_t c1 = 0; c1 < chars.size(); ++c1)
      for (std::size_t c2 = 0; c2 < chars.size(); ++c2) {
        const HopfStructure H(Q, BimoduleAction{{chars[c1], chars[c2]}}, L);
        const auto params = case_parameters(H);
        for (std::size_t f = 0; f < fams.size(); ++f) {
          ++res.grid_points;
          const auto v = criterion_verdict(H, fams[f]);
          const bool sample = !v.hopf && stride > 0 && (negatives_seen++ % stride == 0);
          if (!v.hopf && !sample) continue;
          if (v.hopf) {
            // Swapping the arrow families maps I2(m,a) to I2(m,a^-1); keep the smaller key.
            const long e = *fams[f].a->root_exponent();
            const long e_swapped = (L - e) % L;
            if (std::make_tuple(w.w2, c2, c1, e_swapped) < std::make_tuple(w.w1, c1, c2, e)) continue;
          }
          TameInstance inst{G, Q.weights(), H.action(), L, params, fams[f], v.hopf, std::nullopt, std::nullopt,
                            v.criterion_ref};
          auto oracle = H.is_hopf_ideal(ideal_for(f));
          inst.oracle = oracle.hopf;
          if (oracle.hopf) inst.quotient = std::move(oracle.quotient);
          if (*inst.oracle != inst.verdict) res.disagreements.push_back(inst);
          if (v.hopf)
            res.instances.push_back(std::move(inst));
          else
            ++res.negatives_checked;
        }
      }
  }
  return res;
}

nlohmann::json BlockReport::to_json(const FinAbGroup& g) const {
  nlohmann::json n = nlohmann::json::array();
  for (const auto& e : subgroup.elements) n.push_back(g.element_string(e));
  return {{"subgroup", n},           {"blocks", block_count},        {"block_dims", block_dims},
          {"principal", principal},  {"dim", dim_total},             {"dim_principal", dim_principal},
          {"equal_blocks", equal_blocks}};
}

BlockReport blocks(const GradedIdeal& ideal, std::optional<int> degree_bound) {
  const auto& Q = ideal.algebra().quiver();
  BlockReport rep;
  rep.subgroup = Q.group().subgroup_generated(Q.weights());
  const auto comps = Q.connected_components();
  rep.block_count = comps.count();
  const auto qb = ideal.quotient_basis(degree_bound.value_or(ideal.default_degree_bound()));
  rep.block_dims.assign(rep.block_count, std::vector<int>(qb.by_degree.size(), 0));
  for (std::size_t d = 0; d < qb.by_degree.size(); ++d)
    for (const Path& p : qb.by_degree[d]) ++rep.block_dims[comps.component_of[p.start]][d];
  rep.principal = comps.component_of[Q.identity_vertex()];
  rep.dim_total = qb.dimension;
  for (int x : rep.block_dims[rep.principal]) rep.dim_principal += x;
  rep.equal_blocks = std::all_of(rep.block_dims.begin(), rep.block_dims.end(),
                                 [&](const auto& v) { return v == rep.block_dims[rep.principal]; });
  return rep;
}

nlohmann::json CaseFiveReport::to_json() const {
  return {{"dims", dims},
          {"dimension", dimension},
          {"nilpotency", nilpotency},
          {"yxy_is_zero", yxy_is_zero},
          {"left_socle", left_socle},
          {"right_socle", right_socle},
          {"socle_simple", socle_simple},
          {"local_frobenius_possible", local_frobenius_possible}};
}

CaseFiveReport case5_refutation() {
  const FinAbGroup G(std::vector<int>{});
  const CoveringQuiver Q(G, {G.identity(), G.identity()});
  const PathAlgebra A(Q, 1);
  const Elem x = A.arrow(0, 0), y = A.arrow(0, 1);
  const GradedIdeal I(A, {A.multiply(y, x) - A.multiply(x, x), A.multiply(y, y)});

  // Words read left to right as products, i.e. last traversed arrow first.
  auto word = [&](const Path& p) {
    if (p.length == 0) return std::string("1");
    auto f = A.families(p);
    std::string s;
    for (auto it = f.rbegin(); it != f.rend(); ++it) s += *it == 0 ? 'x' : 'y';
    return s;
  };
  auto elem_string = [&](const Elem& e) {
    std::string s;
    for (const auto& [p, c] : e.terms()) {
      if (!s.empty()) s += " + ";
      s += (c.is_one() ? "" : "(" + c.to_string() + ")") + word(p);
    }
    return s.empty() ? std::string("0") : s;
  };

  CaseFiveReport rep;
  const auto qb = I.quotient_basis(4);
  rep.dims = qb.dims();
  rep.dimension = qb.dimension;
  rep.nilpotency = qb.nilpotency;
  rep.yxy_is_zero = I.contains(A.multiply(A.multiply(y, x), y));

  std::vector<Path> basis;
  for (const auto& level : qb.by_degree) basis.insert(basis.end(), level.begin(), level.end());
  auto socle = [&](bool left) {
    std::vector<SparseVec<std::pair<int, Path>>> cols;
    for (const Path& b : basis) {
      SparseVec<std::pair<int, Path>> col;
      const Elem be = Elem::term(b, A.one());
      int slot = 0;
      for (const Elem& g : {x, y}) {
        const Elem img = I.reduce(left ? A.multiply(g, be) : A.multiply(be, g));
        for (const auto& [p, c] : img.terms()) col.emplace(std::make_pair(slot, p), c);
        ++slot;
      }
      cols.push_back(std::move(col));
    }
    std::vector<std::string> out;
    for (const auto& k : nullspace(cols, 1)) {
      Elem e;
      for (const auto& [j, c] : k) e.add(basis[j], c);
      out.push_back(elem_string(e));
    }
    return out;
  };
  rep.left_socle = socle(true);
  rep.right_socle = socle(false);
  rep.socle_simple = rep.left_socle.size() == 1 && rep.right_socle.size() == 1;
  rep.local_frobenius_possible = rep.socle_simple;
  return rep;
}

}  // namespace qh
