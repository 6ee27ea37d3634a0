#include "qh/hopf.hpp"

#include <algorithm>

namespace qh {

nlohmann::json Diagnostic::to_json() const {
  nlohmann::json j{{"check", check}, {"witness", witness}, {"residue", residue}};
  if (degree >= 0) j["degree"] = degree;
  if (bidegree) j["bidegree"] = {bidegree->first, bidegree->second};
  return j;
}

AllowabilityReport check_allowable(const CoveringQuiver& quiver, const BimoduleAction& action, int conductor) {
  const auto& G = quiver.group();
  auto fail = [](std::string msg) { return AllowabilityReport{false, std::move(msg)}; };
  if (static_cast<int>(action.right_chars.size()) != quiver.num_families())
    return fail("need one right-action character per arrow family");
  for (std::size_t i = 0; i < action.right_chars.size(); ++i) {
    const auto& chi = action.right_chars[i];
    if (chi.values.size() != G.orders().size())
      return fail("character " + std::to_string(i) + " has wrong arity");
    for (const auto& v : chi.values)
      if (v.conductor() != conductor)
        return fail("character " + std::to_string(i) + " lives over conductor " + std::to_string(v.conductor()));
  }
  const int n = G.order();
  const auto elts = G.elements();
  for (int i = 0; i < quiver.num_families(); ++i) {
    const auto& chi = action.right_chars[i];
    // Right module law (x.u).u' = x.(uu') forces chi to be multiplicative.
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (G.character_eval(chi, elts[u]) * G.character_eval(chi, elts[w]) !=
            G.character_eval(chi, elts[G.mul_index(u, w)]))
          return fail("right action of family " + std::to_string(i) + " is not a module action (character not multiplicative at " +
                      G.element_string(elts[u]) + ", " + G.element_string(elts[w]) + ")");
    if (!G.is_character(chi)) return fail("character " + std::to_string(i) + " is not a homomorphism");
    // g . V^d_f lands in V^{dg^-1}_{fg^-1}; V^d_f . g lands in V^{g^-1 d}_{g^-1 f}.
    for (int v = 0; v < n; ++v) {
      const Arrow a = quiver.arrow_from(v, i);
      const int d = quiver.source(a), f = quiver.target(a);
      for (int g = 0; g < n; ++g) {
        const Arrow left{i, G.mul(elts[g], a.shift)};
        const Arrow right{i, G.mul(a.shift, elts[g])};
        const int ginv = G.inv_index(g);
        if (quiver.source(left) != G.mul_index(d, ginv) || quiver.target(left) != G.mul_index(f, ginv))
          return fail("left translation does not respect the arrow spaces");
        if (quiver.source(right) != G.mul_index(ginv, d) || quiver.target(right) != G.mul_index(ginv, f))
          return fail("right translation does not respect the arrow spaces");
      }
    }
  }
  return {};
}

HopfStructure::HopfStructure(CoveringQuiver quiver, BimoduleAction action, int conductor)
    : algebra_(std::move(quiver), conductor), action_(std::move(action)) {
  if (auto rep = check_allowable(algebra_.quiver(), action_, conductor); !rep.ok) throw AllowabilityError(rep.diagnostic);
  const auto& G = this->quiver().group();
  const int n = G.order();
  for (const auto& c : action_.right_chars)
    for (int g = 0; g < n; ++g) chi_.push_back(G.character_eval(c, G.element(g)));

  const Cyc one = algebra_.one();
  const int k = this->quiver().num_families();
  arrow_delta_.resize(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i) {
      Tensor t;
      const Path alpha = algebra_.path(v, {i});
      const int end = algebra_.end(alpha);
      for (int g = 0; g < n; ++g) {
        const int ginv = G.inv_index(g);
        // g . alpha starts at v g^-1; alpha . g starts at g^-1 v (the same vertex, G abelian).
        t.add(algebra_.path(G.mul_index(v, ginv), {i}), algebra_.trivial_path(g), one);
        t.add(algebra_.trivial_path(g), algebra_.path(G.mul_index(ginv, v), {i}), chi(i, g));
      }
      (void)end;
      arrow_delta_[v * k + i] = std::move(t);
    }
}

Elem HopfStructure::left_act(int g, const Elem& x) const {
  const auto& G = quiver().group();
  const int ginv = G.inv_index(g);
  Elem out;
  for (const auto& [p, c] : x.terms()) out.add(Path{p.length, G.mul_index(p.start, ginv), p.word}, c);
  return out;
}

Elem HopfStructure::right_act(const Elem& x, int g) const {
  const auto& G = quiver().group();
  const int ginv = G.inv_index(g);
  Elem out;
  for (const auto& [p, c] : x.terms()) {
    Cyc coeff = c;
    for (int f : algebra_.families(p)) coeff *= chi(f, g);
    out.add(Path{p.length, G.mul_index(ginv, p.start), p.word}, coeff);
  }
  return out;
}

Tensor HopfStructure::delta(const Path& p) const {
  const auto& G = quiver().group();
  if (p.length == 0) {
    Tensor t;
    for (int g = 0; g < G.order(); ++g)
      t.add(algebra_.trivial_path(G.mul_index(p.start, G.inv_index(g))), algebra_.trivial_path(g), algebra_.one());
    return t;
  }
  const auto fams = algebra_.families(p);
  const int k = quiver().num_families();
  int v = p.start;
  Tensor acc = arrow_delta_[v * k + fams[0]];
  v = quiver().step(v, fams[0]);
  for (std::size_t i = 1; i < fams.size(); ++i) {
    acc = algebra_.multiply(arrow_delta_[v * k + fams[i]], acc);
    v = quiver().step(v, fams[i]);
  }
  return acc;
}

Tensor HopfStructure::delta(const Elem& x) const {
  Tensor out;
  for (const auto& [p, c] : x.terms()) {
    const Tensor t = delta(p);
    for (const auto& [key, v] : t.terms()) out.add(key.first, key.second, c * v);
  }
  return out;
}

Cyc HopfStructure::counit(const Elem& x) const {
  Cyc e = Cyc::zero(conductor());
  for (const auto& [p, c] : x.terms())
    if (p.length == 0 && p.start == quiver().identity_vertex()) e += c;
  return e;
}

Elem HopfStructure::antipode(const Path& p) const {
  const auto& G = quiver().group();
  if (p.length == 0) return algebra_.vertex(G.inv_index(p.start));
  // S(x) = -chi_i(d) (a_i from f^-1) for an arrow x: v_d -> v_f of family i;
  // S reverses products, so S(b_1 ... traversal ... b_n) = S(b_1) * ... * S(b_n).
  const auto fams = algebra_.families(p);
  Elem acc;
  int v = p.start;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const int f = quiver().step(v, fams[i]);
    Elem s = Elem::term(algebra_.path(G.inv_index(f), {fams[i]}), -chi(fams[i], v));
    acc = i == 0 ? s : algebra_.multiply(acc, s);
    v = f;
  }
  return acc;
}

Elem HopfStructure::antipode(const Elem& x) const {
  Elem out;
  for (const auto& [p, c] : x.terms()) out += c * antipode(p);
  return out;
}

Elem HopfStructure::grouplike(const Character& chi) const {
  const auto& G = quiver().group();
  Elem e;
  for (int g = 0; g < G.order(); ++g) e.add(algebra_.trivial_path(g), G.character_eval(chi, G.element(g)));
  return e;
}

Tensor3 HopfStructure::delta_left(const Tensor& t) const {
  Tensor3 out;
  std::map<Path, Tensor> memo;
  for (const auto& [key, c] : t.terms()) {
    auto it = memo.find(key.first);
    if (it == memo.end()) it = memo.emplace(key.first, delta(key.first)).first;
    for (const auto& [k2, c2] : it->second.terms()) {
      auto [slot, fresh] = out.try_emplace({k2.first, k2.second, key.second}, c * c2);
      if (!fresh) {
        slot->second += c * c2;
        if (slot->second.is_zero()) out.erase(slot);
      }
    }
  }
  return out;
}

Tensor3 HopfStructure::delta_right(const Tensor& t) const {
  Tensor3 out;
  std::map<Path, Tensor> memo;
  for (const auto& [key, c] : t.terms()) {
    auto it = memo.find(key.second);
    if (it == memo.end()) it = memo.emplace(key.second, delta(key.second)).first;
    for (const auto& [k2, c2] : it->second.terms()) {
      auto [slot, fresh] = out.try_emplace({key.first, k2.first, k2.second}, c * c2);
      if (!fresh) {
        slot->second += c * c2;
        if (slot->second.is_zero()) out.erase(slot);
      }
    }
  }
  return out;
}

namespace {

Elem path_elem(const PathAlgebra& alg, const Path& p) { return Elem::term(p, alg.one()); }

}  // namespace

AxiomReport HopfStructure::verify_hopf_axioms(int degree_bound) const {
  AxiomReport rep;
  rep.degree_bound = degree_bound;
  const auto& G = quiver().group();
  auto fail = [&](std::string check, const Path& p, nlohmann::json residue = {}) {
    rep.ok = false;
    rep.counterexample = Diagnostic{std::move(check), p.length, std::nullopt, algebra_.path_json(p), std::move(residue)};
    return rep;
  };

  const Elem one = algebra_.unit();
  {
    Tensor unit_delta = delta(one);
    Tensor expected;
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b) expected.add(algebra_.trivial_path(a), algebra_.trivial_path(b), algebra_.one());
    if (unit_delta != expected) return fail("delta(1) = 1 (x) 1", algebra_.trivial_path(quiver().identity_vertex()));
    if (!counit(one).is_one()) return fail("eps(1) = 1", algebra_.trivial_path(quiver().identity_vertex()));
  }

  for (int d = 0; d <= degree_bound; ++d) {
    for (const Path& p : algebra_.paths_of_length(d)) {
      ++rep.paths_checked;
      const Elem x = path_elem(algebra_, p);
      const Tensor dp = delta(p);

      for (const auto& [key, c] : dp.terms())
        if (key.first.length + key.second.length != d) return fail("delta is graded", p, algebra_.to_json(dp));

      if (delta_left(dp) != delta_right(dp)) return fail("coassociativity", p);

      Elem left_counit, right_counit, left_antipode, right_antipode;
      for (const auto& [key, c] : dp.terms()) {
        const Cyc el = counit(path_elem(algebra_, key.first));
        const Cyc er = counit(path_elem(algebra_, key.second));
        if (!el.is_zero()) left_counit.add(key.second, c * el);
        if (!er.is_zero()) right_counit.add(key.first, c * er);
        left_antipode += c * algebra_.multiply(antipode(key.first), path_elem(algebra_, key.second));
        right_antipode += c * algebra_.multiply(path_elem(algebra_, key.first), antipode(key.second));
      }
      if (left_counit != x || right_counit != x) return fail("counit", p);
      const Elem expected = counit(x) * one;
      if (left_antipode != expected) return fail("antipode m(S (x) id)delta", p, algebra_.to_json(left_antipode - expected));
      if (right_antipode != expected) return fail("antipode m(id (x) S)delta", p, algebra_.to_json(right_antipode - expected));

      // Multiplicativity against vertices (including a vanishing product)
      // and against every arrow that can follow p.
      if (d + 1 <= degree_bound || d == 0) {
        const int e = algebra_.end(p);
        std::vector<Elem> left_factors{algebra_.vertex(e), algebra_.vertex(G.mul_index(e, G.order() > 1 ? 1 : 0))};
        if (d + 1 <= degree_bound)
          for (int i = 0; i < quiver().num_families(); ++i) left_factors.push_back(algebra_.arrow(e, i));
        for (const Elem& y : left_factors) {
          const Elem yx = algebra_.multiply(y, x);
          if (delta(yx) != algebra_.multiply(delta(y), dp)) return fail("delta multiplicative", p);
          if (counit(yx) != counit(y) * counit(x)) return fail("counit multiplicative", p);
        }
      }
    }
  }
  return rep;
}

CommutationReport HopfStructure::commutation_check() const {
  CommutationReport rep;
  const auto& G = quiver().group();
  for (int i = 0; i < quiver().num_families(); ++i) {
    const Elem X = algebra_.family_sum(i);
    for (std::size_t j = 0; j < action_.right_chars.size(); ++j) {
      const Elem e = grouplike(action_.right_chars[j]);
      const Cyc s = G.character_eval(action_.right_chars[j], quiver().weights()[i]).inv();
      const bool ok = algebra_.multiply(X, e) == s * algebra_.multiply(e, X);
      rep.entries.push_back(CommutationEntry{i, static_cast<int>(j), s, ok});
      rep.ok = rep.ok && ok;
    }
  }
  return rep;
}

Tensor HopfStructure::reduce_tensor(const GradedIdeal& ideal, const Tensor& t) const {
  // Project the left factors onto a complement of I_i, then the right factors
  // onto a complement of I_j; the kernel of the composite is I_i(x)A_j + A_i(x)I_j.
  std::map<Path, SparseVec<Path>> by_right;
  for (const auto& [key, c] : t.terms()) by_right[key.second].emplace(key.first, c);
  std::map<Path, SparseVec<Path>> by_left;
  for (auto& [r, vec] : by_right) {
    const int d = vec.begin()->first.length;
    for (auto& [l, c] : ideal.degree_basis(d).reduce(std::move(vec))) by_left[l].emplace(r, c);
  }
  Tensor out;
  for (auto& [l, vec] : by_left) {
    const int d = vec.begin()->first.length;
    for (auto& [r, c] : ideal.degree_basis(d).reduce(std::move(vec))) out.add(l, r, c);
  }
  return out;
}

Tensor HopfStructure::delta_mod_reduce(const GradedIdeal& ideal, const Elem& r, int i, int j) const {
  return reduce_tensor(ideal, delta(r).bidegree(i, j));
}

HopfIdealReport HopfStructure::is_hopf_ideal(const GradedIdeal& ideal, std::optional<int> degree_bound) const {
  HopfIdealReport rep;
  const int bound = degree_bound.value_or(ideal.default_degree_bound());
  auto adm = ideal.is_admissible(bound);
  if (!adm.admissible) {
    rep.diagnostics.push_back(Diagnostic{"admissible", -1, std::nullopt, {}, adm.diagnostic});
    return rep;
  }
  rep.admissible = true;
  rep.quotient = std::move(adm.basis);

  for (const Elem& r : ideal.generators()) {
    const int d = *r.degree();
    const Cyc e = counit(r);
    if (!e.is_zero()) {
      rep.diagnostics.push_back(Diagnostic{"counit", d, std::nullopt, algebra_.to_json(r), e.to_json()});
      return rep;
    }
    const Tensor dr = delta(r);
    for (int i = 0; i <= d; ++i) {
      const Tensor residue = reduce_tensor(ideal, dr.bidegree(i, d - i));
      if (!residue.is_zero()) {
        rep.diagnostics.push_back(
            Diagnostic{"coproduct", d, std::make_pair(i, d - i), algebra_.to_json(r), algebra_.to_json(residue)});
        return rep;
      }
    }
    const Elem s = antipode(r);
    if (!ideal.contains(s)) {
      rep.diagnostics.push_back(
          Diagnostic{"antipode", d, std::nullopt, algebra_.to_json(r), algebra_.to_json(ideal.reduce(s))});
      return rep;
    }
  }
  rep.hopf = true;
  return rep;
}

StabilityReport HopfStructure::g_stability(const GradedIdeal& ideal, std::optional<int> degree_bound) const {
  StabilityReport rep;
  if (ideal.generators().empty()) return rep;
  const auto& G = quiver().group();
  int top = degree_bound.value_or(ideal.default_degree_bound());
  for (int d = ideal.min_generator_degree(); d <= top; ++d) {
    const auto& basis = ideal.degree_basis(d);
    if (basis.rank() == algebra_.dim(d)) break;  // I_d = A_d from here on
    for (const auto& [pivot, row] : basis.rows()) {
      const Elem x{Elem::Terms(row.begin(), row.end())};
      for (int gen = 0; gen < G.rank(); ++gen) {
        const int g = G.index_of(G.generator(gen));
        for (const auto& [side, image] : {std::pair<const char*, Elem>{"left", left_act(g, x)},
                                          std::pair<const char*, Elem>{"right", right_act(x, g)}}) {
          if (!ideal.contains(image)) {
            rep.stable = false;
            rep.counterexample = Diagnostic{std::string(side) + " translation by " + G.element_string(G.element(g)), d,
                                            std::nullopt, algebra_.to_json(x), algebra_.to_json(ideal.reduce(image))};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace qh
