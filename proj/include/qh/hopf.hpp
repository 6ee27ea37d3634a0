#pragma once

// Hopf structure on the path algebra of a covering quiver induced by an
// allowable kG-bimodule: G acts on the left by translation and on the right
// by translation twisted with one character per arrow family,
//
//   g . (a_i, s) = (a_i, g s),     (a_i, s) . u = chi_i(u) (a_i, s u),
//   g . v_f = v_{f g^-1},           v_f . g = v_{g^-1 f}.
//
// The structure maps are fixed on vertices and arrows,
//
//   Delta(v_h) = sum_g v_{h g^-1} (x) v_g,
//   Delta(x)   = sum_g (g.x (x) v_g + v_g (x) x.g),
//   eps(v_h) = [h = e],  eps(x) = 0,
//   S(v_h) = v_{h^-1},   S(x) = -f.x.d   for x: v_d -> v_f,
//
// and extended to paths multiplicatively (Delta, eps) or anti-multiplicatively (S).

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qh/path_algebra.hpp"

namespace qh {

class AllowabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BimoduleAction {
  std::vector<Character> right_chars;  // one per arrow family
};

struct AllowabilityReport {
  bool ok = true;
  std::string diagnostic;
};

/// Checks the allowability conditions for `action` on `quiver` over Q(zeta_L).
AllowabilityReport check_allowable(const CoveringQuiver& quiver, const BimoduleAction& action, int conductor);

struct Diagnostic {
  std::string check;
  int degree = -1;
  std::optional<std::pair<int, int>> bidegree;
  nlohmann::json witness;
  nlohmann::json residue;
  nlohmann::json to_json() const;
};

struct AxiomReport {
  bool ok = true;
  int degree_bound = 0;
  std::size_t paths_checked = 0;
  std::optional<Diagnostic> counterexample;
};

struct CommutationEntry {
  int family = 0;
  int character = 0;
  Cyc scalar;
  bool ok = false;
};

struct CommutationReport {
  bool ok = true;
  std::vector<CommutationEntry> entries;
};

struct HopfIdealReport {
  bool admissible = false;
  bool hopf = false;
  std::optional<QuotientBasis> quotient;
  std::vector<Diagnostic> diagnostics;  // first failure, if any
};

struct StabilityReport {
  bool stable = true;
  std::optional<Diagnostic> counterexample;
};

using Tensor3 = std::map<std::tuple<Path, Path, Path>, Cyc>;

class HopfStructure {
public:
  /// Throws AllowabilityError when the action is not allowable.
  HopfStructure(CoveringQuiver quiver, BimoduleAction action, int conductor);

  const PathAlgebra& algebra() const { return algebra_; }
  const CoveringQuiver& quiver() const { return algebra_.quiver(); }
  const BimoduleAction& action() const { return action_; }
  int conductor() const { return algebra_.conductor(); }

  /// chi_i(g) for group element index g.
  const Cyc& chi(int family, int g) const { return chi_[family * quiver().num_vertices() + g]; }

  Elem left_act(int g, const Elem& x) const;
  Elem right_act(const Elem& x, int g) const;

  Tensor delta(const Path& p) const;
  Tensor delta(const Elem& x) const;
  Cyc counit(const Elem& x) const;
  Elem antipode(const Path& p) const;
  Elem antipode(const Elem& x) const;
  /// e_chi = sum_g chi(g) v_g.
  Elem grouplike(const Character& chi) const;

  AxiomReport verify_hopf_axioms(int degree_bound) const;
  /// X_i e_chi = chi(w_i)^-1 e_chi X_i for every family sum X_i and every action character.
  CommutationReport commutation_check() const;

  /// Generator-level test: eps(r) = 0, S(r) in I, Delta(r) in I(x)A + A(x)I.
  /// Since Delta is an algebra map, S an anti-map and I(x)A + A(x)I an ideal,
  /// this decides the question for the whole ideal.
  HopfIdealReport is_hopf_ideal(const GradedIdeal& ideal, std::optional<int> degree_bound = {}) const;
  StabilityReport g_stability(const GradedIdeal& ideal, std::optional<int> degree_bound = {}) const;
  /// Canonical residue of the (i, j) component of Delta(r) modulo I_i (x) A_j + A_i (x) I_j.
  Tensor delta_mod_reduce(const GradedIdeal& ideal, const Elem& r, int i, int j) const;
  /// Same, for an element of A (x) A that is already computed.
  Tensor reduce_tensor(const GradedIdeal& ideal, const Tensor& t) const;

  Tensor3 delta_left(const Tensor& t) const;   // (Delta (x) id)
  Tensor3 delta_right(const Tensor& t) const;  // (id (x) Delta)

private:
  PathAlgebra algebra_;
  BimoduleAction action_;
  std::vector<Cyc> chi_;
  std::vector<Tensor> arrow_delta_;  // indexed by vertex * |W| + family
};

}  // namespace qh
