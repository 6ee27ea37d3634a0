#pragma once

// The five tame relation families on k<x,y>, their lifts to covering quivers,
// closed-form Hopf-ideal verdicts, enumeration over a group, principal blocks
// and the refutation of the fifth family.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qh/hopf.hpp"

namespace qh {

class CatalogError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyTag { I1, I2, I3, I4, Case5 };

struct TameFamily {
  FamilyTag tag = FamilyTag::I2;
  std::optional<Cyc> a;  // I1, I2
  int m = 1;             // I2, I4
  int n = 2;             // I3

  static TameFamily i1(Cyc a);
  static TameFamily i2(int m, Cyc a);
  static TameFamily i3(int n);
  static TameFamily i4(int m);
  static TameFamily case5();

  std::string name() const;  // "I1" .. "Case5"
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Relations of the family in k<x,y> with x, y replaced by X, Y.
std::vector<Elem> lifted_relations(const PathAlgebra& algebra, const TameFamily& fam);
/// Works on disconnected quivers too (X, Y sum over all arrows of a family).
GradedIdeal build_lifted_ideal(const PathAlgebra& algebra, const TameFamily& fam);
GradedIdeal build_lifted_ideal(const HopfStructure& hopf, const TameFamily& fam);

struct Verdict {
  bool hopf = false;
  std::string criterion_ref;
};

/// W = (g, g) on Z_n with (a_1, e) . g = q^-1 g . (a_1, e) and (a_2, e) . g = p^-1 g . (a_2, e).
Verdict criterion_case1(int n, const Cyc& p, const Cyc& q, const TameFamily& fam);
/// W = (g, h), g != h, with q_i = chi_i(g)^-1 and p_i = chi_i(h)^-1.
Verdict criterion_case2(int ord_g, int ord_h, const Cyc& q1, const Cyc& p1, const Cyc& q2, const Cyc& p2,
                        const TameFamily& fam);

/// The scalars the criteria are phrased in, read off the action characters.
struct CaseParameters {
  int kind = 1;                        // 1: w1 = w2, 2: w1 != w2
  std::vector<std::pair<std::string, Cyc>> named;  // (q, p) or (q1, p1, q2, p2)
  const Cyc& get(const std::string& name) const;
  nlohmann::json to_json() const;
};
CaseParameters case_parameters(const HopfStructure& hopf);
Verdict criterion_verdict(const HopfStructure& hopf, const TameFamily& fam);

/// Characters (chi_1, chi_2) realizing given scalars: case 1 takes {q, p}, case 2 {q1, p1, q2, p2}.
/// Returns nullopt when no pair of characters of G into mu_L has those values.
std::optional<BimoduleAction> action_from_parameters(const CoveringQuiver& quiver, const std::vector<Cyc>& params,
                                                     int conductor);

struct TameInstance {
  FinAbGroup group;
  WeightSeq weights;
  BimoduleAction action;
  int conductor = 0;
  CaseParameters params;
  TameFamily family;
  bool verdict = false;   // closed form
  std::optional<bool> oracle;  // brute force, when run
  std::optional<QuotientBasis> quotient;
  std::string criterion_ref;

  std::optional<int> dim() const;
  nlohmann::json to_json() const;
};

struct EnumerationOptions {
  std::optional<int> conductor;  // default lcm(exp G, 2)
  int negative_samples = 24;     // criterion-negative points re-checked by the oracle
  bool include_all_families = true;
};

struct EnumerationResult {
  std::vector<TameInstance> instances;   // criterion-positive, deduplicated
  std::size_t grid_points = 0;
  std::size_t negatives_checked = 0;
  std::vector<TameInstance> disagreements;  // criterion and oracle differ
};

EnumerationResult enumerate_tame(const FinAbGroup& group, const EnumerationOptions& opts = {});

/// Quotient dimension of a Hopf instance (computed, not predicted).
int dimension_formula(const TameInstance& instance);
/// 4 m |G|, the value an I2(m, a) instance must have.
int predicted_dimension(const TameInstance& instance);

struct BlockReport {
  Subgroup subgroup;                       // N = <W>
  int block_count = 0;                     // |G / N|
  std::vector<std::vector<int>> block_dims;  // per component, per degree
  int principal = 0;                       // component index of v_e
  int dim_total = 0;
  int dim_principal = 0;
  bool equal_blocks = false;
  nlohmann::json to_json(const FinAbGroup& g) const;
};

BlockReport blocks(const GradedIdeal& ideal, std::optional<int> degree_bound = {});

struct CaseFiveReport {
  std::vector<int> dims;  // per degree
  int dimension = 0;
  int nilpotency = 0;      // least N with J^N = 0
  bool yxy_is_zero = false;
  std::vector<std::string> left_socle;   // {s : J s = 0}
  std::vector<std::string> right_socle;  // {s : s J = 0}
  bool socle_simple = false;
  bool local_frobenius_possible = false;
  nlohmann::json to_json() const;
};

CaseFiveReport case5_refutation();

}  // namespace qh
