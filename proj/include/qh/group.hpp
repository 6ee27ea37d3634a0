#pragma once

// Finite abelian groups Z_{n_1} x ... x Z_{n_k}, their elements, characters
// with values in Q(zeta_L), weight sequences and subgroup/coset machinery.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qh/cyclotomic.hpp"

namespace qh {

class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector with respect to the distinguished generators.
struct GroupElt {
  std::vector<int> exps;

  friend auto operator<=>(const GroupElt&, const GroupElt&) = default;
  friend bool operator==(const GroupElt&, const GroupElt&) = default;
};

using WeightSeq = std::vector<GroupElt>;

/// A homomorphism G -> Q(zeta_L)^x, given by its values on the generators.
struct Character {
  std::vector<Cyc> values;

  friend bool operator==(const Character&, const Character&) = default;
};

struct Subgroup {
  std::vector<GroupElt> elements;     // sorted
  std::vector<GroupElt> coset_reps;   // least element of each coset, sorted
  int index = 1;
};

class FinAbGroup {
public:
  FinAbGroup() : FinAbGroup(std::vector<int>{}) {}
  explicit FinAbGroup(std::vector<int> orders);

  /// Parses "Z2xZ4", "Z1", "Z3 x Z3".
  static FinAbGroup parse(std::string_view spec);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int order() const { return order_; }
  int exponent() const { return exponent_; }

  bool contains(const GroupElt& g) const;
  GroupElt identity() const;
  GroupElt generator(int i) const;
  /// Parses "(1,0)"; a lone "e" is the identity.
  GroupElt parse_element(std::string_view text) const;
  /// Parses a weight list such as "(1),(1)" or "(1,0),(0,1)".
  WeightSeq parse_weights(std::string_view text) const;

  GroupElt mul(const GroupElt& a, const GroupElt& b) const;
  GroupElt inv(const GroupElt& a) const;
  GroupElt pow(const GroupElt& a, long k) const;
  int order_of(const GroupElt& a) const;

  // Dense indexing: elements in lexicographic order of exponent vectors.
  int index_of(const GroupElt& g) const;
  GroupElt element(int index) const;
  std::vector<GroupElt> elements() const;
  int mul_index(int a, int b) const { return mul_table_[a * order_ + b]; }
  int inv_index(int a) const { return inv_table_[a]; }

  Subgroup subgroup_generated(const std::vector<GroupElt>& gens) const;
  bool is_weight_sequence(const WeightSeq& w) const;

  /// Every character G -> mu_L. Requires exponent | L.
  std::vector<Character> characters(int conductor) const;
  /// The values must satisfy values[i]^{n_i} = 1.
  bool is_character(const Character& chi) const;
  Cyc character_eval(const Character& chi, const GroupElt& g) const;

  std::string to_string() const;
  std::string element_string(const GroupElt& g) const;
  nlohmann::json element_json(const GroupElt& g) const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }

private:
  void check(const GroupElt& g) const;

  std::vector<int> orders_;
  int order_ = 1;
  int exponent_ = 1;
  std::vector<int> mul_table_;
  std::vector<int> inv_table_;
};

}  // namespace qh
