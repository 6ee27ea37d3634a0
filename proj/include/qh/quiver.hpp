#pragma once

// Covering quivers: vertices v_g for g in G, arrows (a_i, g): v_{g^-1} -> v_{w_i g^-1}.
// Vertex indices coincide with FinAbGroup element indices.

#include <string>
#include <vector>

#include <json.hpp>

#include "qh/group.hpp"

namespace qh {

class QuiverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  int family = 0;   // index into W
  GroupElt shift;   // the g of (a_i, g)

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Components {
  std::vector<int> component_of;            // vertex -> component id
  std::vector<std::vector<int>> members;    // component id -> sorted vertices
  int principal = 0;                        // component containing v_e
  int count() const { return static_cast<int>(members.size()); }
};

class CoveringQuiver {
public:
  CoveringQuiver() = default;
  /// Throws QuiverError when W is not a weight sequence of G.
  CoveringQuiver(FinAbGroup group, WeightSeq weights);

  const FinAbGroup& group() const { return group_; }
  const WeightSeq& weights() const { return weights_; }
  int num_vertices() const { return group_.order(); }
  int num_families() const { return static_cast<int>(weights_.size()); }
  int num_arrows() const { return num_vertices() * num_families(); }
  int identity_vertex() const { return identity_; }

  /// Arrows in (family, shift) order.
  std::vector<Arrow> arrows() const;
  int source(const Arrow& a) const;
  int target(const Arrow& a) const;
  /// The unique family-i arrow leaving vertex v.
  Arrow arrow_from(int vertex, int family) const;

  /// Target of the family-i arrow leaving v, and source of the family-i arrow entering v.
  int step(int vertex, int family) const { return forward_[vertex * num_families() + family]; }
  int step_back(int vertex, int family) const { return backward_[vertex * num_families() + family]; }

  Components connected_components() const;
  /// Vertex g . v_f = v_{f g^-1}.
  int left_translate(int g, int vertex) const { return group_.mul_index(vertex, group_.inv_index(g)); }

  std::string vertex_label(int v) const;
  std::string arrow_label(const Arrow& a) const;
  std::string to_dot() const;
  nlohmann::json to_json() const;

private:
  FinAbGroup group_;
  WeightSeq weights_;
  int identity_ = 0;
  std::vector<int> weight_idx_;
  std::vector<int> forward_;
  std::vector<int> backward_;
};

inline CoveringQuiver build_covering_quiver(FinAbGroup g, WeightSeq w) {
  return CoveringQuiver(std::move(g), std::move(w));
}

}  // namespace qh
