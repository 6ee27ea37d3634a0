#include "qh/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qh {

CoveringQuiver::CoveringQuiver(FinAbGroup group, WeightSeq weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  for (const auto& w : weights_)
    if (!group_.contains(w)) throw QuiverError("weight does not belong to " + group_.to_string());
  if (!group_.is_weight_sequence(weights_)) throw QuiverError("not a weight sequence");
  identity_ = group_.index_of(group_.identity());
  for (const auto& w : weights_) weight_idx_.push_back(group_.index_of(w));
  const int n = num_vertices();
  const int k = num_families();
  forward_.resize(static_cast<std::size_t>(n) * k);
  backward_.resize(static_cast<std::size_t>(n) * k);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i) {
      forward_[v * k + i] = group_.mul_index(weight_idx_[i], v);
      backward_[v * k + i] = group_.mul_index(group_.inv_index(weight_idx_[i]), v);
    }
}

std::vector<Arrow> CoveringQuiver::arrows() const {
  std::vector<Arrow> out;
  out.reserve(num_arrows());
  for (int i = 0; i < num_families(); ++i)
    for (int s = 0; s < num_vertices(); ++s) out.push_back(Arrow{i, group_.element(s)});
  return out;
}

int CoveringQuiver::source(const Arrow& a) const { return group_.inv_index(group_.index_of(a.shift)); }

int CoveringQuiver::target(const Arrow& a) const {
  return group_.mul_index(weight_idx_.at(a.family), source(a));
}

Arrow CoveringQuiver::arrow_from(int vertex, int family) const {
  return Arrow{family, group_.element(group_.inv_index(vertex))};
}

Components CoveringQuiver::connected_components() const {
  const int n = num_vertices();
  Components c;
  c.component_of.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (c.component_of[start] != -1) continue;
    const int id = c.count();
    c.members.emplace_back();
    std::vector<int> stack{start};
    c.component_of[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.members[id].push_back(v);
      for (int i = 0; i < num_families(); ++i)
        for (int u : {step(v, i), step_back(v, i)})
          if (c.component_of[u] == -1) {
            c.component_of[u] = id;
            stack.push_back(u);
          }
    }
    std::sort(c.members[id].begin(), c.members[id].end());
  }
  c.principal = c.component_of[identity_];
  return c;
}

std::string CoveringQuiver::vertex_label(int v) const { return "v" + group_.element_string(group_.element(v)); }

std::string CoveringQuiver::arrow_label(const Arrow& a) const {
  return "(a" + std::to_string(a.family + 1) + ", " + group_.element_string(a.shift) + ")";
}

std::string CoveringQuiver::to_dot() const {
  std::ostringstream os;
  os << "digraph covering_quiver {\n";
  for (int v = 0; v < num_vertices(); ++v) os << "  \"" << vertex_label(v) << "\";\n";
  for (const auto& a : arrows())
    os << "  \"" << vertex_label(source(a)) << "\" -> \"" << vertex_label(target(a)) << "\" [label=\""
       << arrow_label(a) << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json CoveringQuiver::to_json() const {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : weights_) weights.push_back(w.exps);
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < num_vertices(); ++v) vertices.push_back(group_.element(v).exps);
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : this->arrows())
    arrows.push_back({{"family", a.family},
                      {"shift", a.shift.exps},
                      {"source", group_.element(source(a)).exps},
                      {"target", group_.element(target(a)).exps}});
  return {{"group", group_.to_string()}, {"weights", weights}, {"vertices", vertices}, {"arrows", arrows}};
}

}  // namespace qh
