#pragma once

// Exact sparse row reduction over Q(zeta_L).

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qh/cyclotomic.hpp"

namespace qh {

template <class Key>
using SparseVec = std::map<Key, Cyc>;

/// v += c * w, dropping cancelled entries.
template <class Key>
void axpy(SparseVec<Key>& v, const Cyc& c, const SparseVec<Key>& w) {
  for (const auto& [k, x] : w) {
    auto [it, inserted] = v.try_emplace(k, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    } else if (it->second.is_zero()) {
      v.erase(it);
    }
  }
}

/// Row space kept in echelon form with the least key of each row as its pivot.
///
/// Rows are inserted in semi-echelon form (only the leading entry is
/// eliminated) and brought to reduced row echelon form by finalize(). In the
/// reduced form the residue returned by reduce() depends only on the row space,
/// not on insertion order, so it serves as a canonical normal form modulo the
/// span.
template <class Key>
class RowEchelon {
public:
  using Vec = SparseVec<Key>;

  /// Returns true when v was independent of the rows already present.
  bool insert(Vec v) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) {
        const Cyc scale = lead->second.inv();
        for (auto& [k, x] : v) x *= scale;
        rows_.emplace(lead->first, std::move(v));
        reduced_ = false;
        return true;
      }
      const Cyc c = -lead->second;
      axpy(v, c, row->second);
    }
    return false;
  }

  void finalize() {
    if (reduced_) return;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Vec& row = it->second;
      std::vector<Key> hits;
      for (auto e = std::next(row.begin()); e != row.end(); ++e)
        if (rows_.count(e->first)) hits.push_back(e->first);
      for (const Key& k : hits) {
        const Cyc c = -row.at(k);
        axpy(row, c, rows_.at(k));
      }
    }
    reduced_ = true;
  }

  bool is_reduced() const { return reduced_; }

  /// Canonical residue of v modulo the row space; requires finalize().
  Vec reduce(Vec v) const {
    if (!reduced_) throw std::logic_error("RowEchelon::reduce before finalize");
    std::vector<Key> hits;
    for (const auto& [k, x] : v)
      if (rows_.count(k)) hits.push_back(k);
    for (const Key& k : hits) {
      auto it = v.find(k);
      if (it == v.end()) continue;
      const Cyc c = -it->second;
      axpy(v, c, rows_.at(k));
    }
    return v;
  }

  bool contains(Vec v) const {
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) return false;
      const Cyc c = -lead->second;
      axpy(v, c, row->second);
    }
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  const std::map<Key, Vec>& rows() const { return rows_; }

private:
  std::map<Key, Vec> rows_;
  bool reduced_ = true;
};

}  // namespace qh

namespace qh {

/// Basis of {c : sum_j c_j columns[j] = 0}, each vector keyed by column index.
template <class Key>
std::vector<SparseVec<int>> nullspace(const std::vector<SparseVec<Key>>& columns, int conductor) {
  std::map<Key, int> slot;
  for (const auto& col : columns)
    for (const auto& [k, x] : col) slot.emplace(k, 0);
  int next = 0;
  for (auto& [k, i] : slot) i = next++;
  // Augment each column with a unit vector tagged (1, j); rows whose pivot
  // lands in the tagged part after elimination span the kernel.
  RowEchelon<std::pair<int, int>> ech;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVec<std::pair<int, int>> v;
    for (const auto& [k, x] : columns[j]) v.emplace(std::make_pair(0, slot.at(k)), x);
    v.emplace(std::make_pair(1, static_cast<int>(j)), Cyc::one(conductor));
    ech.insert(std::move(v));
  }
  ech.finalize();
  std::vector<SparseVec<int>> out;
  for (const auto& [pivot, row] : ech.rows()) {
    if (pivot.first != 1) continue;
    SparseVec<int> k;
    for (const auto& [key, x] : row) k.emplace(key.second, x);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace qh
