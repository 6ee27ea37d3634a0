#pragma once

// Independent helpers for tests: a complex embedding of Q(zeta_L) and dense
// rational Gaussian elimination. Nothing here calls into the row echelon code.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "qh/cyclotomic.hpp"

namespace oracle {

inline std::complex<double> embed(const qh::Cyc& x) {
  const double pi = std::acos(-1.0);
  const int L = x.conductor();
  std::complex<double> z = std::polar(1.0, 2 * pi / L), acc = 0, pw = 1;
  for (const auto& c : x.coeffs()) {
    acc += c.get_d() * pw;
    pw *= z;
  }
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline int rank(std::vector<std::vector<mpq_class>> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (int k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Words over {0, 1} of length d, as vectors of letters.
inline std::vector<std::vector<int>> words(int d) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < d; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int a : {0, 1}) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

/// dim of the degree-d part of Q<x0,x1>/(relations) for homogeneous rational
/// relations given as maps word -> coefficient, by spanning u r v explicitly.
inline int free_quotient_dim(const std::vector<std::map<std::vector<int>, mpq_class>>& rels, int d) {
  const auto ws = words(d);
  std::map<std::vector<int>, int> col;
  for (std::size_t i = 0; i < ws.size(); ++i) col[ws[i]] = static_cast<int>(i);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& r : rels) {
    const int rd = static_cast<int>(r.begin()->first.size());
    if (rd > d) continue;
    for (int pre = 0; pre <= d - rd; ++pre)
      for (const auto& u : words(pre))
        for (const auto& v : words(d - rd - pre)) {
          std::vector<mpq_class> row(ws.size());
          for (const auto& [w, c] : r) {
            auto full = u;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), v.begin(), v.end());
            row[col[full]] += c;
          }
          rows.push_back(row);
        }
  }
  return static_cast<int>(ws.size()) - rank(rows);
}

}  // namespace oracle
