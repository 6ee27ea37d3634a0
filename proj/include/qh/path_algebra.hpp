#pragma once

// The graded path algebra of a covering quiver, homogeneous two-sided ideals
// and exact degreewise membership.
//
// Multiplication follows composition order: for paths p and q the product
// p * q is "first q, then p" and is nonzero only when q ends where p starts.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qh/cyclotomic.hpp"
#include "qh/linalg.hpp"
#include "qh/quiver.hpp"

namespace qh {

/// A path given by its start vertex and the arrow families in traversal order.
/// The families are packed base |W|, first arrow most significant, so the
/// natural (length, start, word) order is the lexicographic path order.
struct Path {
  int length = 0;
  int start = 0;
  std::uint64_t word = 0;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;
};

class Elem {
public:
  using Terms = std::map<Path, Cyc>;

  Elem() = default;
  explicit Elem(Terms terms);
  static Elem term(const Path& p, const Cyc& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Path& p, const Cyc& c);
  Cyc coeff(const Path& p) const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem operator-() const;
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const Cyc& c, const Elem& x);

  /// Degree of a nonzero homogeneous element, nullopt otherwise.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return degree().has_value(); }
  Elem component(int d) const;
  std::vector<int> degrees() const;

  friend bool operator==(const Elem&, const Elem&) = default;

private:
  Terms terms_;
};

/// Sparse element of A (x) A keyed by path pairs.
class Tensor {
public:
  using Key = std::pair<Path, Path>;
  using Terms = std::map<Key, Cyc>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& l, const Path& r, const Cyc& c);
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor bidegree(int i, int j) const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  Terms terms_;
};

class PathAlgebra {
public:
  PathAlgebra(CoveringQuiver quiver, int conductor);

  const CoveringQuiver& quiver() const { return quiver_; }
  int conductor() const { return conductor_; }
  int num_families() const { return quiver_.num_families(); }

  Path trivial_path(int vertex) const { return Path{0, vertex, 0}; }
  Path path(int start, const std::vector<int>& families) const;
  std::vector<int> families(const Path& p) const;
  int end(const Path& p) const;
  /// Traversal concatenation: first then second. Requires end(first) == second.start.
  Path concat(const Path& first, const Path& second) const;
  /// Sub-path of length len starting after `offset` arrows.
  Path subpath(const Path& p, int offset, int len) const;

  /// All |G| * |W|^d paths of length d in canonical order.
  std::vector<Path> paths_of_length(int d) const;
  std::size_t dim(int d) const;
  std::vector<Path> paths_starting_at(int vertex, int d) const;
  std::vector<Path> paths_ending_at(int vertex, int d) const;

  Elem vertex(int v) const;
  Elem arrow(int v, int family) const;
  Elem unit() const;
  /// Sum of all arrows of one family (the lift of a free generator).
  Elem family_sum(int family) const;
  Cyc one() const { return Cyc::one(conductor_); }
  Cyc scalar(long n) const { return Cyc::rational(conductor_, n); }

  Elem multiply(const Elem& x, const Elem& y) const;
  Elem power(const Elem& x, int k) const;
  /// Product in A (x) A, factorwise.
  Tensor multiply(const Tensor& x, const Tensor& y) const;

  std::string path_string(const Path& p) const;
  std::string to_string(const Elem& x) const;
  nlohmann::json path_json(const Path& p) const;
  nlohmann::json to_json(const Elem& x) const;
  nlohmann::json to_json(const Tensor& t) const;

private:
  CoveringQuiver quiver_;
  int conductor_;
  std::vector<std::uint64_t> radix_pow_;
};

class NotNilpotentWithinBound : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct QuotientBasis {
  std::vector<std::vector<Path>> by_degree;  // complement of I_d in A_d, degrees 0..N-1
  int nilpotency = 0;                        // least N with A_N contained in I
  int dimension = 0;
  std::vector<int> dims() const;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::string diagnostic;
  std::optional<QuotientBasis> basis;
};

/// Homogeneous two-sided ideal given by generators, with cached degreewise bases.
class GradedIdeal {
public:
  GradedIdeal(PathAlgebra algebra, std::vector<Elem> generators);

  const PathAlgebra& algebra() const { return algebra_; }
  const std::vector<Elem>& generators() const { return generators_; }
  int max_generator_degree() const;
  int min_generator_degree() const;
  /// 2 * (max generator degree) + exponent(G).
  int default_degree_bound() const;

  /// Reduced row echelon basis of I_d.
  const RowEchelon<Path>& degree_basis(int d) const;
  std::size_t degree_dim(int d) const { return degree_basis(d).rank(); }

  bool contains(const Elem& x) const;
  /// Canonical normal form modulo I, degree by degree.
  Elem reduce(const Elem& x) const;

  /// Throws NotNilpotentWithinBound when A_d is not inside I for any d <= bound.
  QuotientBasis quotient_basis(int degree_bound) const;
  AdmissibilityReport is_admissible(int degree_bound) const;

private:
  struct Piece {
    int degree;
    int start;
    int end;
    Elem elem;
  };
  struct Cache {
    std::mutex mu;
    std::map<int, std::unique_ptr<RowEchelon<Path>>> bases;
  };

  PathAlgebra algebra_;
  std::vector<Elem> generators_;
  std::vector<Piece> pieces_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace qh
