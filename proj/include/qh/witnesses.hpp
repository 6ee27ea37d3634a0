#pragma once

// Finite-dimensional Hopf algebras given by structure constants, quiver
// quotients converted to that form, and explicit morphisms between them.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qh/catalog.hpp"

namespace qh {

class HopfTableError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Vec = SparseVec<int>;
using Vec2 = std::map<std::pair<int, int>, Cyc>;

struct HopfTables {
  int conductor = 1;
  std::vector<std::string> labels;
  std::vector<int> grade;         // radical degree of each basis element
  std::vector<Vec> mult;          // mult[i * n + j] = b_i b_j
  std::vector<Vec2> delta;
  std::vector<Cyc> eps;
  std::vector<Vec> antipode;
  Vec unit;

  int dim() const { return static_cast<int>(labels.size()); }
};

/// First violated Hopf axiom on basis elements, or nullopt.
std::optional<std::string> hopf_table_violation(const HopfTables& t);

class PresentedHopfAlgebra {
public:
  /// Throws HopfTableError when a table violates an axiom.
  explicit PresentedHopfAlgebra(HopfTables tables);

  const HopfTables& tables() const { return t_; }
  int dim() const { return t_.dim(); }
  int conductor() const { return t_.conductor; }
  const std::string& label(int i) const { return t_.labels[i]; }
  std::optional<int> find(const std::string& label) const;
  Vec basis(int i) const;
  Vec basis(const std::string& label) const;

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec2 delta(const Vec& a) const;
  Cyc eps(const Vec& a) const;
  Vec antipode(const Vec& a) const;
  Vec scalar(const Cyc& c, const Vec& a) const;
  Vec add(const Vec& a, const Vec& b) const;

  std::string to_string(const Vec& a) const;
  nlohmann::json to_json(const Vec& a) const;

private:
  HopfTables t_;
};

namespace detail {
Vec mult_vec(const HopfTables& t, const Vec& a, const Vec& b);
Vec2 mult_vec2(const HopfTables& t, const Vec2& a, const Vec2& b);
}  // namespace detail

/// h(q, m): basis y^a x^b g^c with 0 <= a, b, c < n, q a primitive n-th root, gcd(m, n) = 1.
PresentedHopfAlgebra book_algebra(int n, const Cyc& q, int m);
/// T_{n^2}(q) on generators named (x, g) by default.
PresentedHopfAlgebra taft(int n, const Cyc& q, const std::string& x = "x", const std::string& g = "g");
PresentedHopfAlgebra tensor_hopf(const PresentedHopfAlgebra& a, const PresentedHopfAlgebra& b);
/// The one-dimensional Hopf algebra k.
PresentedHopfAlgebra ground_algebra(int conductor);

/// A quiver quotient kQ/I together with its structure-constant form.
struct QuiverQuotient {
  std::shared_ptr<const HopfStructure> hopf;
  std::shared_ptr<const GradedIdeal> ideal;
  std::vector<Path> basis;
  std::shared_ptr<const PresentedHopfAlgebra> algebra;

  int index_of(const Path& p) const;
  /// Coordinates of the normal form of x.
  Vec coords(const Elem& x) const;
};

/// Throws CatalogError if I is not a Hopf ideal (within the default bound).
QuiverQuotient quiver_quotient(std::shared_ptr<const HopfStructure> hopf, std::shared_ptr<const GradedIdeal> ideal);

struct HopfMorphism {
  std::shared_ptr<const PresentedHopfAlgebra> domain;
  std::shared_ptr<const PresentedHopfAlgebra> codomain;
  std::vector<Vec> columns;  // image of each domain basis element
  std::vector<std::string> extension_failures;

  Vec apply(const Vec& x) const;
  Vec2 apply2(const Vec2& x) const;
  nlohmann::json to_json() const;
};

/// Extends vertex and arrow images multiplicatively to the quotient basis and
/// records every relation that is not sent to zero.
HopfMorphism extend_from_quiver(const QuiverQuotient& dom, std::shared_ptr<const PresentedHopfAlgebra> cod,
                                const std::vector<Vec>& vertex_images,
                                const std::vector<std::vector<Vec>>& arrow_images /* [family][vertex] */);

/// kZ2/(X^2, Y^2, XY+YX) -> h(-1, 1).
HopfMorphism phi_book();
/// kZ2xZ2/(X^2, Y^2, XY-YX) -> T_4(-1) (x) T_4(-1).
HopfMorphism phi_taft();

struct IsoReport {
  bool ok = false;
  std::string failed_check;  // empty when ok
  nlohmann::json witness;
  int domain_dim = 0;
  int codomain_dim = 0;
  nlohmann::json to_json() const;
};

IsoReport verify_hopf_iso(const HopfMorphism& phi);

}  // namespace qh
