#include "qh/path_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qh {

// ---------------------------------------------------------------- Elem

Elem::Elem(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

Elem Elem::term(const Path& p, const Cyc& c) {
  Elem e;
  e.add(p, c);
  return e;
}

void Elem::add(const Path& p, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyc Elem::coeff(const Path& p) const {
  auto it = terms_.find(p);
  if (it != terms_.end()) return it->second;
  if (!terms_.empty()) return Cyc::zero(terms_.begin()->second.conductor());
  return Cyc();
}

Elem& Elem::operator+=(const Elem& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

Elem Elem::operator-() const {
  Elem r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

Elem operator*(const Cyc& c, const Elem& x) {
  Elem r;
  if (c.is_zero()) return r;
  for (const auto& [p, v] : x.terms_) r.terms_.emplace(p, c * v);
  return r;
}

std::optional<int> Elem::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.length;
  if (terms_.rbegin()->first.length != d) return std::nullopt;
  return d;
}

Elem Elem::component(int d) const {
  Elem r;
  for (const auto& [p, c] : terms_)
    if (p.length == d) r.terms_.emplace(p, c);
  return r;
}

std::vector<int> Elem::degrees() const {
  std::vector<int> out;
  for (const auto& [p, c] : terms_)
    if (out.empty() || out.back() != p.length) out.push_back(p.length);
  return out;
}

// ---------------------------------------------------------------- Tensor

void Tensor::add(const Path& l, const Path& r, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

Tensor Tensor::bidegree(int i, int j) const {
  Tensor t;
  for (const auto& [k, c] : terms_)
    if (k.first.length == i && k.second.length == j) t.terms_.emplace(k, c);
  return t;
}

// ---------------------------------------------------------------- PathAlgebra

namespace {
constexpr int kMaxPathLength = 62;
}

PathAlgebra::PathAlgebra(CoveringQuiver quiver, int conductor)
    : quiver_(std::move(quiver)), conductor_(conductor) {
  if (conductor_ < 1) throw CycError("conductor must be positive");
  const std::uint64_t k = std::max(1, quiver_.num_families());
  radix_pow_.push_back(1);
  for (int i = 1; i <= kMaxPathLength; ++i) {
    if (k > 1 && radix_pow_.back() > (std::uint64_t(1) << 62) / k) break;
    radix_pow_.push_back(radix_pow_.back() * k);
  }
}

Path PathAlgebra::path(int start, const std::vector<int>& fams) const {
  if (start < 0 || start >= quiver_.num_vertices()) throw QuiverError("vertex out of range");
  if (fams.size() >= radix_pow_.size()) throw QuiverError("path too long");
  Path p{static_cast<int>(fams.size()), start, 0};
  for (int f : fams) {
    if (f < 0 || f >= num_families()) throw QuiverError("arrow family out of range");
    p.word = p.word * num_families() + static_cast<std::uint64_t>(f);
  }
  return p;
}

std::vector<int> PathAlgebra::families(const Path& p) const {
  std::vector<int> out(p.length);
  std::uint64_t w = p.word;
  const std::uint64_t k = num_families();
  for (int i = p.length - 1; i >= 0; --i) {
    out[i] = static_cast<int>(w % k);
    w /= k;
  }
  return out;
}

int PathAlgebra::end(const Path& p) const {
  int v = p.start;
  if (p.length == 0) return v;
  std::uint64_t w = p.word;
  const std::uint64_t k = num_families();
  for (int i = 0; i < p.length; ++i) {
    v = quiver_.step(v, static_cast<int>(w % k));
    w /= k;
  }
  return v;
}

Path PathAlgebra::concat(const Path& first, const Path& second) const {
  const int len = first.length + second.length;
  if (len >= static_cast<int>(radix_pow_.size())) throw QuiverError("path too long");
  return Path{len, first.start, first.word * radix_pow_[second.length] + second.word};
}

Path PathAlgebra::subpath(const Path& p, int offset, int len) const {
  const auto fams = families(p);
  int v = p.start;
  for (int i = 0; i < offset; ++i) v = quiver_.step(v, fams[i]);
  return path(v, std::vector<int>(fams.begin() + offset, fams.begin() + offset + len));
}

std::size_t PathAlgebra::dim(int d) const {
  if (d == 0) return quiver_.num_vertices();
  if (num_families() == 0) return 0;
  if (d >= static_cast<int>(radix_pow_.size())) throw QuiverError("degree too large");
  return quiver_.num_vertices() * radix_pow_[d];
}

std::vector<Path> PathAlgebra::paths_of_length(int d) const {
  std::vector<Path> out;
  if (d < 0) return out;
  if (d > 0 && num_families() == 0) return out;
  if (d >= static_cast<int>(radix_pow_.size())) throw QuiverError("degree too large");
  out.reserve(dim(d));
  for (int s = 0; s < quiver_.num_vertices(); ++s)
    for (std::uint64_t w = 0; w < radix_pow_[d]; ++w) out.push_back(Path{d, s, w});
  return out;
}

std::vector<Path> PathAlgebra::paths_starting_at(int v, int d) const {
  std::vector<Path> out;
  if (d > 0 && num_families() == 0) return out;
  if (d >= static_cast<int>(radix_pow_.size())) throw QuiverError("degree too large");
  for (std::uint64_t w = 0; w < radix_pow_[d]; ++w) out.push_back(Path{d, v, w});
  return out;
}

std::vector<Path> PathAlgebra::paths_ending_at(int v, int d) const {
  std::vector<Path> out;
  if (d > 0 && num_families() == 0) return out;
  if (d >= static_cast<int>(radix_pow_.size())) throw QuiverError("degree too large");
  const std::uint64_t k = num_families();
  for (std::uint64_t w = 0; w < radix_pow_[d]; ++w) {
    int s = v;
    std::uint64_t rest = w;
    for (int i = 0; i < d; ++i) {
      s = quiver_.step_back(s, static_cast<int>(rest % k));
      rest /= k;
    }
    out.push_back(Path{d, s, w});
  }
  return out;
}

Elem PathAlgebra::vertex(int v) const { return Elem::term(trivial_path(v), one()); }

Elem PathAlgebra::arrow(int v, int family) const { return Elem::term(path(v, {family}), one()); }

Elem PathAlgebra::unit() const {
  Elem e;
  for (int v = 0; v < quiver_.num_vertices(); ++v) e.add(trivial_path(v), one());
  return e;
}

Elem PathAlgebra::family_sum(int family) const {
  Elem e;
  for (int v = 0; v < quiver_.num_vertices(); ++v) e.add(path(v, {family}), one());
  return e;
}

Elem PathAlgebra::multiply(const Elem& x, const Elem& y) const {
  // x * y = first y, then x.
  std::multimap<int, std::pair<Path, const Cyc*>> by_start;
  for (const auto& [p, c] : x.terms()) by_start.emplace(p.start, std::make_pair(p, &c));
  Elem out;
  for (const auto& [q, cq] : y.terms()) {
    auto [lo, hi] = by_start.equal_range(end(q));
    for (auto it = lo; it != hi; ++it) out.add(concat(q, it->second.first), cq * *it->second.second);
  }
  return out;
}

Elem PathAlgebra::power(const Elem& x, int k) const {
  Elem r = unit();
  for (int i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

Tensor PathAlgebra::multiply(const Tensor& x, const Tensor& y) const {
  std::multimap<std::pair<int, int>, std::pair<const Tensor::Key*, const Cyc*>> by_start;
  for (const auto& [k, c] : x.terms()) by_start.emplace(std::make_pair(k.first.start, k.second.start), std::make_pair(&k, &c));
  Tensor out;
  for (const auto& [k, c] : y.terms()) {
    auto [lo, hi] = by_start.equal_range({end(k.first), end(k.second)});
    for (auto it = lo; it != hi; ++it) {
      const auto& xk = *it->second.first;
      out.add(concat(k.first, xk.first), concat(k.second, xk.second), c * *it->second.second);
    }
  }
  return out;
}

std::string PathAlgebra::path_string(const Path& p) const {
  std::string s = quiver_.vertex_label(p.start);
  for (int f : families(p)) s += "a" + std::to_string(f + 1);
  return s;
}

std::string PathAlgebra::to_string(const Elem& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [p, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + path_string(p);
  }
  return s;
}

nlohmann::json PathAlgebra::path_json(const Path& p) const {
  return nlohmann::json::array({quiver_.group().element(p.start).exps, families(p)});
}

nlohmann::json PathAlgebra::to_json(const Elem& x) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, c] : x.terms()) out.push_back({{"path", path_json(p)}, {"coeff", c.to_json()}});
  return out;
}

nlohmann::json PathAlgebra::to_json(const Tensor& t) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back({{"left", path_json(k.first)}, {"right", path_json(k.second)}, {"coeff", c.to_json()}});
  return out;
}

// ---------------------------------------------------------------- ideals

std::vector<int> QuotientBasis::dims() const {
  std::vector<int> out;
  for (const auto& b : by_degree) out.push_back(static_cast<int>(b.size()));
  return out;
}

GradedIdeal::GradedIdeal(PathAlgebra algebra, std::vector<Elem> generators)
    : algebra_(std::move(algebra)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
    generators_.push_back(std::move(g));
  }
  // Split every generator into its e_t r e_s pieces; they span the same ideal
  // and each piece lives in a single (start, end) block.
  for (const auto& g : generators_) {
    std::map<std::pair<int, int>, Elem> split;
    for (const auto& [p, c] : g.terms()) split[{p.start, algebra_.end(p)}].add(p, c);
    for (auto& [se, e] : split) pieces_.push_back(Piece{*g.degree(), se.first, se.second, std::move(e)});
  }
}

int GradedIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, *g.degree());
  return d;
}

int GradedIdeal::min_generator_degree() const {
  if (generators_.empty()) return 0;
  int d = *generators_.front().degree();
  for (const auto& g : generators_) d = std::min(d, *g.degree());
  return d;
}

int GradedIdeal::default_degree_bound() const {
  return 2 * max_generator_degree() + algebra_.quiver().group().exponent();
}

const RowEchelon<Path>& GradedIdeal::degree_basis(int d) const {
  std::lock_guard lock(cache_->mu);
  if (auto it = cache_->bases.find(d); it != cache_->bases.end()) return *it->second;

  auto basis = std::make_unique<RowEchelon<Path>>();
  std::set<Path> monomials;
  for (const auto& piece : pieces_) {
    if (piece.degree > d) continue;
    const int free = d - piece.degree;
    for (int i = 0; i <= free; ++i) {
      const int j = free - i;
      const auto prefixes = algebra_.paths_ending_at(piece.start, i);
      const auto suffixes = algebra_.paths_starting_at(piece.end, j);
      for (const auto& pre : prefixes) {
        for (const auto& suf : suffixes) {
          SparseVec<Path> v;
          for (const auto& [p, c] : piece.elem.terms())
            v.emplace(algebra_.concat(algebra_.concat(pre, p), suf), c);
          if (v.size() == 1 && !monomials.insert(v.begin()->first).second) continue;
          basis->insert(std::move(v));
        }
      }
    }
  }
  basis->finalize();
  auto& slot = cache_->bases[d];
  slot = std::move(basis);
  return *slot;
}

bool GradedIdeal::contains(const Elem& x) const {
  for (int d : x.degrees()) {
    const auto comp = x.component(d);
    if (!degree_basis(d).contains(SparseVec<Path>(comp.terms().begin(), comp.terms().end()))) return false;
  }
  return true;
}

Elem GradedIdeal::reduce(const Elem& x) const {
  Elem out;
  for (int d : x.degrees()) {
    const auto comp = x.component(d);
    auto r = degree_basis(d).reduce(SparseVec<Path>(comp.terms().begin(), comp.terms().end()));
    out += Elem(Elem::Terms(r.begin(), r.end()));
  }
  return out;
}

QuotientBasis GradedIdeal::quotient_basis(int degree_bound) const {
  QuotientBasis qb;
  for (int d = 0; d <= degree_bound; ++d) {
    const auto& basis = degree_basis(d);
    if (basis.rank() == algebra_.dim(d)) {
      qb.nilpotency = d;
      return qb;
    }
    std::vector<Path> complement;
    for (const auto& p : algebra_.paths_of_length(d))
      if (!basis.is_pivot(p)) complement.push_back(p);
    qb.dimension += static_cast<int>(complement.size());
    qb.by_degree.push_back(std::move(complement));
  }
  throw NotNilpotentWithinBound("arrow ideal power not contained in the ideal up to degree " +
                                std::to_string(degree_bound));
}

AdmissibilityReport GradedIdeal::is_admissible(int degree_bound) const {
  AdmissibilityReport rep;
  if (generators_.empty()) {
    rep.diagnostic = "zero ideal";
    return rep;
  }
  if (min_generator_degree() < 2) {
    rep.diagnostic = "generator of degree " + std::to_string(min_generator_degree()) + " is not in J^2";
    return rep;
  }
  try {
    rep.basis = quotient_basis(degree_bound);
    rep.admissible = true;
  } catch (const NotNilpotentWithinBound& e) {
    rep.diagnostic = e.what();
  }
  return rep;
}

}  // namespace qh
