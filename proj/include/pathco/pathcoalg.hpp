// The path coalgebra C = kQ and its truncated dual algebra A = C*.
//
// C has the paths of Q as basis, Delta(p) = sum over p = p2*p1 of p2 (x) p1
// and counit supported on trivial paths. A is the completed path algebra:
// the dual basis element p* multiplies as p* q* = (p*q)*, so an element of
// A is stored as a finitely supported family of coefficients on paths.
// Everything is truncated at a path length N fixed by the caller.
#pragma once

#include "pathco/quiver.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pathco {

class PathCoalgebra {
 public:
  PathCoalgebra(const Quiver& q, int truncation) : basis_(q, truncation) {}

  const Quiver& quiver() const { return basis_.quiver(); }
  int truncation() const { return basis_.max_length(); }
  const PathBasis& basis() const { return basis_; }

  /// All (outer, inner) with p = outer * inner; |p| + 1 pairs, inner length increasing.
  std::vector<std::pair<PathBasis::Id, PathBasis::Id>> comultiply(PathBasis::Id p) const;
  int counit(PathBasis::Id p) const { return basis_.length(p) == 0 ? 1 : 0; }

 private:
  PathBasis basis_;
};

/// Element of the truncated dual algebra: coefficient of each dual basis p*.
/// Zero coefficients are never stored.
template <class S>
class DualElement {
 public:
  using Terms = std::map<Path, S>;

  DualElement() = default;
  static DualElement path(const Path& p, S c = S(1)) {
    DualElement e;
    e.add(p, c);
    return e;
  }
  static DualElement idempotent(Vertex v) { return path(Path::trivial(v)); }
  /// The unit: sum of all vertex idempotents.
  static DualElement unit(const Quiver& q) {
    DualElement e;
    for (Vertex v = 0; v < q.vertex_count(); ++v) e.add(Path::trivial(v), S(1));
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  S coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? S(0) : it->second;
  }
  /// Evaluation of the functional on a basis path.
  S operator()(const Path& p) const { return coefficient(p); }

  void add(const Path& p, const S& c) {
    if (c == S(0)) return;
    auto [it, fresh] = terms_.emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second == S(0)) terms_.erase(it);
    }
  }
  /// Lowest path length carrying a nonzero coefficient, or -1 for zero.
  int order() const {
    int best = -1;
    for (const auto& [p, c] : terms_)
      if (best < 0 || p.length() < best) best = p.length();
    return best;
  }
  /// Drops every term of length >= cutoff.
  DualElement truncated(int cutoff) const {
    DualElement e;
    for (const auto& [p, c] : terms_)
      if (p.length() < cutoff) e.terms_.emplace(p, c);
    return e;
  }

  DualElement& operator+=(const DualElement& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  DualElement& operator-=(const DualElement& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
  }
  friend DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
  friend DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
  friend DualElement operator*(const S& s, DualElement a) {
    if (s == S(0)) return {};
    for (auto& [p, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const DualElement& a, const DualElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// (f*g)(p) = sum over p = p2*p1 of f(p2) g(p1), for every |p| <= max_length.
template <class S>
DualElement<S> convolve(const DualElement<S>& f, const DualElement<S>& g, int max_length) {
  DualElement<S> out;
  for (const auto& [p2, a] : f.terms())
    for (const auto& [p1, b] : g.terms())
      if (p2.source == p1.target && p2.length() + p1.length() <= max_length) out.add(compose(p2, p1), a * b);
  return out;
}

/// The same functional viewed in the dual algebra of the opposite quiver.
template <class S>
DualElement<S> reversed(const DualElement<S>& f) {
  DualElement<S> out;
  for (const auto& [p, c] : f.terms()) out.add(reversed(p), c);
  return out;
}

/// Dual basis of J^m in degrees <= N: every path of length m..N.
std::vector<Path> radical_power_basis(const Quiver& q, int m, int max_length);

/// D[l](i, j) = number of paths j -> i of length l, for l = 0..up_to.
std::vector<Eigen::MatrixXi> bigraded_dims(const Quiver& q, int up_to);

}  // namespace pathco
