// Finite quivers, their paths, and the bounded-growth gate.
//
// Composition convention: a path p = a_k ... a_1 is read right to left, so
// a_1 is traversed first. The product p*q is defined when source(p) ==
// target(q) and means "q, then p". Vertices are 0-based in memory and
// 1-based in files.
#pragma once

#include "pathco/exactlin.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathco {

using Vertex = int;
using ArrowId = int;

struct Arrow {
  std::string label;
  Vertex source = 0;
  Vertex target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Error raised while reading a text input; line is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Quiver {
 public:
  Quiver() : Quiver(1, {}) {}
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<ArrowId>& arrows_from(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<ArrowId>& arrows_into(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  std::optional<ArrowId> find_arrow(const std::string& label) const;

  /// adjacency(i, j) = number of arrows j -> i.
  Eigen::MatrixXi adjacency() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arrows_ == b.arrows_;
  }

 private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_, in_;
};

/// Same vertices, every arrow reversed, labels and arrow order kept.
Quiver opposite(const Quiver& q);

struct Path {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<ArrowId> arrows;  // traversal order: arrows.front() is applied first

  int length() const { return static_cast<int>(arrows.size()); }
  static Path trivial(Vertex v) { return {v, v, {}}; }
  static Path of_arrow(const Quiver& q, ArrowId a) { return {q.arrow(a).source, q.arrow(a).target, {a}}; }
  auto operator<=>(const Path&) const = default;
};

/// p * q ("q, then p"); requires source(p) == target(q).
Path compose(const Path& p, const Path& q);
/// The same path read in the opposite quiver.
Path reversed(const Path& p);
/// Human-readable right-to-left word such as "y*x" or "e2".
std::string to_string(const Quiver& q, const Path& p);

/// All paths of length <= max_length, each with a dense id. Trivial paths
/// come first (id == vertex), then paths in order of increasing length.
class PathBasis {
 public:
  using Id = int;
  static constexpr Id none = -1;

  PathBasis(const Quiver& q, int max_length);

  const Quiver& quiver() const { return quiver_; }
  int max_length() const { return max_length_; }
  int size() const { return static_cast<int>(paths_.size()); }
  const Path& path(Id id) const { return paths_[static_cast<std::size_t>(id)]; }
  int length(Id id) const { return path(id).length(); }
  Id trivial(Vertex v) const { return v; }
  Id find(const Path& p) const;

  /// a * p when target(p) == source(a) and the result fits, else none.
  Id extend_after(Id p, ArrowId a) const { return after_[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)]; }
  /// p * a when target(a) == source(p) and the result fits, else none.
  Id extend_before(Id p, ArrowId a) const { return before_[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)]; }
  /// p * q, or none if not composable or too long.
  Id compose(Id p, Id q) const;
  /// For a path p and 0 <= k <= |p|: (outer, inner) with p = outer * inner and |inner| = k.
  std::pair<Id, Id> split(Id p, int k) const;

  const std::vector<Id>& from(Vertex source, int length) const;
  const std::vector<Id>& into(Vertex target, int length) const;
  std::vector<Id> between(Vertex source, Vertex target, int length) const;
  /// Every path of the given length.
  const std::vector<Id>& of_length(int length) const { return by_length_.at(static_cast<std::size_t>(length)); }

 private:
  Quiver quiver_;
  int max_length_;
  std::vector<Path> paths_;
  std::map<Path, Id> index_;
  std::vector<std::vector<Id>> after_, before_;
  std::vector<std::vector<Id>> by_length_;
  std::vector<std::vector<std::vector<Id>>> from_, into_;  // [vertex][length]
  std::vector<Id> empty_;
};

/// Paths of length <= max_length; same as constructing a PathBasis.
PathBasis enumerate_paths(const Quiver& q, int max_length);

struct GrowthVerdict {
  bool bounded = false;
  /// Every weakly connected component is acyclic or one oriented cycle.
  bool artinian = false;
  // bounded case
  int period = 1;
  int preperiod = 0;
  long max_paths_per_degree = 0;  // sup over lengths of the total path count
  // unbounded case
  Vertex witness_source = 0;
  Vertex witness_target = 0;
  std::optional<Path> witness_first, witness_second;
  std::string reason;
};

GrowthVerdict growth_gate(const Quiver& q);

/// Total number of paths of each length 0..up_to, from adjacency powers.
std::vector<long> path_counts(const Quiver& q, int up_to);

struct QuiverDocument {
  Quiver quiver;
  std::optional<FieldSpec> field;
};

/// Parses the line-oriented quiver format:
///   vertices: <n>
///   arrow <label> <source> <target>
///   field: Q | F<p>
/// `#` starts a comment.
QuiverDocument parse_quiver_document(const std::string& text);
Quiver parse_quiver(const std::string& text);
QuiverDocument load_quiver_file(const std::string& path);
std::string format_quiver(const Quiver& q);

}  // namespace pathco
