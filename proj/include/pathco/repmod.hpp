// Finite-dimensional nilpotent representations with a side flag.
//
// A left Rep is a left A-module (= right C-comodule): arrow a: i -> j acts
// M_i -> M_j by a dim(j) x dim(i) matrix. A right Rep is a right A-module
// (= left C-comodule): a: i -> j acts M_j -> M_i. A right Rep over Q holds
// exactly the data of a left Rep over the opposite quiver.
#pragma once

#include "pathco/pathcoalg.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathco {

enum class Side { Left, Right };
inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// Raised when some path acts invertibly, so the data is not a comodule.
class NotNilpotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
class Rep {
 public:
  /// Validates shapes and computes nil_bound; throws NotNilpotent.
  Rep(Quiver q, Side side, std::vector<int> dims, std::vector<Matrix<S>> maps);
  static Rep zero(const Quiver& q, Side side);

  const Quiver& quiver() const { return quiver_; }
  Side side() const { return side_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(Vertex v) const { return dims_[static_cast<std::size_t>(v)]; }
  int total_dim() const { return total_; }
  /// Start of the fiber at v inside the concatenation of all fibers.
  int offset(Vertex v) const { return offsets_[static_cast<std::size_t>(v)]; }
  const Matrix<S>& map(ArrowId a) const { return maps_[static_cast<std::size_t>(a)]; }
  const std::vector<Matrix<S>>& maps() const { return maps_; }
  /// Smallest L such that every path of length >= L acts by zero.
  int nil_bound() const { return nil_bound_; }

  /// Vertex whose fiber the arrow acts on, and the vertex it lands in.
  Vertex tail(ArrowId a) const;
  Vertex head(ArrowId a) const;
  Vertex tail(const Path& p) const { return side_ == Side::Left ? p.source : p.target; }
  Vertex head(const Path& p) const { return side_ == Side::Left ? p.target : p.source; }
  /// Action of a path from the fiber at tail(p) to the fiber at head(p).
  Matrix<S> path_action(const Path& p) const;

  /// The same data as a left Rep over the quiver the arrows act along
  /// (the quiver itself for left Reps, its opposite for right Reps).
  Rep as_left() const;

 private:
  Quiver quiver_;
  Side side_;
  std::vector<int> dims_, offsets_;
  std::vector<Matrix<S>> maps_;
  int total_ = 0;
  int nil_bound_ = 0;
};

/// A morphism is one block per vertex: dim_N(v) x dim_M(v).
template <class S>
using Morphism = std::vector<Matrix<S>>;

template <class S>
bool is_morphism(const Rep<S>& m, const Rep<S>& n, const Morphism<S>& f);

template <class S>
Rep<S> rep_from_matrices(const Quiver& q, std::vector<int> dims, std::vector<Matrix<S>> maps, Side side) {
  return Rep<S>(q, side, std::move(dims), std::move(maps));
}

template <class S>
Rep<S> simple(const Quiver& q, Vertex i, Side side);

/// Degree <= N part of the injective envelope of simple(i): on the left side
/// its basis is p* for paths p ending at i, placed at source(p), with
/// a . p* = x* when p = x*a.
template <class S>
Rep<S> truncated_injective(const Quiver& q, Vertex i, int max_length, Side side);

/// A e_i / J^{N+1} on the left side (e_i A / J^{N+1} on the right).
template <class S>
Rep<S> truncated_projective(const Quiver& q, Vertex i, int max_length, Side side);

/// The linear system whose kernel is Hom(M, N); unknowns are the blocks f_v
/// stored column-major one vertex after another.
template <class S>
Matrix<S> hom_system(const Rep<S>& m, const Rep<S>& n);
template <class S>
std::vector<Morphism<S>> hom_space(const Rep<S>& m, const Rep<S>& n);
template <class S>
int hom_dimension(const Rep<S>& m, const Rep<S>& n);

/// Fiberwise dual; the side flips and every arrow matrix is transposed.
template <class S>
Rep<S> linear_dual(const Rep<S>& m);

/// A quiver automorphism up to arrow scalars: a acts through lambda_a times
/// the arrow arrow_map[a], which runs vertex_map[s(a)] -> vertex_map[t(a)].
template <class S>
struct VertexTwist {
  std::vector<Vertex> vertex_map;
  std::vector<ArrowId> arrow_map;
  std::vector<S> scalars;

  static VertexTwist identity(const Quiver& q);
  /// Throws std::invalid_argument when the data is not a twist of q.
  void validate(const Quiver& q) const;
  VertexTwist inverse() const;
  /// this after other: vertices map v -> vertex_map[other.vertex_map[v]].
  VertexTwist after(const VertexTwist& other) const;
  bool is_identity_on_vertices() const;
  /// Order of the vertex permutation.
  int vertex_order() const;
  friend bool operator==(const VertexTwist&, const VertexTwist&) = default;
};

/// Pullback along t: (M^t)_v = M_{t(v)} and a acts by lambda_a M_{t(a)}.
/// In particular simple(i)^t = simple(t^{-1}(i)).
template <class S>
Rep<S> twist(const Rep<S>& m, const VertexTwist<S>& t);

template <class S>
Rep<S> direct_sum(const Rep<S>& a, const Rep<S>& b);

/// Subspace per vertex given by basis columns; must be stable under the action.
template <class S>
Rep<S> subrep(const Rep<S>& m, const std::vector<Matrix<S>>& basis);
/// Quotient by a stable subspace given by spanning columns per vertex.
template <class S>
Rep<S> quotient(const Rep<S>& m, const std::vector<Matrix<S>>& span);

/// Equal dimension vectors and an invertible morphism. Random linear
/// combinations of a hom basis are tested; a nonzero determinant polynomial
/// of degree d vanishes at a random point with probability <= d / range.
template <class S>
bool is_isomorphic(const Rep<S>& m, const Rep<S>& n, std::uint64_t seed = 0x5eed);

/// Random nilpotent Rep with the given dimension vector: basis vectors get
/// levels, arrows only raise the level, then each fiber is rebased.
template <class S>
Rep<S> random_nilpotent_rep(const Quiver& q, const std::vector<int>& dims, std::mt19937_64& rng, Side side = Side::Left,
                            int density_percent = 60);

/// Text literal:
///   side: left|right        (optional, default left)
///   dims: d_1 ... d_n
///   map <label>             followed by dim(head) rows of dim(tail) scalars
/// Missing maps are zero; `#` starts a comment.
template <class S>
Rep<S> parse_rep(const Quiver& q, const std::string& text);
template <class S>
std::string format_rep(const Rep<S>& m);

}  // namespace pathco
