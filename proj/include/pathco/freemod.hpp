// Free left modules over the completed path algebra A and maps between them.
//
// A generator g = (v, d) spans A e_v with e_v placed in degree d; its
// degree-k piece has basis y*g for paths y with source v and |y| = k - d.
// A map is stored row by row: the image of source generator r is
// sum_c x_rc h_c with x_rc in e_{v_r} A e_{w_c}, a combination of paths
// w_c -> v_r. Composition multiplies entries as x_rc * y_ce.
#pragma once

#include "pathco/repmod.hpp"

#include <vector>

namespace pathco {

struct Generator {
  Vertex vertex = 0;
  int degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// One coordinate of a free module: the element path * generator.
struct FreeCoord {
  int generator = 0;
  PathBasis::Id path = 0;
};

class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(Quiver q, std::vector<Generator> gens);

  const Quiver& quiver() const { return quiver_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(int k) const { return gens_[static_cast<std::size_t>(k)]; }
  int max_degree() const;
  int min_degree() const;
  /// Number of generators sitting at each vertex.
  std::vector<int> rank_per_vertex() const;

  /// Basis of the degree-d piece; the vertex of a coordinate is the target of its path.
  std::vector<FreeCoord> graded_basis(int degree, const PathBasis& basis) const;
  /// Basis of F / J^K F: coordinates with |path| < K.
  std::vector<FreeCoord> truncated_basis(int cutoff, const PathBasis& basis) const;

  /// Hom(F, A) as a free left module over the opposite quiver, degrees negated.
  FreeModule dual() const;

 private:
  Quiver quiver_;
  std::vector<Generator> gens_;
};

template <class S>
using AlgebraElement = DualElement<S>;

template <class S>
class FreeMap {
 public:
  FreeMap() = default;
  /// Zero map.
  FreeMap(FreeModule source, FreeModule target);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const AlgebraElement<S>& entry(int r, int c) const {
    return entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  /// Checks that every path runs from target generator c to source generator r.
  void set_entry(int r, int c, AlgebraElement<S> x);

  /// Every entry is homogeneous of degree deg(source r) - deg(target c).
  bool is_homogeneous() const;
  /// No entry has a nonzero trivial-path coefficient.
  bool is_radical() const;

  /// Apply Hom(-, A): the transposed map between duals over the opposite quiver.
  FreeMap dual() const;
  /// this, then next.
  FreeMap then(const FreeMap& next, int cutoff) const;

  /// Degree-d piece as a matrix (rows: target coordinates, cols: source coordinates).
  Matrix<S> graded_matrix(int degree, const PathBasis& basis) const;
  /// The induced map F/J^K F -> G/J^K G.
  Matrix<S> truncated_matrix(int cutoff, const PathBasis& basis) const;

  /// Matrix of the map between arbitrary coordinate lists; image terms outside
  /// `tgt` are dropped, which realises quotients by J^K or degree pieces.
  Matrix<S> matrix_between(const std::vector<FreeCoord>& src, const std::vector<FreeCoord>& tgt,
                           const PathBasis& basis) const;

 private:
  FreeModule source_, target_;
  std::vector<std::vector<AlgebraElement<S>>> entries_;
};

/// A bounded chain complex of free modules: maps[k] : modules[k+1] -> modules[k].
template <class S>
struct FreeComplex {
  std::vector<FreeModule> modules;
  std::vector<FreeMap<S>> maps;

  int length() const { return static_cast<int>(maps.size()); }
  /// Composites of consecutive maps vanish modulo paths of length >= cutoff.
  bool is_complex(int cutoff) const;
};

/// M = coker(relations: R -> F) for a left module over A, entries homogeneous.
template <class S>
struct GradedPresentation {
  FreeMap<S> relations;
  int truncation = 0;

  const Quiver& quiver() const { return relations.target().quiver(); }
  const FreeModule& generators() const { return relations.target(); }
};

/// One generator at vertex i, no relations.
template <class S>
GradedPresentation<S> truncated_free(const Quiver& q, Vertex i, int truncation);

/// Simple at vertex i: A e_i modulo the arrows leaving i.
template <class S>
GradedPresentation<S> simple_presentation(const Quiver& q, Vertex i, int truncation);

}  // namespace pathco
