// Shared fixtures: the standard small quivers and random graded presentations.
#pragma once

#include "pathco/homology.hpp"

#include <random>
#include <vector>

namespace fixtures {

using namespace pathco;

inline Quiver loop_quiver() { return parse_quiver("vertices: 1\narrow x 1 1\n"); }
inline Quiver two_cycle() { return parse_quiver("vertices: 2\narrow x 1 2\narrow y 2 1\n"); }
inline Quiver three_cycle() { return parse_quiver("vertices: 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\n"); }
inline Quiver kronecker() { return parse_quiver("vertices: 2\narrow x 1 2\narrow y 1 2\n"); }
inline Quiver two_loops() { return parse_quiver("vertices: 1\narrow x 1 1\narrow y 1 1\n"); }
inline Quiver no_arrow() { return parse_quiver("vertices: 1\n"); }
inline Quiver no_arrow(int n) { return parse_quiver("vertices: " + std::to_string(n) + "\n"); }

inline std::vector<Quiver> cycle_quivers() { return {loop_quiver(), two_cycle(), three_cycle()}; }

inline std::vector<int> random_dims(std::mt19937_64& rng, const Quiver& q, int max_dim) {
  std::uniform_int_distribution<int> d(0, max_dim);
  std::vector<int> dims;
  for (Vertex v = 0; v < q.vertex_count(); ++v) dims.push_back(d(rng));
  return dims;
}

/// Up to two generators in degree 0 or 1 and up to three homogeneous relations
/// of length 1 or 2 with small integer coefficients.
template <class S>
GradedPresentation<S> random_presentation(const Quiver& q, std::mt19937_64& rng, int truncation) {
  const PathBasis basis(q, 4);
  std::uniform_int_distribution<int> vert(0, q.vertex_count() - 1), deg(0, 1), ngen(1, 2), nrel(0, 3), len(1, 2),
      coef(-2, 2);
  std::vector<Generator> gens;
  for (int k = ngen(rng); k > 0; --k) gens.push_back({vert(rng), deg(rng)});
  std::vector<Generator> rel;
  std::vector<std::vector<AlgebraElement<S>>> rows;
  for (int k = nrel(rng); k > 0; --k) {
    const int c0 = std::uniform_int_distribution<int>(0, static_cast<int>(gens.size()) - 1)(rng);
    const auto& starts = basis.from(gens[static_cast<std::size_t>(c0)].vertex, len(rng));
    if (starts.empty()) continue;
    const PathBasis::Id lead = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)];
    const Vertex v = basis.path(lead).target;
    const int d = gens[static_cast<std::size_t>(c0)].degree + basis.length(lead);
    std::vector<AlgebraElement<S>> row(gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
      const int l = d - gens[c].degree;
      if (l < 0) continue;
      for (PathBasis::Id p : basis.between(gens[c].vertex, v, l)) row[c].add(basis.path(p), S(coef(rng)));
    }
    row[static_cast<std::size_t>(c0)].add(basis.path(lead), S(3));
    rel.push_back({v, d});
    rows.push_back(std::move(row));
  }
  FreeMap<S> d(FreeModule(q, rel), FreeModule(q, gens));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < gens.size(); ++c) d.set_entry(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
  return {std::move(d), truncation};
}

/// S_1 (+) A e_1 at a vertex with presentation: two generators, arrows out of the first killed.
template <class S>
GradedPresentation<S> simple_plus_free(const Quiver& q, Vertex i, int truncation) {
  std::vector<Generator> rel;
  for (ArrowId a : q.arrows_from(i)) rel.push_back({q.arrow(a).target, 1});
  FreeMap<S> d(FreeModule(q, rel), FreeModule(q, {{i, 0}, {i, 0}}));
  int r = 0;
  for (ArrowId a : q.arrows_from(i)) d.set_entry(r++, 0, AlgebraElement<S>::path(Path::of_arrow(q, a)));
  return {std::move(d), truncation};
}

}  // namespace fixtures
