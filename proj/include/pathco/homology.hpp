// Resolutions, Ext groups, the rational (torsion) part, Hom into C and local
// cohomology of A.
//
// Everything is hereditary: resolutions have two terms and Ext vanishes in
// cohomological degree >= 2. Ext against A of a left module is a right
// module; it is computed as a left module over the opposite quiver and then
// relabelled, so the vertex of a result coordinate is its right idempotent.
#pragma once

#include "pathco/freemod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathco {

/// Stabilisation evidence for a degree-indexed family.
struct Certificate {
  bool certified = false;
  int first_stable = 0;     // degree from which the family is verified constant
  int window = 0;           // length of the verified window
  int window_required = 0;  // twice the growth period of the quiver
  std::string note;
};

/// Dimension of each (degree, vertex) piece.
struct GradedDims {
  int first_degree = 0;
  std::vector<std::vector<long>> by_degree;  // [degree - first_degree][vertex]

  int last_degree() const { return first_degree + static_cast<int>(by_degree.size()) - 1; }
  long at(int degree, Vertex v) const;
  long total(int degree) const;
  long grand_total() const;
  std::vector<long> per_vertex() const;
};

template <class S>
struct ExtReport {
  std::string source, target;
  int degree = 0;  // cohomological
  long dimension = 0;
  bool finite = true;
  std::vector<long> vertex_support;  // dimension at each vertex
  std::optional<GradedDims> graded;
  std::optional<Rep<S>> module;
  Certificate certificate;
  int truncation = 0;
};

/// 0 -> (+)_a A e_head(a) (x) M_tail(a) -> (+)_i A e_i (x) M_i -> M -> 0 for a left
/// Rep (right Reps are resolved over the opposite quiver). Generator order:
/// P_0 lists (i, r) vertex by vertex, P_1 lists (a, r) arrow by arrow.
template <class S>
FreeComplex<S> standard_resolution(const Rep<S>& m);

/// Checks that P_1/J^K -> P_0/J^K has cokernel M at every vertex, K = nil_bound.
template <class S>
bool resolution_has_cokernel(const FreeComplex<S>& c, const Rep<S>& m);

/// Cancels unit entries until every differential lies in J; homotopy equivalent.
/// Products are computed modulo paths of length >= cutoff.
template <class S>
FreeComplex<S> minimalize(FreeComplex<S> c, int cutoff);

/// rank of each module of the complex at each vertex: [k][v].
template <class S>
std::vector<std::vector<int>> betti_numbers(const FreeComplex<S>& c);

/// The cochain map Hom(P_0, N) -> Hom(P_1, N) for d : P_1 -> P_0 and a left Rep N.
/// Hom(A e_v, N) = N_v, so coordinates follow the generators in order.
template <class S>
Matrix<S> hom_into_rep(const FreeMap<S>& d, const Rep<S>& n);

/// Ext^i between finite-dimensional Reps on the same side.
template <class S>
ExtReport<S> ext_fd(const Rep<S>& m, const Rep<S>& n, int i);

/// Ext^i(M, N) from a resolution of M, as cohomology of Hom(P_., N).
template <class S>
long ext_via_resolution(const FreeComplex<S>& c, const Rep<S>& n, int i);

/// Ext^i(M, A) for finite-dimensional M via the radical filtration: the
/// groups Ext^i(M, A/J^K) for K <= N form a surjective inverse system whose
/// limit is reported. graded holds the layer dimensions in K.
template <class S>
ExtReport<S> ext_vs_algebra(const Rep<S>& m, int i, int truncation);

/// Ext^i(M, A) for a graded presentation, degreewise in the internal degree.
template <class S>
ExtReport<S> ext_vs_algebra(const GradedPresentation<S>& p, int i, int truncation);

/// Ext^i(S_v, A) with S_v simple on the given side; graded engine.
template <class S>
ExtReport<S> ext_simple_vs_algebra(const Quiver& q, Vertex v, Side side, int i, int truncation);

/// Ext^i_C(C, S_j) from the injective resolution 0 -> S_j -> e_j C -> (+) e_s(a) C
/// over arrows a into j; the result is a right comodule (right Rep).
template <class S>
ExtReport<S> ext_comodule_C(const Quiver& q, Vertex j, int i, int truncation);

/// Free resolution F_2 -> F_1 -> F_0 of a presented module; syzygy generators
/// are searched up to max_degree.
template <class S>
FreeComplex<S> graded_resolution(const GradedPresentation<S>& p, int max_degree);

/// Degree d of the presented module: F_d / R_d at each vertex.
template <class S>
struct PresentedPiece {
  std::vector<FreeCoord> coords;   // basis of F_d restricted to the vertex
  Cokernel<S> quotient;            // F_d -> M_d at the vertex
};

/// Degreewise data of a presented module for degrees in [first, last].
template <class S>
class PresentedModule {
 public:
  PresentedModule(const GradedPresentation<S>& p, int last_degree);

  int first_degree() const { return first_; }
  int last_degree() const { return last_; }
  const Quiver& quiver() const { return p_.quiver(); }
  const PathBasis& basis() const { return basis_; }
  int dim(int degree, Vertex v) const;
  const PresentedPiece<S>& piece(int degree, Vertex v) const;
  /// Action of an arrow M_{d, s(a)} -> M_{d+1, t(a)}; zero past the last degree.
  Matrix<S> action(ArrowId a, int degree) const;

 private:
  GradedPresentation<S> p_;
  int first_, last_;
  PathBasis basis_;
  std::vector<std::vector<PresentedPiece<S>>> pieces_;  // [degree - first][vertex]
};

/// One degree of the dual-resolution exactness check.
struct DualExactnessRow {
  int degree = 0;
  long module_dim = 0;
  long f0 = 0, f1 = 0, f2 = 0;
  long rank_d1 = 0, rank_d2 = 0;
  bool exact = false;
};

struct DualExactnessCheck {
  bool exact = false;
  bool composes_to_zero = false;
  int through_degree = 0;
  std::vector<DualExactnessRow> rows;
};

template <class S>
struct RationalPart {
  GradedDims module_dims;
  GradedDims torsion_dims;
  long dimension = 0;
  std::optional<Rep<S>> module;  // present when certified finite
  Certificate certificate;
  DualExactnessCheck dual_resolution;
  /// One free generator per torsion basis vector, mapped to a lift in the generators.
  std::optional<FreeMap<S>> torsion_lifts;
};

/// Elements killed by a power of J, degreewise for degrees below first + N.
template <class S>
RationalPart<S> rational_part(const GradedPresentation<S>& p, int truncation);

/// Presentation of M / Rat(M): the torsion lifts become extra relations.
template <class S>
GradedPresentation<S> modulo_rational(const GradedPresentation<S>& p, const RationalPart<S>& rat);

/// Exactness of 0 -> M_d* -> F0_d* -> F1_d* -> F2_d* -> 0 for d up to through_degree.
template <class S>
DualExactnessCheck dual_resolution_check(const GradedPresentation<S>& p, int through_degree);

template <class S>
struct HomIntoC {
  GradedDims hom_dims;     // degree s: maps sending generators of degree d into C of length s - d
  GradedDims module_dims;  // dims of the presented module, for the phi comparison
  bool phi_check = false;  // degreewise equal dims and every solution kills the relations
  int checked_through = 0;
  std::optional<Rep<S>> module;  // right Rep, present when the module is finite
};

template <class S>
HomIntoC<S> hom_into_C(const GradedPresentation<S>& p, int truncation);

template <class S>
struct LocalCohReport {
  int index = 1;
  int m_max = 0;
  int truncation = 0;
  /// dims[l](j, v): left idempotent j, right idempotent v, C-degree l.
  std::vector<Eigen::MatrixXi> dims;
  /// Smallest m from which every colimit map in degree l is an isomorphism, or -1.
  std::vector<int> stable_from;
  int certified_through = -1;
  bool stabilized = false;
  /// sigma with dims[l](j, v) = #paths j -> sigma(v) of length l.
  std::optional<std::vector<Vertex>> vertex_match;
  std::optional<VertexTwist<S>> twist;
  std::string match_source;  // which candidate matched, or "no match"
  std::string note;
};

/// H^i Gamma(A) = colim_m Ext^i(A/J^m, A) as an A-bimodule, tracked through
/// explicit colimit maps. `hint` is tried first as the vertex match.
template <class S>
LocalCohReport<S> local_cohomology(const Quiver& q, int i, int m_max, int truncation,
                                   const std::optional<std::vector<Vertex>>& hint = std::nullopt);

/// Cochain complex of finite-dimensional Reps: terms[k] sits in degree first + k,
/// differentials[k] : terms[k] -> terms[k+1].
template <class S>
struct RepComplex {
  int first_degree = 0;
  std::vector<Rep<S>> terms;
  std::vector<Morphism<S>> differentials;

  bool is_complex() const;
  /// Cohomology dimension per vertex in each degree.
  std::vector<std::vector<long>> cohomology_dims() const;
};

/// Termwise linear dual: degree k goes to -k and the side flips.
template <class S>
RepComplex<S> dualize_complex(const RepComplex<S>& c);

struct RoundtripVerdict {
  bool passed = false;
  std::string object;
  std::string detail;
};

/// G(F(X)) for finite-dimensional X is the double dual; checked by isomorphism.
template <class S>
RoundtripVerdict duality_roundtrip(const Rep<S>& x);

/// X = e_i C: F(X) is the i-th column of H^n Gamma(A); G(F(X)) uses the
/// opposite side. Passes when both columns match twisted C and return to i.
template <class S>
RoundtripVerdict duality_roundtrip_injective(const Quiver& q, Vertex i, int m_max, int truncation);

}  // namespace pathco
