// Global dimension, AS-regularity, the natural map on simples, the Nakayama
// twist and the Serre / Calabi-Yau checks built on them.
//
// Orientation: for a left simple S_i, Ext^n(S_i, A) is the right simple at
// natural(i). The Nakayama twist sigma read off local cohomology satisfies
// sigma = natural^{-1} on vertices; on the m-cycle with arrows i -> i+1 this
// gives natural(i) = i+1 and sigma(i) = i-1.
#pragma once

#include "pathco/homology.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathco {

/// A degree-indexed family did not settle within the truncation.
class StabilizationFailure : public std::runtime_error {
 public:
  StabilizationFailure(const std::string& what, int suggested_truncation)
      : std::runtime_error(what), suggested_truncation_(suggested_truncation) {}
  int suggested_truncation() const { return suggested_truncation_; }

 private:
  int suggested_truncation_;
};

/// The instance is not AS-regular, so a regular-only quantity is undefined.
class NotRegular : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 0 without arrows, 1 otherwise; cross-checked against minimal resolutions of simples.
int global_dimension(const Quiver& q);

struct ExtTableEntry {
  Vertex simple = 0;
  int degree = 0;
  long dimension = 0;
  std::vector<long> support;
  bool certified = false;
};

struct RegularityWitness {
  Vertex simple = 0;
  int degree = 0;
  long dimension = 0;
  std::string reason;
};

struct SideVerdict {
  Side side = Side::Left;
  bool as_regular = false;
  std::vector<ExtTableEntry> table;  // every simple, every degree 0..n
  std::vector<RegularityWitness> witnesses;
  /// natural[i] = j with Ext^n(S_i, A) simple at j; filled when regular.
  std::vector<Vertex> natural;
};

struct RegularityVerdict {
  bool as_regular = false;
  int gldim = 0;
  SideVerdict left, right;
  bool sides_agree = false;
  bool natural_bijective = false;
  int truncation = 0;
};

/// Throws StabilizationFailure when some Ext group is not certified.
template <class S>
RegularityVerdict as_regular_check(const Quiver& q, int truncation);

/// The vertex j with Ext^n(S_i, A) = T_j; throws NotRegular otherwise.
template <class S>
Vertex natural_map(const Quiver& q, Vertex i, Side side, int truncation);

enum class Innerness { Inner, NotInner, Undetermined };
const char* to_string(Innerness x);

template <class S>
struct InnerVerdict {
  Innerness verdict = Innerness::Undetermined;
  std::string criterion;
  /// c_v with lambda_a = c_head / c_tail for every arrow; filled when inner.
  std::vector<S> coboundary;
  /// An arrow closing a cycle with product != 1, and that cycle's arrows.
  std::optional<ArrowId> obstruction_arrow;
  std::vector<ArrowId> obstruction_cycle;
  S cycle_product = S(1);
};

/// Inner iff the vertex map is the identity and the scalars are a coboundary.
template <class S>
InnerVerdict<S> inner_test(const Quiver& q, const VertexTwist<S>& t);

template <class S>
struct NakayamaReport {
  int gldim = 0;
  std::vector<Vertex> vertex_map;  // natural map on left simples
  std::optional<VertexTwist<S>> twist;  // sigma, from local cohomology
  int order = 1;
  bool consistent = false;  // sigma == natural^{-1} on vertices
  InnerVerdict<S> inner;
  std::optional<LocalCohReport<S>> evidence;
  std::string convention;
};

/// Requires an AS-regular instance; throws NotRegular or StabilizationFailure.
template <class S>
NakayamaReport<S> nakayama(const Quiver& q, int truncation, int m_max);

struct ChiProbeEntry {
  std::string probe;   // "S_i", "e_iC" or "C"
  Vertex simple = 0;
  std::vector<long> dims;  // degree 0..n
  bool finite = false;
};

struct ChiProbeReport {
  std::vector<ChiProbeEntry> entries;
  bool all_finite = false;
};

template <class S>
ChiProbeReport chi_probe(const Quiver& q, int truncation);

template <class S>
struct SerreImage {
  Rep<S> module;
  int shift = 0;
};

/// S(X) = X twisted by sigma, shifted by n.
template <class S>
SerreImage<S> serre_twist(const Rep<S>& x, const NakayamaReport<S>& nak);

struct SerreIdentity {
  int x = 0, y = 0, degree = 0;
  long lhs = 0;  // dim Ext^i(X, Y)
  long rhs = 0;  // dim Ext^{n-i}(Y, S X)
};

struct CyVerdict {
  int dimension = 0;
  bool identities_hold = false;
  bool inner = false;
  bool calabi_yau = false;
  std::string verdict;
  std::vector<SerreIdentity> identities;
};

template <class S>
CyVerdict cy_check(const Quiver& q, const std::vector<Rep<S>>& family, const NakayamaReport<S>& nak);

struct DualizingReport {
  int shift = 0;
  std::vector<Vertex> twist_vertices;
  bool inner = false;
  std::string summary;
  int evidence_certified_through = -1;
  bool evidence_stabilized = false;
};

template <class S>
DualizingReport dualizing_report(const Quiver& q, const NakayamaReport<S>& nak);

}  // namespace pathco
