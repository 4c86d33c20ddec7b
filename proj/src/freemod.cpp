#include "pathco/freemod.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pathco {

FreeModule::FreeModule(Quiver q, std::vector<Generator> gens) : quiver_(std::move(q)), gens_(std::move(gens)) {
  for (const Generator& g : gens_)
    if (g.vertex < 0 || g.vertex >= quiver_.vertex_count()) throw std::invalid_argument("generator vertex out of range");
}

int FreeModule::max_degree() const {
  int d = 0;
  for (std::size_t k = 0; k < gens_.size(); ++k) d = k == 0 ? gens_[k].degree : std::max(d, gens_[k].degree);
  return d;
}

int FreeModule::min_degree() const {
  int d = 0;
  for (std::size_t k = 0; k < gens_.size(); ++k) d = k == 0 ? gens_[k].degree : std::min(d, gens_[k].degree);
  return d;
}

std::vector<int> FreeModule::rank_per_vertex() const {
  std::vector<int> out(static_cast<std::size_t>(quiver_.vertex_count()), 0);
  for (const Generator& g : gens_) ++out[static_cast<std::size_t>(g.vertex)];
  return out;
}

std::vector<FreeCoord> FreeModule::graded_basis(int degree, const PathBasis& basis) const {
  std::vector<FreeCoord> out;
  for (int k = 0; k < rank(); ++k) {
    const int len = degree - gens_[static_cast<std::size_t>(k)].degree;
    if (len < 0) continue;
    if (len > basis.max_length()) throw std::out_of_range("degree beyond the path basis");
    for (PathBasis::Id y : basis.from(gens_[static_cast<std::size_t>(k)].vertex, len)) out.push_back({k, y});
  }
  return out;
}

std::vector<FreeCoord> FreeModule::truncated_basis(int cutoff, const PathBasis& basis) const {
  if (cutoff - 1 > basis.max_length()) throw std::out_of_range("cutoff beyond the path basis");
  std::vector<FreeCoord> out;
  for (int k = 0; k < rank(); ++k)
    for (int len = 0; len < cutoff; ++len)
      for (PathBasis::Id y : basis.from(gens_[static_cast<std::size_t>(k)].vertex, len)) out.push_back({k, y});
  return out;
}

FreeModule FreeModule::dual() const {
  std::vector<Generator> gens;
  gens.reserve(gens_.size());
  for (const Generator& g : gens_) gens.push_back({g.vertex, -g.degree});
  return FreeModule(opposite(quiver_), std::move(gens));
}

template <class S>
FreeMap<S>::FreeMap(FreeModule source, FreeModule target)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(static_cast<std::size_t>(source_.rank()),
               std::vector<AlgebraElement<S>>(static_cast<std::size_t>(target_.rank()))) {
  if (!(source_.quiver() == target_.quiver())) throw std::invalid_argument("free modules over different quivers");
}

template <class S>
void FreeMap<S>::set_entry(int r, int c, AlgebraElement<S> x) {
  const Vertex vr = source_.generator(r).vertex, wc = target_.generator(c).vertex;
  for (const auto& [p, coef] : x.terms())
    if (p.source != wc || p.target != vr) throw std::invalid_argument("entry path does not run between the generators");
  entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = std::move(x);
}

template <class S>
bool FreeMap<S>::is_homogeneous() const {
  for (int r = 0; r < source_.rank(); ++r)
    for (int c = 0; c < target_.rank(); ++c) {
      const int shift = source_.generator(r).degree - target_.generator(c).degree;
      for (const auto& [p, coef] : entry(r, c).terms())
        if (p.length() != shift) return false;
    }
  return true;
}

template <class S>
bool FreeMap<S>::is_radical() const {
  for (const auto& row : entries_)
    for (const auto& x : row)
      if (x.order() == 0) return false;
  return true;
}

template <class S>
FreeMap<S> FreeMap<S>::dual() const {
  FreeMap out(target_.dual(), source_.dual());
  for (int r = 0; r < source_.rank(); ++r)
    for (int c = 0; c < target_.rank(); ++c) out.set_entry(c, r, reversed(entry(r, c)));
  return out;
}

template <class S>
FreeMap<S> FreeMap<S>::then(const FreeMap& next, int cutoff) const {
  if (!(target_.generators() == next.source_.generators())) throw std::invalid_argument("maps are not composable");
  FreeMap out(source_, next.target_);
  for (int r = 0; r < source_.rank(); ++r)
    for (int e = 0; e < next.target_.rank(); ++e) {
      AlgebraElement<S> acc;
      for (int c = 0; c < target_.rank(); ++c) acc += convolve(entry(r, c), next.entry(c, e), cutoff - 1);
      out.set_entry(r, e, std::move(acc));
    }
  return out;
}

template <class S>
Matrix<S> FreeMap<S>::matrix_between(const std::vector<FreeCoord>& src, const std::vector<FreeCoord>& tgt,
                                     const PathBasis& basis) const {
  std::map<std::pair<int, PathBasis::Id>, Index> index;
  for (std::size_t k = 0; k < tgt.size(); ++k) index.emplace(std::pair{tgt[k].generator, tgt[k].path}, static_cast<Index>(k));
  Matrix<S> m = Matrix<S>::Zero(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));
  for (std::size_t col = 0; col < src.size(); ++col) {
    const FreeCoord& x = src[col];
    const int y_len = basis.length(x.path);
    for (int c = 0; c < target_.rank(); ++c)
      for (const auto& [p, coef] : entry(x.generator, c).terms()) {
        if (y_len + p.length() > basis.max_length()) continue;
        const PathBasis::Id pid = basis.find(p);
        if (pid == PathBasis::none) continue;
        const PathBasis::Id yp = basis.compose(x.path, pid);
        auto it = index.find({c, yp});
        if (it != index.end()) m(it->second, static_cast<Index>(col)) += coef;
      }
  }
  return m;
}

template <class S>
Matrix<S> FreeMap<S>::graded_matrix(int degree, const PathBasis& basis) const {
  return matrix_between(source_.graded_basis(degree, basis), target_.graded_basis(degree, basis), basis);
}

template <class S>
Matrix<S> FreeMap<S>::truncated_matrix(int cutoff, const PathBasis& basis) const {
  return matrix_between(source_.truncated_basis(cutoff, basis), target_.truncated_basis(cutoff, basis), basis);
}

template <class S>
bool FreeComplex<S>::is_complex(int cutoff) const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    const FreeMap<S> dd = maps[k + 1].then(maps[k], cutoff);
    for (int r = 0; r < dd.source().rank(); ++r)
      for (int c = 0; c < dd.target().rank(); ++c)
        if (!dd.entry(r, c).truncated(cutoff).is_zero()) return false;
  }
  return true;
}

namespace {
void require_bounded(const Quiver& q) {
  const GrowthVerdict g = growth_gate(q);
  if (!g.bounded) throw std::invalid_argument("growth gate failed: " + g.reason);
}
}  // namespace

template <class S>
GradedPresentation<S> truncated_free(const Quiver& q, Vertex i, int truncation) {
  require_bounded(q);
  FreeModule f(q, {{i, 0}});
  return {FreeMap<S>(FreeModule(q, {}), f), truncation};
}

template <class S>
GradedPresentation<S> simple_presentation(const Quiver& q, Vertex i, int truncation) {
  require_bounded(q);
  std::vector<Generator> rel;
  for (ArrowId a : q.arrows_from(i)) rel.push_back({q.arrow(a).target, 1});
  FreeMap<S> d(FreeModule(q, rel), FreeModule(q, {{i, 0}}));
  int r = 0;
  for (ArrowId a : q.arrows_from(i)) d.set_entry(r++, 0, AlgebraElement<S>::path(Path::of_arrow(q, a)));
  return {std::move(d), truncation};
}

#define PATHCO_INSTANTIATE_FREE(S)                                                      \
  template class FreeMap<S>;                                                            \
  template struct FreeComplex<S>;                                                       \
  template GradedPresentation<S> truncated_free<S>(const Quiver&, Vertex, int);         \
  template GradedPresentation<S> simple_presentation<S>(const Quiver&, Vertex, int);

PATHCO_INSTANTIATE_FREE(Rational)
PATHCO_INSTANTIATE_FREE(Zp)

}  // namespace pathco
