#include "pathco/regularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace pathco {

namespace {

int suggested(const Quiver& q, int truncation) { return truncation + 2 * growth_gate(q).period; }

void require_bounded(const Quiver& q) {
  const GrowthVerdict g = growth_gate(q);
  if (!g.bounded) throw std::invalid_argument("growth gate failed: " + g.reason);
}

std::vector<Vertex> inverse_map(const std::vector<Vertex>& f) {
  std::vector<Vertex> g(f.size(), -1);
  for (std::size_t v = 0; v < f.size(); ++v) g[static_cast<std::size_t>(f[v])] = static_cast<Vertex>(v);
  return g;
}

bool is_bijection(const std::vector<Vertex>& f) {
  std::vector<char> hit(f.size(), 0);
  for (Vertex v : f) {
    if (v < 0 || static_cast<std::size_t>(v) >= f.size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

std::string format_map(const std::vector<Vertex>& f) {
  std::ostringstream s;
  for (std::size_t v = 0; v < f.size(); ++v) s << (v ? ", " : "") << v + 1 << "->" << f[v] + 1;
  return s.str();
}

template <class S>
SideVerdict side_verdict(const Quiver& q, Side side, int n, int truncation) {
  SideVerdict out;
  out.side = side;
  out.as_regular = true;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    std::optional<Vertex> target;
    for (int i = 0; i <= n; ++i) {
      const ExtReport<S> e = ext_simple_vs_algebra<S>(q, v, side, i, truncation);
      if (!e.certificate.certified)
        throw StabilizationFailure("Ext^" + std::to_string(i) + "(S_" + std::to_string(v + 1) +
                                       ", A) did not stabilise: " + e.certificate.note,
                                   suggested(q, truncation));
      out.table.push_back({v, i, e.dimension, e.vertex_support, true});
      if (i < n && e.dimension != 0) {
        out.witnesses.push_back({v, i, e.dimension, "Ext below the global dimension is nonzero"});
        out.as_regular = false;
      }
      if (i == n) {
        if (e.dimension != 1) {
          out.witnesses.push_back({v, i, e.dimension, "Ext in the global dimension is not one-dimensional"});
          out.as_regular = false;
        } else {
          const auto it = std::find(e.vertex_support.begin(), e.vertex_support.end(), 1L);
          target = static_cast<Vertex>(it - e.vertex_support.begin());
        }
      }
    }
    if (target) out.natural.push_back(*target);
  }
  if (!out.as_regular) out.natural.clear();
  return out;
}

}  // namespace

int global_dimension(const Quiver& q) {
  require_bounded(q);
  const int n = q.arrow_count() == 0 ? 0 : 1;
  int longest = 0;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    const auto res = minimalize(standard_resolution(simple<Rational>(q, v, Side::Left)), 4);
    const auto b = betti_numbers(res);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (std::accumulate(b[k].begin(), b[k].end(), 0) > 0) longest = std::max(longest, static_cast<int>(k));
  }
  if (longest != n) throw std::logic_error("minimal resolutions disagree with the hereditary global dimension");
  return n;
}

template <class S>
RegularityVerdict as_regular_check(const Quiver& q, int truncation) {
  RegularityVerdict out;
  out.gldim = global_dimension(q);
  out.truncation = truncation;
  out.left = side_verdict<S>(q, Side::Left, out.gldim, truncation);
  out.right = side_verdict<S>(q, Side::Right, out.gldim, truncation);
  out.sides_agree = out.left.as_regular == out.right.as_regular;
  out.as_regular = out.left.as_regular && out.right.as_regular;
  out.natural_bijective = out.as_regular && is_bijection(out.left.natural) && is_bijection(out.right.natural);
  return out;
}

template <class S>
Vertex natural_map(const Quiver& q, Vertex i, Side side, int truncation) {
  const int n = global_dimension(q);
  const ExtReport<S> e = ext_simple_vs_algebra<S>(q, i, side, n, truncation);
  if (!e.certificate.certified)
    throw StabilizationFailure("Ext^n(S_i, A) did not stabilise: " + e.certificate.note, suggested(q, truncation));
  if (e.dimension != 1)
    throw NotRegular("Ext^" + std::to_string(n) + "(S_" + std::to_string(i + 1) + ", A) has dimension " +
                     std::to_string(e.dimension) + ", not a simple module");
  for (int k = 0; k < n; ++k)
    if (ext_simple_vs_algebra<S>(q, i, side, k, truncation).dimension != 0)
      throw NotRegular("Ext^" + std::to_string(k) + "(S_" + std::to_string(i + 1) + ", A) is nonzero");
  const auto it = std::find(e.vertex_support.begin(), e.vertex_support.end(), 1L);
  return static_cast<Vertex>(it - e.vertex_support.begin());
}

const char* to_string(Innerness x) {
  switch (x) {
    case Innerness::Inner:
      return "inner";
    case Innerness::NotInner:
      return "not inner";
    default:
      return "undetermined";
  }
}

template <class S>
InnerVerdict<S> inner_test(const Quiver& q, const VertexTwist<S>& t) {
  t.validate(q);
  InnerVerdict<S> out;
  const int n = q.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (t.vertex_map[static_cast<std::size_t>(v)] != v) {
      out.verdict = Innerness::NotInner;
      out.criterion = "moves vertex " + std::to_string(v + 1) + "; inner automorphisms fix every vertex idempotent class";
      return out;
    }
  // the arrow part must also fix arrows, else it is not conjugation by a unit of degree 0
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (t.arrow_map[static_cast<std::size_t>(a)] != a) {
      out.verdict = Innerness::NotInner;
      out.criterion = "permutes parallel arrows; conjugation fixes every arrow up to scalar";
      return out;
    }
  // spanning forest: c_root = 1, c_head = lambda * c_tail along tree arrows
  std::vector<std::optional<S>> c(static_cast<std::size_t>(n));
  std::vector<ArrowId> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> tree(static_cast<std::size_t>(q.arrow_count()), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (c[static_cast<std::size_t>(root)]) continue;
    c[static_cast<std::size_t>(root)] = S(1);
    std::queue<Vertex> todo;
    todo.push(root);
    while (!todo.empty()) {
      const Vertex v = todo.front();
      todo.pop();
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const S lambda = t.scalars[static_cast<std::size_t>(a)];
        if (ar.source == v && !c[static_cast<std::size_t>(ar.target)]) {
          c[static_cast<std::size_t>(ar.target)] = lambda * *c[static_cast<std::size_t>(v)];
        } else if (ar.target == v && !c[static_cast<std::size_t>(ar.source)]) {
          c[static_cast<std::size_t>(ar.source)] = *c[static_cast<std::size_t>(v)] / lambda;
        } else {
          continue;
        }
        const Vertex w = ar.source == v ? ar.target : ar.source;
        parent[static_cast<std::size_t>(w)] = a;
        tree[static_cast<std::size_t>(a)] = 1;
        todo.push(w);
      }
    }
  }
  auto to_root = [&](Vertex v) {
    std::vector<std::pair<Vertex, ArrowId>> path;
    while (parent[static_cast<std::size_t>(v)] >= 0) {
      const ArrowId a = parent[static_cast<std::size_t>(v)];
      path.push_back({v, a});
      v = q.arrow(a).source == v ? q.arrow(a).target : q.arrow(a).source;
    }
    path.push_back({v, -1});
    return path;
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (tree[static_cast<std::size_t>(a)]) continue;
    const Arrow& ar = q.arrow(a);
    const S product = t.scalars[static_cast<std::size_t>(a)] * *c[static_cast<std::size_t>(ar.source)] /
                      *c[static_cast<std::size_t>(ar.target)];
    if (product == S(1)) continue;
    out.verdict = Innerness::NotInner;
    out.criterion = "arrow scalars are not a coboundary";
    out.obstruction_arrow = a;
    out.cycle_product = product;
    auto ps = to_root(ar.source), pt = to_root(ar.target);
    while (ps.size() > 1 && pt.size() > 1 && ps[ps.size() - 2].second == pt[pt.size() - 2].second) {
      ps.pop_back();
      pt.pop_back();
    }
    out.obstruction_cycle.push_back(a);
    for (std::size_t k = 0; k + 1 < pt.size(); ++k) out.obstruction_cycle.push_back(pt[k].second);
    for (std::size_t k = ps.size() - 1; k-- > 0;) out.obstruction_cycle.push_back(ps[k].second);
    return out;
  }
  out.verdict = Innerness::Inner;
  out.criterion = "fixes every vertex and the arrow scalars are a coboundary";
  for (const auto& x : c) out.coboundary.push_back(*x);
  return out;
}

template <class S>
NakayamaReport<S> nakayama(const Quiver& q, int truncation, int m_max) {
  const RegularityVerdict reg = as_regular_check<S>(q, truncation);
  if (!reg.as_regular) {
    std::string why = "not AS-regular";
    const auto& w = reg.left.witnesses.empty() ? reg.right.witnesses : reg.left.witnesses;
    if (!w.empty())
      why += ": Ext^" + std::to_string(w.front().degree) + "(S_" + std::to_string(w.front().simple + 1) +
             ", A) has dimension " + std::to_string(w.front().dimension);
    throw NotRegular(why);
  }
  NakayamaReport<S> out;
  out.gldim = reg.gldim;
  out.vertex_map = reg.left.natural;
  out.convention =
      "paths compose right to left; natural(i) is the vertex of Ext^n(S_i, A) for the left simple S_i; "
      "sigma is read off H^n Gamma(A) and equals natural^{-1}";
  if (out.gldim == 0) {
    out.twist = VertexTwist<S>::identity(q);
  } else {
    LocalCohReport<S> lc = local_cohomology<S>(q, out.gldim, m_max, truncation, inverse_map(out.vertex_map));
    if (!lc.stabilized)
      throw StabilizationFailure("local cohomology did not stabilise by m = " + std::to_string(m_max),
                                 suggested(q, truncation));
    if (!lc.twist)
      throw StabilizationFailure("no twist of C matches H^n Gamma(A): " + lc.note, suggested(q, truncation));
    out.twist = lc.twist;
    out.evidence = std::move(lc);
  }
  out.order = out.twist->vertex_order();
  out.consistent = out.twist->vertex_map == inverse_map(out.vertex_map);
  out.inner = inner_test(q, *out.twist);
  return out;
}

template <class S>
ChiProbeReport chi_probe(const Quiver& q, int truncation) {
  const int n = global_dimension(q);
  const int verts = q.vertex_count();
  ChiProbeReport out;
  out.all_finite = true;
  for (Vertex j = 0; j < verts; ++j) {
    const Rep<S> sj = simple<S>(q, j, Side::Left);
    for (Vertex i = 0; i < verts; ++i) {
      ChiProbeEntry e{"S_" + std::to_string(i + 1), j, {}, true};
      for (int k = 0; k <= n; ++k) e.dims.push_back(ext_fd(simple<S>(q, i, Side::Left), sj, k).dimension);
      out.entries.push_back(std::move(e));
    }
    std::vector<ExtReport<S>> whole;
    for (int k = 0; k <= n; ++k) whole.push_back(ext_comodule_C<S>(q, j, k, truncation));
    for (Vertex i = 0; i < verts; ++i) {
      ChiProbeEntry e{"e_" + std::to_string(i + 1) + "C", j, {}, true};
      for (const auto& r : whole) {
        e.dims.push_back(r.vertex_support[static_cast<std::size_t>(i)]);
        e.finite = e.finite && r.certificate.certified && r.finite;
      }
      out.all_finite = out.all_finite && e.finite;
      out.entries.push_back(std::move(e));
    }
    ChiProbeEntry e{"C", j, {}, true};
    for (const auto& r : whole) {
      e.dims.push_back(r.dimension);
      e.finite = e.finite && r.certificate.certified && r.finite;
    }
    out.all_finite = out.all_finite && e.finite;
    out.entries.push_back(std::move(e));
  }
  return out;
}

template <class S>
SerreImage<S> serre_twist(const Rep<S>& x, const NakayamaReport<S>& nak) {
  if (!nak.twist) throw std::invalid_argument("Nakayama report carries no twist");
  return {twist(x, *nak.twist), nak.gldim};
}

template <class S>
CyVerdict cy_check(const Quiver& q, const std::vector<Rep<S>>& family, const NakayamaReport<S>& nak) {
  CyVerdict out;
  out.dimension = nak.gldim;
  out.identities_hold = true;
  std::vector<Rep<S>> images;
  for (const Rep<S>& x : family) {
    if (!(x.quiver() == q)) throw std::invalid_argument("family member over a different quiver");
    images.push_back(serre_twist(x, nak).module);
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b)
      for (int i = 0; i <= nak.gldim; ++i) {
        SerreIdentity id{static_cast<int>(a), static_cast<int>(b), i, ext_fd(family[a], family[b], i).dimension,
                         ext_fd(family[b], images[a], nak.gldim - i).dimension};
        out.identities_hold = out.identities_hold && id.lhs == id.rhs;
        out.identities.push_back(id);
      }
  out.inner = nak.inner.verdict == Innerness::Inner;
  out.calabi_yau = out.identities_hold && out.inner;
  const std::string n = std::to_string(nak.gldim);
  if (!out.identities_hold)
    out.verdict = "Serre identities fail";
  else if (out.inner)
    out.verdict = "CY-" + n;
  else
    out.verdict = "twisted CY-" + n + " with twist " + format_map(nak.twist->vertex_map) + ", not CY";
  return out;
}

template <class S>
DualizingReport dualizing_report(const Quiver& q, const NakayamaReport<S>& nak) {
  if (!nak.twist) throw std::invalid_argument("Nakayama report carries no twist");
  nak.twist->validate(q);
  DualizingReport out;
  out.shift = nak.gldim;
  out.twist_vertices = nak.twist->vertex_map;
  out.inner = nak.inner.verdict == Innerness::Inner;
  if (nak.evidence) {
    out.evidence_certified_through = nak.evidence->certified_through;
    out.evidence_stabilized = nak.evidence->stabilized;
  }
  std::ostringstream s;
  s << "balanced dualizing complex: ";
  if (out.inner)
    s << "A itself";
  else
    s << "A twisted by sigma on one side";
  s << ", shift " << out.shift << ", twist ";
  if (nak.twist->is_identity_on_vertices() && out.inner)
    s << "identity";
  else if (out.twist_vertices.size() == 2 && out.twist_vertices[0] == 1)
    s << "vertex swap";
  else
    s << format_map(out.twist_vertices);
  if (out.inner)
    s << " => CY-" << out.shift;
  else
    s << ", not inner";
  out.summary = s.str();
  return out;
}

#define PATHCO_INSTANTIATE_REGULARITY(S)                                                          \
  template RegularityVerdict as_regular_check<S>(const Quiver&, int);                             \
  template Vertex natural_map<S>(const Quiver&, Vertex, Side, int);                               \
  template InnerVerdict<S> inner_test<S>(const Quiver&, const VertexTwist<S>&);                   \
  template NakayamaReport<S> nakayama<S>(const Quiver&, int, int);                                \
  template ChiProbeReport chi_probe<S>(const Quiver&, int);                                       \
  template SerreImage<S> serre_twist<S>(const Rep<S>&, const NakayamaReport<S>&);                 \
  template CyVerdict cy_check<S>(const Quiver&, const std::vector<Rep<S>>&, const NakayamaReport<S>&); \
  template DualizingReport dualizing_report<S>(const Quiver&, const NakayamaReport<S>&);

PATHCO_INSTANTIATE_REGULARITY(Rational)
PATHCO_INSTANTIATE_REGULARITY(Zp)

}  // namespace pathco
