#include "report.hpp"

namespace pathco::report {

Json vertex_list(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

Json quiver_json(const Quiver& q) {
  Json arrows = Json::array();
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    arrows.push_back({{"label", q.arrow(a).label}, {"source", q.arrow(a).source + 1}, {"target", q.arrow(a).target + 1}});
  return {{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

Json gate_json(const Quiver& q, const GrowthVerdict& g) {
  Json out{{"bounded", g.bounded}, {"artinian", g.artinian}};
  if (g.bounded) {
    out["period"] = g.period;
    out["preperiod"] = g.preperiod;
    out["max_paths_per_degree"] = g.max_paths_per_degree;
  } else {
    Json w{{"source", g.witness_source + 1}, {"target", g.witness_target + 1}};
    if (g.witness_first) w["first"] = to_string(q, *g.witness_first);
    if (g.witness_second) w["second"] = to_string(q, *g.witness_second);
    out["witness"] = std::move(w);
  }
  out["reason"] = g.reason;
  return out;
}

Json certificate_json(const Certificate& c) {
  return {{"certified", c.certified},
          {"first_stable", c.first_stable},
          {"window", c.window},
          {"window_required", c.window_required},
          {"note", c.note}};
}

Json graded_json(const GradedDims& g) { return {{"first_degree", g.first_degree}, {"by_degree", g.by_degree}}; }

namespace {

Json side_json(const SideVerdict& s) {
  Json table = Json::array();
  for (const auto& e : s.table)
    table.push_back({{"simple", e.simple + 1},
                     {"degree", e.degree},
                     {"dimension", e.dimension},
                     {"support", e.support},
                     {"certified", e.certified}});
  Json witnesses = Json::array();
  for (const auto& w : s.witnesses)
    witnesses.push_back({{"simple", w.simple + 1}, {"degree", w.degree}, {"dimension", w.dimension}, {"reason", w.reason}});
  Json out{{"side", to_string(s.side)}, {"as_regular", s.as_regular}, {"ext_table", std::move(table)},
           {"witnesses", std::move(witnesses)}};
  if (!s.natural.empty()) out["natural_map"] = vertex_list(s.natural);
  return out;
}

template <class S>
Json scalar_list(const std::vector<S>& xs) {
  Json out = Json::array();
  for (const S& x : xs) out.push_back(scalar_to_string<S>(x));
  return out;
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_string<S>(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json regularity_json(const RegularityVerdict& v) {
  return {{"as_regular", v.as_regular}, {"gldim", v.gldim},        {"sides_agree", v.sides_agree},
          {"natural_bijective", v.natural_bijective}, {"truncation", v.truncation}, {"left", side_json(v.left)},
          {"right", side_json(v.right)}};
}

Json chi_json(const ChiProbeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"probe", e.probe}, {"simple", e.simple + 1}, {"dims", e.dims}, {"finite", e.finite}});
  return {{"all_finite", r.all_finite}, {"entries", std::move(entries)}};
}

Json cy_json(const CyVerdict& v) {
  Json ids = Json::array();
  for (const auto& id : v.identities)
    ids.push_back({{"x", id.x}, {"y", id.y}, {"degree", id.degree}, {"lhs", id.lhs}, {"rhs", id.rhs}});
  return {{"dimension", v.dimension}, {"identities_hold", v.identities_hold}, {"inner", v.inner},
          {"calabi_yau", v.calabi_yau}, {"verdict", v.verdict},           {"identities", std::move(ids)}};
}

Json dualizing_json(const DualizingReport& r) {
  return {{"shift", r.shift},
          {"twist", vertex_list(r.twist_vertices)},
          {"inner", r.inner},
          {"summary", r.summary},
          {"evidence", {{"certified_through", r.evidence_certified_through}, {"stabilized", r.evidence_stabilized}}}};
}

template <class S>
Json rep_json(const Rep<S>& m) {
  Json maps = Json::object();
  for (ArrowId a = 0; a < m.quiver().arrow_count(); ++a) maps[m.quiver().arrow(a).label] = matrix_json(m.map(a));
  return {{"side", to_string(m.side())}, {"dims", m.dims()}, {"maps", std::move(maps)}};
}

template <class S>
Json ext_json(const ExtReport<S>& e) {
  Json out{{"source", e.source},
           {"target", e.target},
           {"degree", e.degree},
           {"dimension", e.dimension},
           {"finite", e.finite},
           {"vertex_support", e.vertex_support},
           {"truncation", e.truncation},
           {"certificate", certificate_json(e.certificate)}};
  if (e.graded) out["graded"] = graded_json(*e.graded);
  if (e.module) out["module"] = rep_json(*e.module);
  return out;
}

template <class S>
Json twist_json(const Quiver& q, const VertexTwist<S>& t) {
  Json arrows = Json::object();
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    arrows[q.arrow(a).label] = {{"to", q.arrow(t.arrow_map[static_cast<std::size_t>(a)]).label},
                                {"scalar", scalar_to_string<S>(t.scalars[static_cast<std::size_t>(a)])}};
  return {{"vertex_map", vertex_list(t.vertex_map)}, {"arrows", std::move(arrows)}, {"order", t.vertex_order()}};
}

template <class S>
Json inner_json(const Quiver& q, const InnerVerdict<S>& v) {
  Json out{{"verdict", to_string(v.verdict)}, {"criterion", v.criterion}};
  if (!v.coboundary.empty()) out["coboundary"] = scalar_list(v.coboundary);
  if (v.obstruction_arrow) {
    Json cycle = Json::array();
    for (ArrowId a : v.obstruction_cycle) cycle.push_back(q.arrow(a).label);
    out["obstruction"] = {{"arrow", q.arrow(*v.obstruction_arrow).label},
                          {"cycle", std::move(cycle)},
                          {"cycle_product", scalar_to_string<S>(v.cycle_product)}};
  }
  return out;
}

template <class S>
Json localcoh_json(const Quiver& q, const LocalCohReport<S>& r) {
  Json dims = Json::array();
  for (const auto& d : r.dims) {
    Json rows = Json::array();
    for (Index j = 0; j < d.rows(); ++j) {
      Json row = Json::array();
      for (Index v = 0; v < d.cols(); ++v) row.push_back(d(j, v));
      rows.push_back(std::move(row));
    }
    dims.push_back(std::move(rows));
  }
  Json out{{"index", r.index},
           {"m_max", r.m_max},
           {"truncation", r.truncation},
           {"dims", std::move(dims)},
           {"stable_from", r.stable_from},
           {"certified_through", r.certified_through},
           {"stabilized", r.stabilized},
           {"match_source", r.match_source},
           {"note", r.note}};
  if (r.vertex_match) out["vertex_match"] = vertex_list(*r.vertex_match);
  if (r.twist) out["twist"] = twist_json(q, *r.twist);
  return out;
}

template <class S>
Json nakayama_json(const Quiver& q, const NakayamaReport<S>& r) {
  Json out{{"gldim", r.gldim}, {"natural_map", vertex_list(r.vertex_map)}, {"order", r.order},
           {"consistent", r.consistent}, {"convention", r.convention}};
  if (r.twist) out["sigma"] = twist_json(q, *r.twist);
  out["inner"] = inner_json(q, r.inner);
  if (r.evidence) out["local_cohomology"] = localcoh_json(q, *r.evidence);
  return out;
}

#define PATHCO_INSTANTIATE_REPORT(S)                                     \
  template Json rep_json<S>(const Rep<S>&);                             \
  template Json ext_json<S>(const ExtReport<S>&);                       \
  template Json twist_json<S>(const Quiver&, const VertexTwist<S>&);    \
  template Json inner_json<S>(const Quiver&, const InnerVerdict<S>&);   \
  template Json localcoh_json<S>(const Quiver&, const LocalCohReport<S>&); \
  template Json nakayama_json<S>(const Quiver&, const NakayamaReport<S>&);

PATHCO_INSTANTIATE_REPORT(Rational)
PATHCO_INSTANTIATE_REPORT(Zp)

}  // namespace pathco::report
