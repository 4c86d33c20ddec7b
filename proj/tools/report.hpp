// JSON encoding of every verdict type. Vertices are written 1-based, arrows by
// label, scalars as exact strings.
#pragma once

#include "pathco/regularity.hpp"

#include <json.hpp>

namespace pathco::report {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

Json vertex_list(const std::vector<Vertex>& vs);
Json quiver_json(const Quiver& q);
Json gate_json(const Quiver& q, const GrowthVerdict& g);
Json certificate_json(const Certificate& c);
Json graded_json(const GradedDims& g);
Json regularity_json(const RegularityVerdict& v);
Json chi_json(const ChiProbeReport& r);
Json cy_json(const CyVerdict& v);
Json dualizing_json(const DualizingReport& r);

template <class S>
Json rep_json(const Rep<S>& m);
template <class S>
Json ext_json(const ExtReport<S>& e);
template <class S>
Json twist_json(const Quiver& q, const VertexTwist<S>& t);
template <class S>
Json inner_json(const Quiver& q, const InnerVerdict<S>& v);
template <class S>
Json localcoh_json(const Quiver& q, const LocalCohReport<S>& r);
template <class S>
Json nakayama_json(const Quiver& q, const NakayamaReport<S>& r);

}  // namespace pathco::report
