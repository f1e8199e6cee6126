#pragma once

#include <nlohmann/json.hpp>

#include "quiverlab/gallery.hpp"
#include "quiverlab/rep.hpp"
#include "quiverlab/roots.hpp"

namespace quiverlab {

using json = nlohmann::ordered_json;

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// Vectors serialize as {label: value}; arrays in vertex order are accepted
/// on input.
json vec_to_json(const Quiver& q, const IntVec& v);
IntVec vec_from_json(const Quiver& q, const json& j);

/// Entries as "p/q" text; plain JSON integers are accepted on input.
json matrix_to_json(const RMatrix& m);
/// Nested arrays lose the column count of 0-row matrices, so the expected
/// shape comes from context.
RMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json rep_to_json(const FramedRep& rep);
FramedRep rep_from_json(const json& j);

json point_to_json(const ParabolicPoint& pt);
ParabolicPoint point_from_json(const json& j);

json chain_to_json(const ParabolicChainPoint& ch);
ParabolicChainPoint chain_from_json(const json& j);

json stratum_report_to_json(const Quiver& q, const StratumReport& report);

/// Quiver from an inline JSON object, a file path, or a builtin name
/// ("jordan", "a1", "an:N").
Quiver quiver_from_spec(const std::string& spec);

/// Vector from "3" (single vertex), "3,2,1" (vertex order), or
/// "v1=3,v2=2" forms.
IntVec vec_from_spec(const Quiver& q, const std::string& spec);

json load_json_file(const std::string& path);
json nonempty_verdict_to_json(const Quiver& q, const NonemptyVerdict& verdict, bool with_trace);
json root_check_to_json(const RootGraph& g, const RootCheckResult& result, bool with_trace);
json validation_to_json(const ValidationReport& report);
json tangent_report_to_json(const TangentReport& report);

} // namespace quiverlab
