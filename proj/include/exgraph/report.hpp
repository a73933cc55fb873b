#pragma once

#include "exgraph/chromatic.hpp"
#include "exgraph/constructions.hpp"
#include "exgraph/oracle.hpp"
#include "exgraph/stability.hpp"

#include <json.hpp>

#include <string>

namespace exgraph {

using Json = nlohmann::json;

// Every document carries a versioned "schema" field. Graphs are stored as graph6 text.

Json to_json(const ExtremalResult& r);
ExtremalResult extremal_result_from_json(const Json& j);

Json to_json(const ThresholdReport& r, const ForbiddenFamily& family);
ThresholdReport threshold_report_from_json(const Json& j);

Json to_json(const ConstructionRecipe& r);
ConstructionRecipe recipe_from_json(const Json& j);

Json to_json(const PartitionDiagnostics& d);
PartitionDiagnostics partition_from_json(const Json& j);

Json to_json(const StructureAudit& a);
Json to_json(const CriticalityReport& c, const std::string& name);
Json to_json(const FormulaValue& v);

/// Canonical text form used for every emitted artifact (2-space indent, trailing newline).
std::string dump(const Json& j);

std::string threshold_table(const ThresholdReport& r);

} // namespace exgraph
