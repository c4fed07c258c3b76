#pragma once

// Human-readable and line-delimited JSON renderings of results.

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "orecycle/closure.hpp"
#include "orecycle/graph.hpp"
#include "orecycle/verify.hpp"

namespace orecycle {

enum class OutputFormat { text, records };

void write_report(std::ostream& out, const VerificationReport& r, OutputFormat format);

// One record per graph: {"key": graph6, "command": ..., "properties": {...},
// "witness": [vertex list] or null}. Witnesses are written canonically.
nlohmann::json graph_record(const Graph& g, const std::string& command, nlohmann::json properties,
                            const std::optional<Cycle>& witness);

nlohmann::json condition_properties(const ConditionReport& c);
nlohmann::json to_json(const Sigma2& s);
nlohmann::json to_json(const Cycle& c);

std::string format_cycle(const Cycle& c);  // "0 1 2 3"

}  // namespace orecycle
