#pragma once

#include <string>

#include <json.hpp>

#include "quandlekit/decomposition.hpp"
#include "quandlekit/finite_quandle.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/mcq.hpp"

namespace quandlekit {

using Json = nlohmann::json;

// {"size": n, "table": [[...]], "labels": [...]?}, row = left operand.
Json quandle_to_json(const FiniteQuandle& q);
/// Throws AxiomViolationError for axiom-invalid tables unless `unchecked`.
FiniteQuandle quandle_from_json(const Json& j, bool unchecked = false);

// {"size": n, "mult": [[...]], "identity": i, "labels": [...]?}
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// {"groups": [group, ...], "op": [[...]]} over the global carrier indexing.
Json mcq_to_json(const MCQ& x);
/// Throws AxiomViolationError for axiom-invalid structures unless `unchecked`.
MCQ mcq_from_json(const Json& j, bool unchecked = false);

// {"depth": d, "levels": [[block, ...], ...]}
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json partition_to_json(const Partition& p);

/// Reads and parses a JSON file; throws std::runtime_error on I/O failure.
Json read_json_file(const std::string& path);

}  // namespace quandlekit
