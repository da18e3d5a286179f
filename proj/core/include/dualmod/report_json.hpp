#pragma once

#include <nlohmann/json.hpp>

#include "dualmod/bressoud.hpp"
#include "dualmod/module_splitter.hpp"
#include "dualmod/partition.hpp"

namespace dualmod {

/// Partitions serialize as arrays of parts.
nlohmann::json to_json_value(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// Record layout documented in schemas/split_report.schema.json.
nlohmann::json to_json_value(const splitter::SplitReport& r);
/// Throws std::invalid_argument (or nlohmann::json::exception) on malformed
/// input.
splitter::SplitReport split_report_from_json(const nlohmann::json& j);

nlohmann::json to_json_value(const bressoud::Chain& c);

}  // namespace dualmod
