#pragma once

#include <string>

#include "realgw/invariants.hpp"

namespace realgw {

enum class ReportFormat { kText, kJson, kCsv };

ReportFormat parse_format(const std::string& s);

std::string emit_report(const InvariantResult& result, ReportFormat format);
// Inverse of the JSON emitter.  Graph structure is recovered from the
// canonical ids.
InvariantResult parse_json_report(const std::string& text);

// Rebuild a half from its canonical id.
HalfGraph parse_canonical_id(const std::string& id);

std::string graphs_json(const SpaceSpec& space, const std::vector<HalfGraph>& graphs);

}  // namespace realgw
