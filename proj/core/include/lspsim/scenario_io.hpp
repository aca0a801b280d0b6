#pragma once

#include <cstdint>
#include <string>

#include "lspsim/engine.hpp"

namespace lspsim {

/// A scenario file plus the run-orchestration knobs that sit outside the
/// single-replication Scenario.
struct ScenarioConfig {
  Scenario scenario;
  int replications = 10;
  std::uint64_t master_seed = 0;
};

/// Parses and validates scenario JSON. `origin` names the source (usually
/// the file path) and prefixes every error message. Unknown keys are
/// rejected, naming the offending section.
ScenarioConfig parse_scenario_text(const std::string& text,
                                   const std::string& origin);

/// parse_scenario_text with one numeric field replaced first: `dotted_path`
/// addresses it section-by-section (e.g. "traffic.mean_interarrival",
/// "run.total_requests"). The path must already exist in the document or
/// name an optional key of an existing section.
ScenarioConfig parse_scenario_text_with_override(const std::string& text,
                                                 const std::string& origin,
                                                 const std::string& dotted_path,
                                                 double value);

ScenarioConfig load_scenario_file(const std::string& path);

/// Reads a whole file into memory; missing/unreadable files raise a
/// validation error naming the path.
std::string read_text_file(const std::string& path);

}  // namespace lspsim
