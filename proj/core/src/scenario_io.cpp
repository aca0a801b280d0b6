#include "lspsim/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "lspsim/errors.hpp"

namespace lspsim {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ValidationError(origin + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& origin,
                         const std::string& section,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (key == name) known = true;
    if (!known)
      fail(origin, "unknown key '" + key + "' in " + section);
  }
}

const json& required(const json& obj, const std::string& origin,
                     const std::string& section, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(origin, section + " is missing required key '" + key + "'");
  return *it;
}

double as_number(const json& value, const std::string& origin,
                 const std::string& where) {
  if (!value.is_number())
    fail(origin, where + " must be a number");
  return value.get<double>();
}

std::int64_t as_integer(const json& value, const std::string& origin,
                        const std::string& where) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number()) {
    const double v = value.get<double>();
    if (v == std::floor(v)) return static_cast<std::int64_t>(v);
  }
  fail(origin, where + " must be an integer");
}

Topology parse_topology(const json& node, const std::string& origin) {
  if (!node.is_array() || node.empty())
    fail(origin, "'topology' must be a non-empty list of pairs");
  Topology topology;
  int id = 0;
  for (const json& entry : node) {
    const std::string where = "topology[" + std::to_string(id) + "]";
    if (!entry.is_object()) fail(origin, where + " must be an object");
    reject_unknown_keys(entry, origin, where, {"max_up", "max_down", "delay"});
    LspPairSpec spec;
    spec.pair_id = id++;
    spec.max_up = as_number(required(entry, origin, where, "max_up"), origin,
                            where + ".max_up");
    spec.max_down = as_number(required(entry, origin, where, "max_down"),
                              origin, where + ".max_down");
    if (entry.contains("delay"))
      spec.delay = as_number(entry["delay"], origin, where + ".delay");
    topology.pairs.push_back(spec);
  }
  return topology;
}

PolicyKind parse_policy(const json& node, const std::string& origin) {
  if (!node.is_object()) fail(origin, "'policy' must be an object");
  reject_unknown_keys(node, origin, "'policy'", {"kind"});
  const json& kind = required(node, origin, "'policy'", "kind");
  if (!kind.is_string()) fail(origin, "policy.kind must be a string");
  const auto parsed = policy_from_string(kind.get<std::string>());
  if (!parsed)
    fail(origin, "policy.kind '" + kind.get<std::string>() +
                     "' is not one of MethodA, MethodB, MethodC");
  return *parsed;
}

DelayClassMix parse_delay_mix(const json& node, const std::string& origin) {
  const std::string where = "traffic.delay_mix";
  if (!node.is_object()) fail(origin, where + " must be an object");
  reject_unknown_keys(node, origin, where,
                      {"short_fraction", "short_permitted", "long_permitted"});
  DelayClassMix mix;
  mix.short_fraction =
      as_number(required(node, origin, where, "short_fraction"), origin,
                where + ".short_fraction");
  mix.short_permitted =
      as_number(required(node, origin, where, "short_permitted"), origin,
                where + ".short_permitted");
  mix.long_permitted =
      as_number(required(node, origin, where, "long_permitted"), origin,
                where + ".long_permitted");
  return mix;
}

void parse_traffic(const json& node, const std::string& origin,
                   Scenario& scenario) {
  if (!node.is_object()) fail(origin, "'traffic' must be an object");
  reject_unknown_keys(node, origin, "'traffic'",
                      {"pattern", "sigma_ratio", "mean_interarrival",
                       "holding_time", "delay_mix"});

  const json& pattern = required(node, origin, "'traffic'", "pattern");
  if (!pattern.is_array() || pattern.empty())
    fail(origin, "traffic.pattern must be a non-empty list");
  int i = 0;
  for (const json& entry : pattern) {
    const std::string where = "traffic.pattern[" + std::to_string(i++) + "]";
    if (!entry.is_object()) fail(origin, where + " must be an object");
    reject_unknown_keys(entry, origin, where, {"mean_up", "mean_down"});
    DemandMeans means;
    means.mean_up = as_number(required(entry, origin, where, "mean_up"),
                              origin, where + ".mean_up");
    means.mean_down = as_number(required(entry, origin, where, "mean_down"),
                                origin, where + ".mean_down");
    scenario.pattern.entries.push_back(means);
  }
  if (node.contains("sigma_ratio"))
    scenario.pattern.sigma_ratio =
        as_number(node["sigma_ratio"], origin, "traffic.sigma_ratio");
  scenario.arrivals.mean_interarrival =
      as_number(required(node, origin, "'traffic'", "mean_interarrival"),
                origin, "traffic.mean_interarrival");
  scenario.arrivals.holding_time =
      as_number(required(node, origin, "'traffic'", "holding_time"), origin,
                "traffic.holding_time");
  if (node.contains("delay_mix"))
    scenario.delay_mix = parse_delay_mix(node["delay_mix"], origin);
}

void parse_run(const json& node, const std::string& origin,
               ScenarioConfig& config) {
  if (!node.is_object()) fail(origin, "'run' must be an object");
  reject_unknown_keys(node, origin, "'run'",
                      {"total_requests", "warmup_requests", "replications",
                       "master_seed"});
  if (node.contains("total_requests"))
    config.scenario.total_requests =
        as_integer(node["total_requests"], origin, "run.total_requests");
  if (node.contains("warmup_requests"))
    config.scenario.warmup_requests =
        as_integer(node["warmup_requests"], origin, "run.warmup_requests");
  if (node.contains("replications"))
    config.replications = static_cast<int>(
        as_integer(node["replications"], origin, "run.replications"));
  if (node.contains("master_seed"))
    config.master_seed = static_cast<std::uint64_t>(
        as_integer(node["master_seed"], origin, "run.master_seed"));
}

ScenarioConfig config_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "top level must be an object");
  reject_unknown_keys(doc, origin, "the top level",
                      {"topology", "policy", "traffic", "run"});

  ScenarioConfig config;
  config.scenario.topology =
      parse_topology(required(doc, origin, "the top level", "topology"),
                     origin);
  config.scenario.policy =
      parse_policy(required(doc, origin, "the top level", "policy"), origin);
  parse_traffic(required(doc, origin, "the top level", "traffic"), origin,
                config.scenario);
  if (doc.contains("run")) parse_run(doc["run"], origin, config);

  // Warm-up defaults to max(1000, 10% of total) when the file names a total
  // but no warm-up of its own.
  if (doc.contains("run") && doc["run"].contains("total_requests") &&
      !doc["run"].contains("warmup_requests"))
    config.scenario.warmup_requests = std::max<std::int64_t>(
        1000, config.scenario.total_requests / 10);

  try {
    validate_scenario(config.scenario);
    check_input(config.replications >= 1, "run.replications must be >= 1");
  } catch (const ValidationError& e) {
    fail(origin, e.what());
  }
  return config;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text,
                                   const std::string& origin) {
  return config_from_json(parse_json(text, origin), origin);
}

ScenarioConfig parse_scenario_text_with_override(
    const std::string& text, const std::string& origin,
    const std::string& dotted_path, double value) {
  json doc = parse_json(text, origin);
  check_input(!dotted_path.empty(), "override path must be non-empty");

  std::string pointer;
  std::istringstream segments(dotted_path);
  std::string segment;
  while (std::getline(segments, segment, '.')) {
    check_input(!segment.empty(),
                "override path '" + dotted_path + "' has an empty segment");
    pointer += '/';
    pointer += segment;
  }
  const json::json_pointer at(pointer);

  // The parent must exist so a typo cannot silently create a new section;
  // the final key may be an optional one the file omitted.
  const json::json_pointer parent = at.parent_pointer();
  if (!doc.contains(parent) || !doc.at(parent).is_object())
    fail(origin, "override path '" + dotted_path +
                     "' does not address an existing section");
  const bool existed = doc.contains(at);
  if (existed && doc.at(at).is_number_integer() && value == std::floor(value))
    doc[at] = static_cast<std::int64_t>(value);
  else
    doc[at] = value;
  return config_from_json(doc, origin);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check_input(static_cast<bool>(in), "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  check_input(!in.bad(), "failed reading '" + path + "'");
  return buffer.str();
}

ScenarioConfig load_scenario_file(const std::string& path) {
  return parse_scenario_text(read_text_file(path), path);
}

}  // namespace lspsim
