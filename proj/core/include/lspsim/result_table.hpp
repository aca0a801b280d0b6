#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lspsim {

/// One sweep point for one policy. For reduction sweeps the policy column
/// carries the factor's name ("Zb", "Zc") and mean_loss carries its value.
struct ResultRow {
  std::string sweep_param;
  double sweep_value = 0.0;
  std::string policy;
  double mean_loss = 0.0;
  double ci_halfwidth = 0.0;
  double deadlock_fraction = 0.0;  // share of rejections that are deadlocks
  std::int64_t offered = 0;        // summed over replications
  int replications = 0;
  bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
  std::vector<ResultRow> rows;
  bool operator==(const ResultTable&) const = default;
};

/// Column order is fixed; see kResultHeader. Numbers are written with
/// enough digits to round-trip exactly.
extern const char* const kResultHeader;

void write_csv(const ResultTable& table, std::ostream& out);
std::string to_csv(const ResultTable& table);

/// Inverse of write_csv. Malformed text (wrong header, wrong column count,
/// non-numeric fields) raises a validation error naming the line.
ResultTable parse_csv(const std::string& text);

}  // namespace lspsim
