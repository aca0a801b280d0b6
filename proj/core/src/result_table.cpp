#include "lspsim/result_table.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "lspsim/errors.hpp"

namespace lspsim {

const char* const kResultHeader =
    "sweep_param,sweep_value,policy,mean_loss,ci_halfwidth,"
    "deadlock_fraction,offered,replications";

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

double parse_double(const std::string& field, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  check_input(used == field.size() && !field.empty(),
              "result table line " + std::to_string(line_no) +
                  ": '" + field + "' is not a number");
  return v;
}

std::int64_t parse_int(const std::string& field, int line_no) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  check_input(used == field.size() && !field.empty(),
              "result table line " + std::to_string(line_no) +
                  ": '" + field + "' is not an integer");
  return v;
}

void forbid_comma(const std::string& value, const char* what) {
  check_input(value.find(',') == std::string::npos &&
                  value.find('\n') == std::string::npos,
              std::string(what) + " must not contain ',' or newlines");
}

}  // namespace

void write_csv(const ResultTable& table, std::ostream& out) {
  out << kResultHeader << '\n';
  for (const ResultRow& row : table.rows) {
    forbid_comma(row.sweep_param, "sweep_param");
    forbid_comma(row.policy, "policy");
    out << row.sweep_param << ',' << format_double(row.sweep_value) << ','
        << row.policy << ',' << format_double(row.mean_loss) << ','
        << format_double(row.ci_halfwidth) << ','
        << format_double(row.deadlock_fraction) << ',' << row.offered << ','
        << row.replications << '\n';
  }
}

std::string to_csv(const ResultTable& table) {
  std::ostringstream out;
  write_csv(table, out);
  return out.str();
}

ResultTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  check_input(static_cast<bool>(std::getline(in, line)),
              "result table: empty input");
  check_input(line == kResultHeader,
              "result table line 1: header does not match '" +
                  std::string(kResultHeader) + "'");

  ResultTable table;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    check_input(f.size() == 8, "result table line " +
                                   std::to_string(line_no) +
                                   ": expected 8 fields, got " +
                                   std::to_string(f.size()));
    ResultRow row;
    row.sweep_param = f[0];
    row.sweep_value = parse_double(f[1], line_no);
    row.policy = f[2];
    row.mean_loss = parse_double(f[3], line_no);
    row.ci_halfwidth = parse_double(f[4], line_no);
    row.deadlock_fraction = parse_double(f[5], line_no);
    row.offered = parse_int(f[6], line_no);
    row.replications = static_cast<int>(parse_int(f[7], line_no));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace lspsim
