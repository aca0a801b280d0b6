#include <string>

#include "doctest.h"
#include "lspsim/errors.hpp"
#include "lspsim/result_table.hpp"

using namespace lspsim;

namespace {

ResultTable sample_table() {
  ResultTable table;
  table.rows.push_back(
      {"y", 4.0, "MethodA", 1.0 / 3.0, 0.003, 0.25, 1800000, 10});
  table.rows.push_back(
      {"y", 4.0, "MethodB", 1e-17, 0.0, 0.0, 1800000, 10});
  table.rows.push_back(
      {"r", 0.625, "Zb", 0.0925, 0.0, 0.0, 0, 6});
  return table;
}

}  // namespace

TEST_SUITE_BEGIN("result_table");

TEST_CASE("tables round-trip through text exactly") {
  const ResultTable table = sample_table();
  const std::string text = to_csv(table);
  CHECK(parse_csv(text) == table);
}

TEST_CASE("the header line is fixed") {
  const std::string text = to_csv(sample_table());
  CHECK(text.rfind("sweep_param,sweep_value,policy,mean_loss,", 0) == 0);
  CHECK_THROWS_WITH_AS(parse_csv("not,the,header\n"),
                       doctest::Contains("header"), ValidationError);
  CHECK_THROWS_AS(parse_csv(""), ValidationError);
}

TEST_CASE("malformed rows name their line") {
  std::string text = to_csv(sample_table());
  text += "y,5.0,MethodA,oops,0,0,100,2\n";
  CHECK_THROWS_WITH_AS(parse_csv(text), doctest::Contains("line 5"),
                       ValidationError);

  std::string short_row = std::string(kResultHeader) + "\nx,1,Method\n";
  CHECK_THROWS_WITH_AS(parse_csv(short_row),
                       doctest::Contains("expected 8 fields"),
                       ValidationError);
}

TEST_CASE("field values that would corrupt the format are refused") {
  ResultTable table;
  table.rows.push_back({"a,b", 1.0, "MethodA", 0.0, 0.0, 0.0, 1, 1});
  CHECK_THROWS_AS(to_csv(table), ValidationError);
}

TEST_CASE("an empty table is just the header") {
  const ResultTable empty;
  CHECK(to_csv(empty) == std::string(kResultHeader) + "\n");
  CHECK(parse_csv(to_csv(empty)) == empty);
}

TEST_SUITE_END();
