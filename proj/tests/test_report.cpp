#include <stdexcept>
#include <string>

#include "bohrlab/report.hpp"
#include "doctest.h"
#include "json.hpp"

using bohrlab::ReportFormat;

TEST_CASE("format_number renders six significant digits by default") {
  CHECK(bohrlab::format_number(0.2807764064, 6) == "0.280776");
  CHECK(bohrlab::format_number(800.0 / 81.0, 6) == "9.87654");
  CHECK(bohrlab::format_number(800.0 / 81.0, 10) == "9.87654321");
  CHECK(bohrlab::format_number(0.0, 6) == "0");
  CHECK_THROWS_AS(bohrlab::format_number(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(bohrlab::format_number(1.0, 42), std::invalid_argument);
}

TEST_CASE("csv quoting follows the quoting rules") {
  CHECK(bohrlab::csv_quote("plain") == "plain");
  CHECK(bohrlab::csv_quote("with,comma") == "\"with,comma\"");
  CHECK(bohrlab::csv_quote("with\"quote") == "\"with\"\"quote\"");
  CHECK(bohrlab::csv_quote("with\nnewline") == "\"with\nnewline\"");
}

TEST_CASE("table rendering is deterministic") {
  for (auto format : {ReportFormat::csv, ReportFormat::markdown, ReportFormat::json}) {
    const std::string once = bohrlab::render_table(3, format, 6);
    const std::string twice = bohrlab::render_table(3, format, 6);
    CHECK(once == twice);
    CHECK(!once.empty());
  }
}

TEST_CASE("csv table has the documented columns") {
  const std::string csv = bohrlab::render_table(1, ReportFormat::csv, 6);
  CHECK(csv.rfind("quantity,m,p,k,radius,reference_value,abs_diff\n", 0) == 0);
  // 10 data rows + header
  int lines = 0;
  for (char c : csv) {
    lines += c == '\n';
  }
  CHECK(lines == 11);
  CHECK(csv.find("R_mpk") != std::string::npos);
  CHECK(csv.find("0.280776") != std::string::npos);
}

TEST_CASE("json table output re-parses to the same numeric values") {
  const std::string json = bohrlab::render_table(2, ReportFormat::json, 6);
  const auto parsed = nlohmann::json::parse(json);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 10);
  for (const auto& row : parsed) {
    CHECK(row.contains("radius"));
    CHECK(row.contains("reference_value"));
    CHECK(row.contains("abs_diff"));
    CHECK(row["radius"].is_number());
  }
  // re-serializing the parsed document reproduces the bytes (key order kept)
  CHECK(nlohmann::ordered_json::parse(json).dump() == json);
  // six-digit rounding means the first R2 row reads exactly 0.385795
  CHECK(parsed[0]["radius"].get<double>() == doctest::Approx(0.385795).epsilon(1e-12));
}

TEST_CASE("markdown table aligns columns") {
  const std::string md = bohrlab::render_table(3, ReportFormat::markdown, 6);
  REQUIRE(md.find('|') != std::string::npos);
  // separator row directly under the header
  const auto first_newline = md.find('\n');
  const auto second_newline = md.find('\n', first_newline + 1);
  const std::string separator =
      md.substr(first_newline + 1, second_newline - first_newline - 1);
  CHECK(separator.find("---") != std::string::npos);
  // unused p column renders blank cells, never zeros
  CHECK(md.find("800") == std::string::npos);  // lambda prints as 9.87654
  CHECK(md.find("9.87654") != std::string::npos);
}

TEST_CASE("radius, sweep and verify renderers emit every field") {
  bohrlab::RadiusProblem prob;
  prob.family = bohrlab::Family::th1;
  const auto result = bohrlab::smallest_positive_root(prob);
  const std::string json =
      bohrlab::render_radius(prob, result, ReportFormat::json, 9);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["theorem"] == "th1");
  CHECK(parsed["radius"].get<double>() == doctest::Approx(0.280776406).epsilon(1e-9));
  CHECK(parsed["iterations"].get<int>() > 0);
  CHECK(parsed["bracket_hi"].get<double>() >= parsed["bracket_lo"].get<double>());

  const auto rows = bohrlab::figure_sweep(prob, 0.2, 0.4, 0.05);
  const std::string csv = bohrlab::render_sweep(rows, ReportFormat::csv, 6);
  CHECK(csv.rfind("theorem,m,p,k,N,a,r,lhs,gap,at_root\n", 0) == 0);

  bohrlab::VerifyOutcome outcome;
  outcome.samples = 10;
  outcome.evaluations = 30;
  outcome.failures = 0;
  outcome.max_lhs = 0.9;
  outcome.radius = 0.28;
  outcome.r_used = 0.27;
  const std::string vjson = bohrlab::render_verify(prob, outcome, ReportFormat::json, 6);
  const auto vparsed = nlohmann::json::parse(vjson);
  CHECK(vparsed["passed"].get<bool>());
  CHECK(vparsed["max_lhs"].get<double>() == doctest::Approx(0.9));
}

TEST_CASE("unknown ids and formats are rejected") {
  CHECK_THROWS_AS(bohrlab::render_table(9, ReportFormat::csv, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(bohrlab::report_format_from_name("yaml"), std::invalid_argument);
  CHECK(bohrlab::report_format_from_name("md") == ReportFormat::markdown);
  CHECK(bohrlab::report_format_from_name("markdown") == ReportFormat::markdown);
}
