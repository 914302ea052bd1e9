#include "bohrlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bohrlab {

namespace {

using ordered_json = nlohmann::ordered_json;

// Store the printed (rounded) value so JSON output and re-parsing agree with
// the other formats digit for digit.
double rounded(double x, int precision) {
  const std::string s = format_number(x, precision);
  return std::strtod(s.c_str(), nullptr);
}

std::string int_or_blank(int v) { return v > 0 ? std::to_string(v) : std::string(); }

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& body) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << csv_quote(header[i]);
  }
  out << "\n";
  for (const auto& row : body) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_quote(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_markdown(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    widths[i] = header[i].size();
  }
  for (const auto& row : body) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  auto emit_row = [&](const std::vector<std::string>& row, std::ostringstream& out) {
    out << "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << " " << row[i] << std::string(widths[i] - row[i].size(), ' ') << " |";
    }
    out << "\n";
  };
  std::ostringstream out;
  emit_row(header, out);
  out << "|";
  for (std::size_t w : widths) {
    out << std::string(w + 2, '-') << "|";
  }
  out << "\n";
  for (const auto& row : body) {
    emit_row(row, out);
  }
  return out.str();
}

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "md" || name == "markdown") return ReportFormat::markdown;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_number(double x, int precision) {
  if (precision < 1 || precision > 17) {
    throw std::invalid_argument("precision must lie in [1, 17]");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_rows(const std::vector<TableRow>& rows, ReportFormat format,
                        int precision) {
  const std::vector<std::string> header = {
      "quantity", "m", "p", "k", "radius", "reference_value", "abs_diff"};
  if (format == ReportFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json obj;
      obj["quantity"] = row.quantity;
      if (row.m > 0) obj["m"] = row.m;
      if (row.p > 0) obj["p"] = row.p;
      if (row.k > 0) obj["k"] = row.k;
      obj["radius"] = rounded(row.value, precision);
      obj["reference_value"] = rounded(row.reference, precision);
      obj["abs_diff"] = rounded(row.abs_diff, precision);
      arr.push_back(std::move(obj));
    }
    return arr.dump();
  }
  std::vector<std::vector<std::string>> body;
  body.reserve(rows.size());
  for (const auto& row : rows) {
    body.push_back({row.quantity, int_or_blank(row.m), int_or_blank(row.p),
                    int_or_blank(row.k), format_number(row.value, precision),
                    format_number(row.reference, precision),
                    format_number(row.abs_diff, precision)});
  }
  return format == ReportFormat::csv ? render_csv(header, body)
                                     : render_markdown(header, body);
}

std::string render_table(int table_id, ReportFormat format, int precision) {
  return render_rows(make_table(table_id), format, precision);
}

std::string render_radius(const RadiusProblem& problem, const RadiusResult& result,
                          ReportFormat format, int precision) {
  if (format == ReportFormat::json) {
    ordered_json obj;
    obj["theorem"] = family_name(problem.family);
    obj["m"] = problem.m;
    obj["p"] = problem.p;
    obj["k"] = problem.k;
    obj["N"] = problem.n;
    obj["radius"] = rounded(result.radius, precision);
    obj["residual"] = rounded(result.residual, precision);
    obj["bracket_lo"] = rounded(result.bracket_lo, precision);
    obj["bracket_hi"] = rounded(result.bracket_hi, precision);
    obj["iterations"] = result.iterations;
    return obj.dump();
  }
  const std::vector<std::string> header = {
      "theorem",  "m",          "p",          "k",         "N",
      "radius",   "residual",   "bracket_lo", "bracket_hi", "iterations"};
  const std::vector<std::vector<std::string>> body = {{
      family_name(problem.family),
      std::to_string(problem.m),
      std::to_string(problem.p),
      std::to_string(problem.k),
      std::to_string(problem.n),
      format_number(result.radius, precision),
      format_number(result.residual, precision),
      format_number(result.bracket_lo, precision),
      format_number(result.bracket_hi, precision),
      std::to_string(result.iterations),
  }};
  return format == ReportFormat::csv ? render_csv(header, body)
                                     : render_markdown(header, body);
}

std::string render_sweep(const std::vector<SweepRecord>& records, ReportFormat format,
                         int precision) {
  if (format == ReportFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) {
      ordered_json obj;
      obj["theorem"] = family_name(rec.family);
      obj["m"] = rec.m;
      obj["p"] = rec.p;
      obj["k"] = rec.k;
      obj["N"] = rec.n;
      obj["a"] = rounded(rec.a, precision);
      obj["r"] = rounded(rec.r, precision);
      obj["lhs"] = rounded(rec.lhs, precision);
      obj["gap"] = rounded(rec.gap, precision);
      obj["at_root"] = rec.at_root;
      arr.push_back(std::move(obj));
    }
    return arr.dump();
  }
  const std::vector<std::string> header = {"theorem", "m", "p",   "k",   "N",
                                           "a",       "r", "lhs", "gap", "at_root"};
  std::vector<std::vector<std::string>> body;
  body.reserve(records.size());
  for (const auto& rec : records) {
    body.push_back({family_name(rec.family), std::to_string(rec.m),
                    std::to_string(rec.p), std::to_string(rec.k),
                    std::to_string(rec.n), format_number(rec.a, precision),
                    format_number(rec.r, precision), format_number(rec.lhs, precision),
                    format_number(rec.gap, precision), rec.at_root ? "1" : "0"});
  }
  return format == ReportFormat::csv ? render_csv(header, body)
                                     : render_markdown(header, body);
}

std::string render_verify(const RadiusProblem& problem, const VerifyOutcome& outcome,
                          ReportFormat format, int precision) {
  if (format == ReportFormat::json) {
    ordered_json obj;
    obj["theorem"] = family_name(problem.family);
    obj["m"] = problem.m;
    obj["p"] = problem.p;
    obj["k"] = problem.k;
    obj["N"] = problem.n;
    obj["samples"] = outcome.samples;
    obj["evaluations"] = outcome.evaluations;
    obj["failures"] = outcome.failures;
    obj["max_lhs"] = rounded(outcome.max_lhs, precision);
    obj["radius"] = rounded(outcome.radius, precision);
    obj["r_used"] = rounded(outcome.r_used, precision);
    obj["passed"] = outcome.passed();
    return obj.dump();
  }
  const std::vector<std::string> header = {
      "theorem", "m",           "p",        "k",       "N",      "samples",
      "evaluations", "failures", "max_lhs", "radius",  "r_used", "passed"};
  const std::vector<std::vector<std::string>> body = {{
      family_name(problem.family),
      std::to_string(problem.m),
      std::to_string(problem.p),
      std::to_string(problem.k),
      std::to_string(problem.n),
      std::to_string(outcome.samples),
      std::to_string(outcome.evaluations),
      std::to_string(outcome.failures),
      format_number(outcome.max_lhs, precision),
      format_number(outcome.radius, precision),
      format_number(outcome.r_used, precision),
      outcome.passed() ? "1" : "0",
  }};
  return format == ReportFormat::csv ? render_csv(header, body)
                                     : render_markdown(header, body);
}

}  // namespace bohrlab
