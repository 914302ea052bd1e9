#pragma once

#include <string>
#include <vector>

#include "bohrlab/radius.hpp"
#include "bohrlab/sharpness.hpp"
#include "bohrlab/verify.hpp"

namespace bohrlab {

enum class ReportFormat { csv, markdown, json };

ReportFormat report_format_from_name(const std::string& name);

/// "%.{precision}g" rendering used by every serializer, so the same value
/// prints identically across formats.
std::string format_number(double x, int precision);

/// RFC-4180-style quoting: fields containing commas, quotes or newlines are
/// quoted, with embedded quotes doubled.
std::string csv_quote(const std::string& field);

std::string render_table(int table_id, ReportFormat format, int precision = 6);
std::string render_rows(const std::vector<TableRow>& rows, ReportFormat format,
                        int precision = 6);

std::string render_radius(const RadiusProblem& problem, const RadiusResult& result,
                          ReportFormat format, int precision = 6);

std::string render_sweep(const std::vector<SweepRecord>& records, ReportFormat format,
                         int precision = 6);

std::string render_verify(const RadiusProblem& problem, const VerifyOutcome& outcome,
                          ReportFormat format, int precision = 6);

}  // namespace bohrlab
