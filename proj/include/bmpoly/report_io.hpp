#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmpoly/boros_moll.hpp"
#include "bmpoly/verification.hpp"

namespace bmpoly {

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> parse_format(std::string_view text);

/// JSON document {"claims": [...]}; each claim carries claim, n_range,
/// status, failures, notes and timing_ms. Key order is fixed and timing
/// values are rounded to microseconds.
std::string reports_to_json(const std::vector<VerificationReport>& reports);
/// One CSV line per failure (or one summary line for a passing claim).
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format);

/// Rows as "[d_0, d_1, ...]" lines, JSON records, or n,i,d CSV.
std::string format_rows(const std::vector<BMRow>& rows, OutputFormat format);

}  // namespace bmpoly
