#include "bmpoly/report_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace bmpoly {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i];
  }
  return out;
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["claim"] = std::string(to_string(r.claim));
  j["n_range"] = {r.n_lo, r.n_hi};
  j["status"] = std::string(to_string(r.status));
  j["failures"] = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json fj;
    fj["n"] = f.n;
    fj["detail"] = f.detail;
    fj["values"] = f.values;
    j["failures"].push_back(std::move(fj));
  }
  j["notes"] = r.notes;
  j["timing_ms"] = ordered_json::array();
  for (const auto& t : r.timing) {
    j["timing_ms"].push_back({{"n", t.n}, {"ms", std::round(t.ms * 1000.0) / 1000.0}});
  }
  return j;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  ordered_json doc;
  doc["claims"] = ordered_json::array();
  for (const auto& r : reports) doc["claims"].push_back(report_to_json(r));
  return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "claim,n_lo,n_hi,status,n,detail,values\n";
  for (const auto& r : reports) {
    const std::string head = std::string(to_string(r.claim)) + "," + std::to_string(r.n_lo) + "," +
                             std::to_string(r.n_hi) + "," + std::string(to_string(r.status));
    if (r.failures.empty()) {
      out << head << ",,,\n";
      continue;
    }
    for (const auto& f : r.failures) {
      out << head << "," << f.n << "," << csv_field(f.detail) << "," << csv_field(join(f.values, " ")) << "\n";
    }
  }
  return out.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    double total = 0.0;
    for (const auto& t : r.timing) total += t.ms;
    out << (r.passed() ? "PASS " : "FAIL ") << to_string(r.claim) << " n=[" << r.n_lo << ", " << r.n_hi << "]"
        << " failures=" << r.failures.size() << " (" << static_cast<long>(std::round(total)) << " ms)\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
    for (const auto& f : r.failures) {
      out << "  fail n=" << f.n << ": " << f.detail;
      if (!f.values.empty()) out << " [" << join(f.values, "; ") << "]";
      out << "\n";
    }
  }
  return out.str();
}

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return reports_to_json(reports);
    case OutputFormat::csv: return reports_to_csv(reports);
    case OutputFormat::text: return reports_to_text(reports);
  }
  return {};
}

std::string format_rows(const std::vector<BMRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text:
      for (const auto& row : rows) out << Poly(row.d).str() << "\n";
      break;
    case OutputFormat::json: {
      ordered_json doc = ordered_json::array();
      for (const auto& row : rows) {
        std::vector<std::string> d;
        for (const auto& v : row.d) d.push_back(v.str());
        doc.push_back({{"n", row.n}, {"d", d}});
      }
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "n,i,d\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.d.size(); ++i) out << row.n << "," << i << "," << row.d[i].str() << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace bmpoly
