#include "bmpoly/row_cache.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "bmpoly/errors.hpp"

namespace bmpoly {

using nlohmann::json;

std::string row_to_record(const BMRow& row) {
  json d = json::array();
  for (const auto& v : row.d) d.push_back(v.str());
  json rec;
  rec["n"] = row.n;
  rec["d"] = std::move(d);
  return rec.dump();
}

BMRow row_from_record(std::string_view line) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad row record: ") + e.what());
  }
  if (!rec.is_object() || !rec.contains("n") || !rec.contains("d") || !rec["n"].is_number_unsigned() ||
      !rec["d"].is_array()) {
    throw ParseError("bad row record: " + std::string(line));
  }
  BMRow row;
  row.n = rec["n"].get<unsigned>();
  for (const auto& v : rec["d"]) {
    if (!v.is_string()) throw ParseError("bad row record: coefficient is not a string");
    row.d.push_back(Rational::parse(v.get<std::string>()));
  }
  if (row.d.size() != row.n + 1) throw ParseError("bad row record: wrong number of coefficients");
  return row;
}

std::vector<BMRow> load_row_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::string line;
  if (!std::getline(in, line)) return {};
  if (line != kRowCacheHeader) throw ParseError("unsupported row cache header: '" + line + "'");
  std::map<unsigned, BMRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BMRow row = row_from_record(line);
    auto [it, inserted] = rows.try_emplace(row.n, row);
    if (!inserted && it->second != row) {
      throw ParseError("conflicting cache records for n = " + std::to_string(row.n));
    }
  }
  std::vector<BMRow> out;
  out.reserve(rows.size());
  for (auto& [n, row] : rows) out.push_back(std::move(row));
  return out;
}

std::size_t append_row_file(const std::filesystem::path& path, const std::vector<BMRow>& rows) {
  std::set<unsigned> present;
  const bool exists = std::filesystem::exists(path) && std::filesystem::file_size(path) > 0;
  if (exists) {
    for (const auto& row : load_row_file(path)) present.insert(row.n);
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write row cache " + path.string());
  if (!exists) out << kRowCacheHeader << '\n';
  std::size_t written = 0;
  for (const auto& row : rows) {
    if (!present.insert(row.n).second) continue;
    out << row_to_record(row) << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw std::runtime_error("cannot write row cache " + path.string());
  return written;
}

const BMRow& RowCache::row(unsigned n) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = rows_.find(n); it != rows_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = rows_.find(n); it != rows_.end()) return it->second;
  if (!rows_.contains(0)) rows_.emplace(0, bm_row_closed(0));
  if (n == 0) return rows_.at(0);
  auto below = std::prev(rows_.lower_bound(n));
  // Extend contiguously; gaps between cached rows are filled on the way.
  BMRow current = below->second;
  while (current.n < n) {
    current = bm_row_rec1(current);
    rows_.try_emplace(current.n, current);
  }
  return rows_.at(n);
}

void RowCache::fill(unsigned n_max) {
  for (unsigned n = 0; n <= n_max; ++n) row(n);
}

void RowCache::insert(BMRow row) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = rows_.try_emplace(row.n, row);
  if (!inserted && it->second != row) {
    throw std::logic_error("RowCache: conflicting row for n = " + std::to_string(row.n));
  }
}

bool RowCache::contains(unsigned n) const {
  std::shared_lock lock(mutex_);
  return rows_.contains(n);
}

std::size_t RowCache::size() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

std::vector<BMRow> RowCache::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<BMRow> out;
  out.reserve(rows_.size());
  for (const auto& [n, row] : rows_) out.push_back(row);
  return out;
}

std::size_t RowCache::load(const std::filesystem::path& path) {
  auto rows = load_row_file(path);
  for (auto& row : rows) {
    if (auto why = row_invariant_violation(row)) {
      throw ParseError("cached row " + std::to_string(row.n) + " is invalid: " + *why);
    }
    insert(std::move(row));
  }
  return rows.size();
}

std::size_t RowCache::save(const std::filesystem::path& path) const { return append_row_file(path, snapshot()); }

}  // namespace bmpoly
