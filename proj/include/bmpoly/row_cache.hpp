#pragma once

#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "bmpoly/boros_moll.hpp"

namespace bmpoly {

/// First line of every row-cache file.
inline constexpr std::string_view kRowCacheHeader = "bmpoly-rows v1";

/// One cache record: {"n":2,"d":["21/8","15/4","3/2"]}
std::string row_to_record(const BMRow& row);
/// Throws ParseError on malformed records.
BMRow row_from_record(std::string_view line);

/// Reads a cache file. A missing file yields no rows; a wrong header, a
/// malformed record or two conflicting records for one n throw ParseError.
std::vector<BMRow> load_row_file(const std::filesystem::path& path);

/// Appends the rows whose n is not already present, creating the file (with
/// header) if needed. Returns how many records were written. Throws
/// std::runtime_error when the file cannot be written.
std::size_t append_row_file(const std::filesystem::path& path, const std::vector<BMRow>& rows);

/// Memoized Boros-Moll rows shared by verification consumers.
///
/// Lookups take a shared lock; misses take the exclusive lock and extend the
/// table by the one-step recurrence from the nearest cached row below.
/// References returned by row() stay valid for the cache's lifetime.
class RowCache {
 public:
  RowCache() = default;
  RowCache(const RowCache&) = delete;
  RowCache& operator=(const RowCache&) = delete;

  const BMRow& row(unsigned n);
  /// Ensures rows 0..n_max are present.
  void fill(unsigned n_max);

  /// Inserts an externally computed row; an existing row for the same n must
  /// be identical (throws std::logic_error otherwise).
  void insert(BMRow row);

  bool contains(unsigned n) const;
  std::size_t size() const;
  std::vector<BMRow> snapshot() const;

  /// Loads rows from a cache file; every loaded row is checked against its
  /// invariants.
  std::size_t load(const std::filesystem::path& path);
  std::size_t save(const std::filesystem::path& path) const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<unsigned, BMRow> rows_;
};

}  // namespace bmpoly
