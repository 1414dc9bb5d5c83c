#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hyperchrome/extremal.hpp"

namespace hyperchrome::cli {

/// Extremal results persisted as JSON Lines, one record per line:
///
///   {"key":"<hex>","kind":"ex","parameter":7,"status":"exact","value":7,
///    "witness":{"edges":[[1,2,4],...],"n":7}}
///
/// `key` is the hex canonical form of the pattern, so the pattern can be
/// rebuilt from it. Every line is revalidated on load; lines that fail to
/// parse or to revalidate are dropped and counted in evicted().
class ResultCache {
  public:
    explicit ResultCache(std::filesystem::path path);

    /// Exact record for (kind, pattern, parameter), if cached.
    std::optional<ResultRecord> lookup(RecordKind kind, const Hypergraph& pattern, std::size_t parameter) const;

    /// Inserts or replaces; an exact record is never replaced by a lower bound.
    void store(const ResultRecord& record);

    /// Writes all records to a temporary sibling file and renames it over
    /// the cache path.
    void save() const;

    std::size_t size() const noexcept { return records_.size(); }
    std::size_t evicted() const noexcept { return evicted_; }
    const std::filesystem::path& path() const noexcept { return path_; }

  private:
    std::filesystem::path path_;
    std::vector<ResultRecord> records_;
    std::size_t evicted_ = 0;
};

/// Rebuilds the pattern encoded by a hex canonical key.
std::optional<Hypergraph> pattern_from_key(const std::string& key);

std::string record_to_line(const ResultRecord& record);
/// Throws std::exception subclasses on malformed input.
ResultRecord record_from_line(const std::string& line);

}  // namespace hyperchrome::cli
