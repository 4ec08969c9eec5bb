#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"

#include "bkcheck/schubert.hpp"
#include "bkcheck/weyl_group.hpp"

namespace bkcheck {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnv = "BKCHECK_CACHE_DIR";

/// On-disk store of derived tables, one JSON file per (type, kind):
///   {"format_version": 1, "type": "B3", "kind": "weyl", "crc32": ..., "payload": {...}}
/// The checksum covers payload.dump(). Entries with another version, a bad checksum or
/// unparsable contents are reported on the warning stream and treated as missing.
class Cache {
 public:
  /// An empty directory disables the cache.
  explicit Cache(std::filesystem::path dir, std::ostream* warnings = nullptr);
  /// The flag value when non-empty, else the environment variable, else disabled.
  static Cache from_settings(const std::string& flag_dir, std::ostream* warnings = nullptr);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& type, const std::string& kind) const;

  std::optional<nlohmann::json> get(const std::string& type, const std::string& kind) const;
  /// Writes through a temporary file and a rename. I/O failures throw std::runtime_error naming the path.
  void put(const std::string& type, const std::string& kind, const nlohmann::json& payload) const;
  void warn(const std::string& message) const;

 private:
  std::filesystem::path dir_;
  std::ostream* warnings_;
};

std::uint32_t crc32_of(const std::string& bytes);

nlohmann::json weyl_to_json(const WeylGroup& W);
WeylGroup weyl_from_json(std::shared_ptr<const RootSystem> roots, const nlohmann::json& payload);
nlohmann::json schubert_to_json(const SchubertPolyTable& table);
SchubertPolyTable schubert_from_json(const WeylGroup& W, const nlohmann::json& payload);

/// Enumerates or restores the group; a rebuilt group is written back.
WeylGroup load_weyl_group(const Cache& cache, std::shared_ptr<const RootSystem> roots, std::size_t cap = kDefaultWeylCap);
std::unique_ptr<SchubertPolyTable> load_schubert_table(const Cache& cache, const WeylGroup& W);

}  // namespace bkcheck
