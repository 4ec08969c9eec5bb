#include "bkcheck/cache.hpp"

#include <zlib.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bkcheck/errors.hpp"

namespace bkcheck {

namespace fs = std::filesystem;

std::uint32_t crc32_of(const std::string& bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

Cache::Cache(fs::path dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings ? warnings : &std::cerr) {}

Cache Cache::from_settings(const std::string& flag_dir, std::ostream* warnings) {
  if (!flag_dir.empty()) return Cache(flag_dir, warnings);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return Cache(env, warnings);
  return Cache(fs::path{}, warnings);
}

fs::path Cache::path_for(const std::string& type, const std::string& kind) const {
  return dir_ / (type + "." + kind + ".json");
}

void Cache::warn(const std::string& message) const { *warnings_ << "warning: " << message << '\n'; }

std::optional<nlohmann::json> Cache::get(const std::string& type, const std::string& kind) const {
  if (!enabled()) return std::nullopt;
  const fs::path path = path_for(type, kind);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    warn("cache entry " + path.string() + " is unreadable, rebuilding");
    return std::nullopt;
  }
  if (doc.value("format_version", 0) != kCacheFormatVersion) {
    warn("cache entry " + path.string() + " has format_version " + doc.value("format_version", nlohmann::json(0)).dump() +
         ", rebuilding");
    return std::nullopt;
  }
  if (doc.value("type", "") != type || doc.value("kind", "") != kind || !doc.contains("payload") ||
      doc.value("crc32", std::uint32_t{0}) != crc32_of(doc["payload"].dump())) {
    warn("cache entry " + path.string() + " failed its checksum, rebuilding");
    return std::nullopt;
  }
  return std::move(doc["payload"]);
}

void Cache::put(const std::string& type, const std::string& kind, const nlohmann::json& payload) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const nlohmann::json doc = {{"format_version", kCacheFormatVersion},
                              {"type", type},
                              {"kind", kind},
                              {"crc32", crc32_of(payload.dump())},
                              {"payload", payload}};
  const fs::path path = path_for(type, kind);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump();
    if (!out) throw std::runtime_error("write failed for cache file " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot move cache file into place at " + path.string() + ": " + ec.message());
}

nlohmann::json weyl_to_json(const WeylGroup& W) {
  nlohmann::json columns = nlohmann::json::array();
  for (WeylElement w = 0; w < W.size(); ++w) {
    const ColumnKey& key = W.columns(w);
    columns.push_back(std::vector<int>(key.begin(), key.begin() + W.rank()));
  }
  return {{"roots", to_json(W.roots())}, {"columns", std::move(columns)}};
}

WeylGroup weyl_from_json(std::shared_ptr<const RootSystem> roots, const nlohmann::json& payload) {
  if (payload.at("roots").at("type").get<std::string>() != roots->label())
    throw ValidationError("stored group belongs to another root system");
  std::vector<ColumnKey> keys;
  for (const auto& entry : payload.at("columns")) {
    if (static_cast<int>(entry.size()) != roots->rank()) throw ValidationError("stored group column has the wrong size");
    ColumnKey key{};
    for (int i = 0; i < roots->rank(); ++i) {
      const int r = entry[static_cast<std::size_t>(i)].get<int>();
      if (r < 0 || r >= roots->num_roots()) throw ValidationError("stored group column names an unknown root");
      key[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(r);
    }
    keys.push_back(key);
  }
  return WeylGroup::from_columns(std::move(roots), keys);
}

nlohmann::json schubert_to_json(const SchubertPolyTable& table) {
  nlohmann::json polys = nlohmann::json::array();
  for (const SchubertPoly& p : table.polys()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({m, to_string(c)});
    polys.push_back(std::move(terms));
  }
  return {{"polys", std::move(polys)}};
}

SchubertPolyTable schubert_from_json(const WeylGroup& W, const nlohmann::json& payload) {
  std::vector<SchubertPoly> polys;
  for (const auto& terms : payload.at("polys")) {
    SchubertPoly p(W.rank());
    for (const auto& t : terms) p.add_term(t.at(0).get<SchubertPoly::Monomial>(), parse_rational(t.at(1).get<std::string>()));
    polys.push_back(std::move(p));
  }
  return SchubertPolyTable(W, std::move(polys));
}

WeylGroup load_weyl_group(const Cache& cache, std::shared_ptr<const RootSystem> roots, std::size_t cap) {
  const std::string type = roots->label();
  if (auto payload = cache.get(type, "weyl")) {
    try {
      return weyl_from_json(roots, *payload);
    } catch (const std::exception& e) {
      cache.warn("cache entry " + cache.path_for(type, "weyl").string() + " is inconsistent (" + e.what() + "), rebuilding");
    }
  }
  WeylGroup W = WeylGroup::enumerate(roots, cap);
  cache.put(type, "weyl", weyl_to_json(W));
  return W;
}

std::unique_ptr<SchubertPolyTable> load_schubert_table(const Cache& cache, const WeylGroup& W) {
  const std::string type = W.roots().label();
  if (auto payload = cache.get(type, "schubert")) {
    try {
      return std::make_unique<SchubertPolyTable>(schubert_from_json(W, *payload));
    } catch (const std::exception& e) {
      cache.warn("cache entry " + cache.path_for(type, "schubert").string() + " is inconsistent (" + e.what() + "), rebuilding");
    }
  }
  auto table = std::make_unique<SchubertPolyTable>(W);
  cache.put(type, "schubert", schubert_to_json(*table));
  return table;
}

}  // namespace bkcheck
