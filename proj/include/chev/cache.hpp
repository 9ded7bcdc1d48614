#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "chev/chevalley.hpp"
#include "json.hpp"

namespace chev {

struct CacheKey {
  std::string kind;  // subcommand producing the value
  std::string type;
  int rank = 0;
  Weight lambda;
  std::string w;
  std::string method;
  std::string version = CHEV_VERSION;

  nlohmann::json to_json() const;
  std::string digest() const;  // sha256 of the canonical JSON form
};

// Content-addressed JSON store.  Entries that fail to parse or whose stored key does not
// match are treated as misses and overwritten.  Filesystem errors throw std::runtime_error.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  // CHEV_CACHE_DIR, or nothing when unset or empty
  static std::optional<ResultCache> from_env();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;
  std::optional<nlohmann::json> get(const CacheKey& key) const;
  // write to a temporary file and rename over the entry
  void put(const CacheKey& key, const nlohmann::json& value) const;
  nlohmann::json get_or_compute(const CacheKey& key, const std::function<nlohmann::json()>& compute,
                                bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

ChevalleyTable table_from_json(const SystemPtr& sys, const nlohmann::json& j);

// chevalley(sys, w, lambda, m) through the cache when one is given
ChevalleyTable cached_chevalley(const ResultCache* cache, const SystemPtr& sys, Elt w, const Weight& lambda, Method m,
                                bool* hit = nullptr);

}  // namespace chev
