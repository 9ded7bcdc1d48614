#include "chev/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unistd.h>

#include "chev/render.hpp"

namespace chev {

namespace fs = std::filesystem;

nlohmann::json CacheKey::to_json() const {
  return {{"kind", kind},     {"type", type},     {"rank", rank},      {"lambda", lambda.to_vector()},
          {"w", w},           {"method", method}, {"version", version}};
}

std::string CacheKey::digest() const {
  std::string s = to_json().dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  if (EVP_Digest(s.data(), s.size(), md, &n, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < n; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  if (!fs::is_directory(dir_)) throw std::runtime_error("cache path is not a directory: " + dir_.string());
}

std::optional<ResultCache> ResultCache::from_env() {
  const char* d = std::getenv("CHEV_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return ResultCache(d);
}

fs::path ResultCache::path_for(const CacheKey& key) const { return dir_ / (key.digest() + ".json"); }

std::optional<nlohmann::json> ResultCache::get(const CacheKey& key) const {
  fs::path p = path_for(key);
  std::error_code ec;
  if (!fs::exists(p, ec)) {
    if (ec) throw std::runtime_error("cannot stat " + p.string() + ": " + ec.message());
    return std::nullopt;
  }
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read cache entry " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read cache entry " + p.string());
  auto doc = nlohmann::json::parse(ss.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("key") || !doc.contains("value")) return std::nullopt;
  if (doc["key"] != key.to_json()) return std::nullopt;
  return doc["value"];
}

void ResultCache::put(const CacheKey& key, const nlohmann::json& value) const {
  static std::atomic<unsigned> counter{0};
  fs::path p = path_for(key);
  std::ostringstream tmpname;
  tmpname << p.filename().string() << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "." << counter++;
  fs::path tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << nlohmann::json{{"key", key.to_json()}, {"value", value}}.dump() << "\n";
    out.flush();
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot store cache entry " + p.string() + ": " + ec.message());
  }
}

nlohmann::json ResultCache::get_or_compute(const CacheKey& key, const std::function<nlohmann::json()>& compute,
                                           bool* hit) const {
  if (auto v = get(key)) {
    if (hit) *hit = true;
    return *v;
  }
  if (hit) *hit = false;
  nlohmann::json v = compute();
  put(key, v);
  return v;
}

ChevalleyTable table_from_json(const SystemPtr& sys, const nlohmann::json& j) {
  ChevalleyTable t;
  t.sys = sys;
  if (j.at("type").get<std::string>() != sys->label()) throw std::invalid_argument("table is for another root system");
  t.w = sys->parse_elt(j.at("w").get<std::string>());
  t.lambda = Weight::from(j.at("lambda").get<std::vector<int>>());
  t.method = j.at("method").get<std::string>();
  for (const auto& e : j.at("entries"))
    t.entries.emplace(sys->parse_elt(e.at("u").get<std::string>()), poly_from_json(e.at("coeff"), sys->rank()));
  return t;
}

ChevalleyTable cached_chevalley(const ResultCache* cache, const SystemPtr& sys, Elt w, const Weight& lambda, Method m,
                                bool* hit) {
  if (!cache) {
    if (hit) *hit = false;
    return chevalley(sys, w, lambda, m);
  }
  CacheKey key{"chevalley", sys->label(), sys->rank(), lambda, sys->elt_str(w), method_name(m)};
  auto j = cache->get_or_compute(key, [&] { return table_json(chevalley(sys, w, lambda, m)); }, hit);
  try {
    return table_from_json(sys, j);
  } catch (const std::exception&) {
    // well-formed JSON but not a table: recompute and replace
    auto t = chevalley(sys, w, lambda, m);
    cache->put(key, table_json(t));
    if (hit) *hit = false;
    return t;
  }
}

}  // namespace chev
