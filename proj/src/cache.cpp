#include "zlab/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "zlab/errors.hpp"

namespace zlab {
namespace {

using nlohmann::json;

json load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return json::object();
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw ConfigError("constants cache is not a JSON object: " + file.string());
    return j;
  } catch (const json::parse_error& e) {
    throw ConfigError("constants cache unreadable: " + file.string() + ": " + e.what());
  }
}

std::string now_iso() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ConstantsCache::ConstantsCache(std::filesystem::path file) : file_(std::move(file)) {}

ConstantsCache ConstantsCache::from_environment() {
  const char* dir = std::getenv("ZLAB_CACHE_DIR");
  const std::filesystem::path base = (dir && *dir) ? dir : "zlab-cache";
  return ConstantsCache(base / "constants.json");
}

std::optional<CachedConstant> ConstantsCache::get(const std::string& key) const {
  std::lock_guard lock(mu_);
  const json j = load(file_);
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  CachedConstant c;
  c.value = it->at("cbar").get<double>();
  c.spread = it->value("spread", 0.0);
  c.timestamp = it->value("timestamp", "");
  return c;
}

void ConstantsCache::put(const std::string& key, const CachedConstant& c) {
  std::lock_guard lock(mu_);
  json j = load(file_);
  j[key] = {{"cbar", c.value},
            {"spread", c.spread},
            {"timestamp", c.timestamp.empty() ? now_iso() : c.timestamp}};
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
  const auto tmp = std::filesystem::path(file_.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw ConfigError("cannot write constants cache: " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file_);
}

std::optional<std::string> ConstantsCache::latest_with_prefix(const std::string& prefix) const {
  std::lock_guard lock(mu_);
  const json j = load(file_);
  std::optional<std::string> best;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key().rfind(prefix, 0) != 0) continue;
    if (!best || it.key() > *best) best = it.key();
  }
  return best;
}

}  // namespace zlab
