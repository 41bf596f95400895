#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace zlab {

struct CachedConstant {
  double value = 0.0;
  double spread = 0.0;
  std::string timestamp;
};

/// JSON file of fitted constants: {"<key>": {"cbar": v, "spread": s, "timestamp": iso}}.
/// Reads are tolerant of a missing file; writes go through a temp file and rename.
class ConstantsCache {
 public:
  explicit ConstantsCache(std::filesystem::path file);

  /// $ZLAB_CACHE_DIR/constants.json, or ./zlab-cache/constants.json when unset.
  static ConstantsCache from_environment();

  std::optional<CachedConstant> get(const std::string& key) const;
  void put(const std::string& key, const CachedConstant& c);
  /// Lexicographically greatest key starting with prefix, if any.
  std::optional<std::string> latest_with_prefix(const std::string& prefix) const;

  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mu_;
};

}  // namespace zlab
