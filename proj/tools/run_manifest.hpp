#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "zlab/precision.hpp"

namespace zlab::cli {

nlohmann::json precision_to_json(const PrecisionConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
PrecisionConfig precision_from_json(const nlohmann::json& j);

/// Reads a pinned configuration from either a bare precision object, an object
/// with a "precision" member, or a JSON Lines manifest (last record wins).
PrecisionConfig load_config(const std::filesystem::path& file);

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& file);
std::string sha256_bytes(const std::string& bytes);

struct OutputRecord {
  std::string path;
  std::string sha256;
  std::size_t rows = 0;
};

/// One run of the CLI. Appended as a single JSON line; existing lines are never
/// rewritten.
struct RunManifest {
  std::vector<std::string> command_line;
  PrecisionConfig precision;
  int jobs = 1;
  std::map<std::string, double> substitution_constants;
  std::vector<std::string> cbar_keys;
  std::vector<OutputRecord> outputs;
  double wall_clock_seconds = 0.0;
  std::string started_at;
  int exit_code = 0;
  std::string error_class;

  nlohmann::json to_json() const;
  void append_to(const std::filesystem::path& file) const;
};

}  // namespace zlab::cli
