#include "run_manifest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "zlab/errors.hpp"

namespace zlab::cli {

using nlohmann::json;

json precision_to_json(const PrecisionConfig& cfg) {
  return {{"abs_tol", cfg.abs_tol},
          {"quad_step_cap", cfg.quad_step_cap},
          {"em_terms_policy",
           {{"scale", cfg.em_terms_policy.scale},
            {"offset", cfg.em_terms_policy.offset},
            {"max_corrections", cfg.em_terms_policy.max_corrections}}},
          {"max_newton_iters", cfg.max_newton_iters},
          {"sigma_eps", cfg.sigma_eps}};
}

PrecisionConfig precision_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("precision config must be a JSON object");
  PrecisionConfig cfg;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      if (k == "abs_tol") {
        cfg.abs_tol = it->get<double>();
      } else if (k == "quad_step_cap") {
        cfg.quad_step_cap = it->get<double>();
      } else if (k == "max_newton_iters") {
        cfg.max_newton_iters = it->get<int>();
      } else if (k == "sigma_eps") {
        cfg.sigma_eps = it->get<double>();
      } else if (k == "em_terms_policy") {
        for (auto p = it->begin(); p != it->end(); ++p) {
          if (p.key() == "scale") {
            cfg.em_terms_policy.scale = p->get<double>();
          } else if (p.key() == "offset") {
            cfg.em_terms_policy.offset = p->get<int>();
          } else if (p.key() == "max_corrections") {
            cfg.em_terms_policy.max_corrections = p->get<int>();
          } else {
            throw ConfigError("unknown em_terms_policy key: " + p.key());
          }
        }
      } else {
        throw ConfigError("unknown precision key: " + k);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad precision config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

PrecisionConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config: " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    // JSON Lines manifest: take the last non-empty record.
    std::istringstream lines(text);
    std::string line, last;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) last = line;
    }
    try {
      j = json::parse(last);
    } catch (const json::parse_error& e) {
      throw ConfigError("config is neither JSON nor JSON Lines: " + file.string());
    }
  }
  if (j.is_object() && j.contains("precision")) return precision_from_json(j.at("precision"));
  return precision_from_json(j);
}

namespace {

std::string hex(const unsigned char* p, unsigned n) {
  std::ostringstream os;
  for (unsigned i = 0; i < n; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(p[i]);
  return os.str();
}

struct CtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

}  // namespace

std::string sha256_bytes(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx(EVP_MD_CTX_new());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned n = 0;
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx.get(), md, &n);
  return hex(md, n);
}

std::string sha256_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read output for digest: " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return sha256_bytes(ss.str());
}

json RunManifest::to_json() const {
  json outs = json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}, {"rows", o.rows}});
  json j{{"command_line", command_line},
         {"precision", precision_to_json(precision)},
         {"jobs", jobs},
         {"substitution_constants", substitution_constants},
         {"cbar_keys", cbar_keys},
         {"outputs", outs},
         {"wall_clock_seconds", wall_clock_seconds},
         {"started_at", started_at},
         {"exit_code", exit_code}};
  if (!error_class.empty()) j["error_class"] = error_class;
  return j;
}

void RunManifest::append_to(const std::filesystem::path& file) const {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::app);
  if (!out) throw ConfigError("cannot append manifest: " + file.string());
  out << to_json().dump() << '\n';
}

}  // namespace zlab::cli
