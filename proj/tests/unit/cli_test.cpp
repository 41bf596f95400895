#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "run_manifest.hpp"
#include "zlab/errors.hpp"

using namespace zlab;

namespace {
std::filesystem::path temp(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("precision config JSON round trip") {
  PrecisionConfig cfg;
  cfg.abs_tol = 1e-9;
  cfg.em_terms_policy.offset = 70;
  const auto j = cli::precision_to_json(cfg);
  CHECK(cli::precision_from_json(j) == cfg);
  CHECK_THROWS_AS(cli::precision_from_json(nlohmann::json{{"bogus", 1}}), ConfigError);
  CHECK_THROWS_AS(cli::precision_from_json(nlohmann::json{{"abs_tol", -1.0}}), ConfigError);
  CHECK_THROWS_AS(cli::precision_from_json(nlohmann::json{{"abs_tol", "x"}}), ConfigError);
}

TEST_CASE("load_config accepts bare, wrapped and manifest forms") {
  const auto bare = temp("zlab_cfg_bare.json");
  std::ofstream(bare) << R"({"quad_step_cap": 0.05})";
  CHECK(cli::load_config(bare).quad_step_cap == 0.05);

  const auto wrapped = temp("zlab_cfg_wrapped.json");
  std::ofstream(wrapped) << R"({"precision": {"max_newton_iters": 30}})";
  CHECK(cli::load_config(wrapped).max_newton_iters == 30);

  const auto lines = temp("zlab_cfg_manifest.jsonl");
  std::filesystem::remove(lines);
  cli::RunManifest m1;
  m1.precision.sigma_eps = 0.02;
  m1.append_to(lines);
  cli::RunManifest m2;
  m2.precision.sigma_eps = 0.03;
  m2.outputs.push_back({"out.csv", cli::sha256_bytes("a,b\n"), 0});
  m2.append_to(lines);
  CHECK(cli::load_config(lines).sigma_eps == 0.03);

  std::ifstream in(lines);
  std::string l1, l2;
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(nlohmann::json::parse(l1).at("precision").at("sigma_eps") == 0.02);
  CHECK(nlohmann::json::parse(l2).at("outputs").size() == 1);

  CHECK_THROWS_AS(cli::load_config(temp("zlab_cfg_missing.json")), ConfigError);
  for (const auto& p : {bare, wrapped, lines}) std::filesystem::remove(p);
}

TEST_CASE("sha256 digests") {
  CHECK(cli::sha256_bytes("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(cli::sha256_bytes("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
