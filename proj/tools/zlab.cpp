// zlab: command-line front end for the zeta laboratory.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "run_manifest.hpp"
#include "zlab/csv.hpp"
#include "zlab/errors.hpp"
#include "zlab/gram.hpp"
#include "zlab/ladders.hpp"
#include "zlab/moments.hpp"
#include "zlab/parallel.hpp"
#include "zlab/sums.hpp"
#include "zlab/zeros.hpp"
#include "zlab/zeta_core.hpp"

namespace {

using namespace zlab;
using zlab::cli::RunManifest;

constexpr int kExitFlags = 2;
constexpr int kExitCompute = 3;
constexpr int kExitPrecision = 4;

std::string now_iso() {
  const std::time_t tt = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Collects one CSV table and records it in the manifest on flush.
class Output {
 public:
  Output(std::string path, RunManifest& manifest) : path_(std::move(path)), manifest_(manifest) {}
  std::ostream& stream() { return buf_; }

  void flush() {
    const std::string text = buf_.str();
    std::size_t lines = 0;
    for (char c : text) lines += (c == '\n');
    if (path_.empty() || path_ == "-") {
      std::cout << text;
    } else {
      const std::filesystem::path p(path_);
      if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
      std::ofstream out(p, std::ios::binary);
      if (!out) throw ConfigError("cannot write output: " + path_);
      out << text;
    }
    manifest_.outputs.push_back(
        {path_.empty() ? "-" : path_, cli::sha256_bytes(text), lines > 0 ? lines - 1 : 0});
  }

 private:
  std::string path_;
  RunManifest& manifest_;
  std::ostringstream buf_;
};

struct Globals {
  int jobs = 0;
  std::string config;
  std::string out;
  std::string manifest = "zlab-manifest.jsonl";
};

CbarEstimate cached_cbar(int l, double T, double H, RunManifest& m) {
  ConstantsCache cache = ConstantsCache::from_environment();
  const std::string key = cbar_cache_key(l, T, H);
  const auto c = cache.get(key);
  if (!c) {
    throw ConfigError("no cached cbar for " + key + " in " + cache.file().string() +
                      "; run `zlab cbar` first");
  }
  CbarEstimate est;
  est.l = l;
  est.T = T;
  est.H = H;
  est.cbar = c->value;
  est.spread = c->spread;
  m.cbar_keys.push_back(key);
  return est;
}

void log_constant(RunManifest& m, const FunctionalApproximant& f) {
  std::string name = std::string("K_") + to_string(f.kind) + "(";
  name += f.kind == FunctionalKind::B ? "l=" + std::to_string(f.l) : "sigma=" + csv::format(f.sigma);
  m.substitution_constants[name + ")"] = f.substitution;
}

void print_status(const std::string& label, bool pass, const std::string& detail) {
  std::cerr << (pass ? "PASS " : "FAIL ") << label << ": " << detail << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.started_at = now_iso();
  for (int i = 0; i < argc; ++i) manifest.command_line.emplace_back(argv[i]);

  Globals g;
  CLI::App app{"zlab: Hardy Z, Gram sums, ladders and cross-bred functionals"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", g.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--config", g.config, "Pin PrecisionConfig from a JSON file or manifest")
      ->check(CLI::ExistingFile);
  app.add_option("--out", g.out, "CSV output path (default: stdout)");
  app.add_option("--manifest", g.manifest, "Run manifest (JSON Lines, append-only)");

  PrecisionConfig cfg;
  std::function<void()> action;
  bool verify_failed = false;

  // theta / z
  std::vector<double> ts;
  double from = 0.0, to = 0.0, step = 0.0;
  auto* theta_cmd = app.add_subcommand("theta", "Riemann-Siegel theta");
  theta_cmd->add_option("--t", ts, "Heights")->delimiter(',')->required();
  theta_cmd->callback([&] {
    action = [&] {
      Output o(g.out, manifest);
      csv::Writer w(o.stream(), {"t", "theta"});
      for (double t : ts) w.row(t, theta(Height(t)));
      o.flush();
    };
  });

  auto* z_cmd = app.add_subcommand("z", "Hardy Z(t)");
  z_cmd->add_option("--t", ts, "Heights")->delimiter(',');
  z_cmd->add_option("--from", from, "Grid start");
  z_cmd->add_option("--to", to, "Grid end (inclusive)");
  z_cmd->add_option("--step", step, "Grid step")->check(CLI::PositiveNumber);
  z_cmd->callback([&] {
    if (ts.empty() && !(step > 0.0 && to >= from)) {
      throw CLI::ValidationError("z", "give --t or --from/--to/--step");
    }
    action = [&] {
      if (ts.empty()) {
        const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < n; ++i) ts.push_back(from + step * static_cast<double>(i));
      }
      const auto zs = parallel::map_indices<double>(ts.size(), [&](std::size_t i) {
        return hardy_z(Height(ts[i]), cfg);
      });
      Output o(g.out, manifest);
      csv::Writer w(o.stream(), {"t", "z"});
      for (std::size_t i = 0; i < ts.size(); ++i) w.row(ts[i], zs[i]);
      o.flush();
    };
  });

  // gram
  auto* gram_cmd = app.add_subcommand("gram", "Gram points in [from, to)");
  gram_cmd->add_option("--from", from)->required();
  gram_cmd->add_option("--to", to)->required();
  gram_cmd->callback([&] {
    action = [&] {
      Output o(g.out, manifest);
      write_gram_csv(o.stream(), gram_range(Height(from), Height(to), cfg));
      o.flush();
    };
  });

  // moments
  std::string moment_kind = "critical2";
  double sigma = 1.0;
  std::vector<int> ls{1};
  auto* mom_cmd = app.add_subcommand("moments", "Interval moments");
  mom_cmd->add_option("--kind", moment_kind)
      ->check(CLI::IsMember({"critical2", "sigma2", "s1moment"}));
  mom_cmd->add_option("--from", from)->required();
  mom_cmd->add_option("--to", to)->required();
  mom_cmd->add_option("--sigma", sigma);
  mom_cmd->add_option("--l", ls)->delimiter(',');
  mom_cmd->callback([&] {
    action = [&] {
      std::vector<MomentEstimate> rows;
      if (moment_kind == "critical2") {
        rows.push_back(second_moment_critical(Height(from), Height(to), cfg));
      } else if (moment_kind == "sigma2") {
        rows.push_back(second_moment_sigma(sigma, Height(from), Height(to), cfg));
      } else {
        rows = s1_moments(ls, Height(from), Height(to), cfg);
      }
      Output o(g.out, manifest);
      write_moment_csv(o.stream(), rows);
      o.flush();
    };
  });

  // cbar
  int l = 1;
  double big_t = 0.0, window = 0.0;
  auto* cbar_cmd = app.add_subcommand("cbar", "Estimate cbar(l) and store it in the constants cache");
  cbar_cmd->add_option("--l", l)->check(CLI::PositiveNumber);
  cbar_cmd->add_option("--T", big_t)->required();
  cbar_cmd->add_option("--H", window)->required();
  cbar_cmd->callback([&] {
    action = [&] {
      ConstantsCache cache = ConstantsCache::from_environment();
      const CbarEstimate est = estimate_cbar(l, Height(big_t), window, cfg, &cache);
      manifest.cbar_keys.push_back(est.cache_key());
      Output o(g.out, manifest);
      csv::Writer w(o.stream(), {"l", "T", "H", "cbar", "spread", "key"});
      w.row(est.l, est.T, est.H, est.cbar, est.spread, est.cache_key());
      o.flush();
    };
  });

  // ladder
  int k = 1;
  auto* ladder_cmd = app.add_subcommand("ladder", "Reverse iterations of the Jacob ladder");
  ladder_cmd->add_option("--T", big_t)->required();
  ladder_cmd->add_option("--k", k)->check(CLI::Range(1, 20));
  ladder_cmd->callback([&] {
    action = [&] {
      const LadderChain chain = ladder_chain(Height(big_t), k, cfg);
      Output o(g.out, manifest);
      write_ladder_csv(o.stream(), chain);
      o.flush();
      if (chain.iterates.size() >= 2) {
        const PartitionReport rep = partition_report(chain);
        for (std::size_t i = 0; i < rep.gap_ratios.size(); ++i) {
          std::cerr << "gap_ratio[" << i + 1 << "] = " << csv::format(rep.gap_ratios[i])
                    << "  integral_ratio = " << csv::format(rep.integral_ratios[i]) << '\n';
        }
      }
    };
  });

  // sum
  std::string sum_kind = "pair";
  auto* sum_cmd = app.add_subcommand("sum", "Gram-point sums over [from, to)");
  sum_cmd->add_option("--kind", sum_kind)->check(CLI::IsMember({"pair", "fourth"}));
  sum_cmd->add_option("--from", from);
  sum_cmd->add_option("--to", to);
  sum_cmd->add_option("--T", big_t, "Shorthand for [T, 2T)");
  sum_cmd->callback([&] {
    if (big_t > 0.0) {
      from = big_t;
      to = 2.0 * big_t;
    }
    if (!(to > from)) throw CLI::ValidationError("sum", "give --T or --from < --to");
    action = [&] {
      const SumResult r = sum_kind == "pair" ? titchmarsh_sum(Height(from), Height(to), cfg)
                                             : fourth_power_sum(Height(from), Height(to), cfg);
      Output o(g.out, manifest);
      write_sum_csv(o.stream(), std::span(&r, 1));
      o.flush();
    };
  });

  // functional / fermat / chain share these.
  std::string fkind = "A";
  double x = 1.0;
  std::vector<double> taus;
  std::vector<double> heights;
  double cbar_t = 1e4, cbar_h = 1e3;
  auto add_functional_flags = [&](CLI::App* c) {
    c->add_option("--kind", fkind)->check(CLI::IsMember({"A", "B", "C"}));
    c->add_option("--sigma", sigma);
    c->add_option("--l", l)->check(CLI::PositiveNumber);
    c->add_option("--cbar-T", cbar_t, "Window of the cached cbar (kind B)");
    c->add_option("--cbar-H", cbar_h);
  };
  auto make_param = [&](FunctionalKind kind) {
    FunctionalParam p;
    p.sigma = sigma;
    p.l = l;
    if (kind == FunctionalKind::B) p.cbar = cached_cbar(l, cbar_t, cbar_h, manifest);
    return p;
  };

  auto* fun_cmd = app.add_subcommand("functional", "Cross-bred functional approximants");
  add_functional_flags(fun_cmd);
  fun_cmd->add_option("--x", x)->check(CLI::PositiveNumber);
  fun_cmd->add_option("--tau", taus)->delimiter(',');
  fun_cmd->add_option("--heights", heights, "Implied heights T instead of --tau")->delimiter(',');
  fun_cmd->callback([&] {
    if (taus.empty() == heights.empty()) {
      throw CLI::ValidationError("functional", "give exactly one of --tau and --heights");
    }
    action = [&] {
      const FunctionalKind kind = parse_functional_kind(fkind);
      const FunctionalParam p = make_param(kind);
      if (taus.empty()) {
        const double c = substitution_constant(kind, p, cfg);
        for (double T : heights) taus.push_back(T / c / x);
      }
      std::vector<FunctionalApproximant> rows;
      for (double tau : taus) rows.push_back(functional_approximant(kind, x, p, tau, cfg));
      for (const auto& f : rows) log_constant(manifest, f);
      Output o(g.out, manifest);
      write_functional_csv(o.stream(), rows);
      o.flush();
    };
  });

  std::uint64_t fx = 1, fy = 1, fz = 1;
  unsigned fn = 3;
  std::uint64_t search_limit = 0;
  unsigned n_max = 12;
  auto* fermat_cmd = app.add_subcommand("fermat", "Fermat rationals: exact check plus functional trace");
  add_functional_flags(fermat_cmd);
  fermat_cmd->add_option("--x", fx)->check(CLI::PositiveNumber);
  fermat_cmd->add_option("--y", fy)->check(CLI::PositiveNumber);
  fermat_cmd->add_option("--z", fz)->check(CLI::PositiveNumber);
  fermat_cmd->add_option("--n", fn)->check(CLI::Range(3u, 1000u));
  fermat_cmd->add_option("--tau", taus)->delimiter(',');
  fermat_cmd->add_option("--search", search_limit, "Brute-force x, y, z <= limit instead");
  fermat_cmd->add_option("--n-max", n_max);
  fermat_cmd->callback([&] {
    if (search_limit == 0 && taus.empty()) {
      throw CLI::ValidationError("fermat", "give --tau or --search");
    }
    action = [&] {
      Output o(g.out, manifest);
      if (search_limit > 0) {
        const auto found = fermat_search(search_limit, fn, n_max);
        csv::Writer w(o.stream(), {"x", "y", "z", "n"});
        for (const auto& s : found) {
          w.row(static_cast<std::size_t>(s.x), static_cast<std::size_t>(s.y),
                static_cast<std::size_t>(s.z), static_cast<std::size_t>(s.n));
        }
        std::cerr << "solutions found: " << found.size() << '\n';
      } else {
        const FunctionalKind kind = parse_functional_kind(fkind);
        const FermatWitness wit =
            fermat_equivalence_check(fx, fy, fz, fn, kind, make_param(kind), taus, cfg);
        for (const auto& f : wit.approximants) log_constant(manifest, f);
        write_fermat_csv(o.stream(), std::span(&wit, 1));
        std::cerr << to_string(wit.verdict) << ": " << wit.verdict_text << '\n';
      }
      o.flush();
    };
  });

  double tau = 0.0;
  bool same_tau = false;
  auto* chain_cmd = app.add_subcommand("chain", "Compare functionals A, B and C");
  chain_cmd->add_option("--x", x)->check(CLI::PositiveNumber);
  chain_cmd->add_option("--sigma", sigma);
  chain_cmd->add_option("--l", l)->check(CLI::PositiveNumber);
  chain_cmd->add_option("--tau", tau)->required()->check(CLI::PositiveNumber);
  chain_cmd->add_option("--cbar-T", cbar_t);
  chain_cmd->add_option("--cbar-H", cbar_h);
  chain_cmd->add_flag("--same-tau", same_tau, "Use one tau for all kinds instead of one height");
  chain_cmd->callback([&] {
    action = [&] {
      const CbarEstimate cb = cached_cbar(l, cbar_t, cbar_h, manifest);
      const ChainReport rep = chain_compare(x, sigma, l, cb, tau, !same_tau, cfg);
      for (const auto* f : {&rep.a, &rep.b, &rep.c}) log_constant(manifest, *f);
      const FunctionalApproximant rows[3] = {rep.a, rep.b, rep.c};
      Output o(g.out, manifest);
      write_functional_csv(o.stream(), rows);
      o.flush();
      std::cerr << "dev_AB=" << csv::format(rep.dev_ab) << " dev_AC=" << csv::format(rep.dev_ac)
                << " dev_BC=" << csv::format(rep.dev_bc) << '\n';
      print_status("chain", rep.pass, "pairwise deviations within summed rel_err bands");
      verify_failed = !rep.pass;
    };
  });

  // verify
  std::string suite = "asymptotics";
  int count = 100;
  std::uint64_t seed = 20240601;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"asymptotics", "gram", "branch", "ladder"}));
  verify_cmd->add_option("--heights", heights)->delimiter(',');
  verify_cmd->add_option("--count", count, "Sample count for gram/branch suites");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->callback([&] {
    if (suite == "asymptotics" && heights.size() < 3) {
      throw CLI::ValidationError("verify", "asymptotics needs --heights with >= 3 values");
    }
    action = [&] {
      Output o(g.out, manifest);
      if (suite == "asymptotics") {
        std::vector<SumResult> rows;
        for (SumKind kind : {SumKind::pair, SumKind::fourth}) {
          const TrendReport rep = verify_asymptotic_trend(kind, heights, cfg);
          rows.insert(rows.end(), rep.sums.begin(), rep.sums.end());
          std::ostringstream d;
          for (std::size_t i = 0; i < rep.ratios.size(); ++i) {
            d << (i ? " " : "") << "r(" << csv::format(rep.heights[i])
              << ")=" << csv::format(rep.ratios[i]);
          }
          print_status(std::string("trend ") + to_string(kind), rep.pass, d.str());
          verify_failed = verify_failed || !rep.pass;
        }
        write_sum_csv(o.stream(), rows);
      } else if (suite == "gram") {
        csv::Writer w(o.stream(), {"nu", "t", "residual", "monotone"});
        const std::int64_t n = count;
        const auto pts = parallel::map_indices<GramPoint>(
            static_cast<std::size_t>(n), [&](std::size_t i) {
              return gram_point(static_cast<std::int64_t>(i) + 1, cfg);
            });
        bool ok = true;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const bool mono = i == 0 || pts[i].t > pts[i - 1].t;
          ok = ok && mono && pts[i].residual <= cfg.abs_tol;
          w.row(pts[i].nu, pts[i].t, pts[i].residual, mono);
        }
        print_status("gram", ok, "residual <= abs_tol and strictly increasing");
        verify_failed = !ok;
      } else if (suite == "branch") {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(10.0, 1e4);
        std::vector<double> hs(static_cast<std::size_t>(count));
        for (double& h : hs) h = dist(rng);
        ZeroIndex& index = shared_zero_index(cfg);
        index.ensure(1e4);
        csv::Writer w(o.stream(), {"t", "s", "zero_count", "integrality", "sign_changes"});
        bool ok = true;
        for (double h : hs) {
          const ArgTrace tr = s_of_t(Height(h), cfg);
          const double raw = theta(Height(h)) / std::numbers::pi + 1.0 + tr.s_value;
          const double dev = std::abs(raw - std::round(raw));
          const auto sc = index.count_upto(h);
          ok = ok && dev <= 1e-8 && sc == tr.zero_count;
          w.row(h, tr.s_value, tr.zero_count, dev, sc);
        }
        print_status("branch", ok, "integrality <= 1e-8 and count equals sign changes");
        verify_failed = !ok;
      } else {
        if (heights.empty()) heights = {1e3, 1e4};
        csv::Writer w(o.stream(), {"T", "T1", "gap", "gap_prediction_ratio", "residual"});
        bool ok = true;
        for (double T : heights) {
          const LadderStep s = reverse_step(Height(T), cfg);
          const double pred = (s.iterate - T) / ((1.0 - kEulerGamma) * T / std::log(T));
          ok = ok && s.residual <= 1e-6 * T && pred >= 0.8 && pred <= 1.2;
          w.row(T, s.iterate, s.iterate - T, pred, s.residual);
        }
        print_status("ladder", ok, "residual <= 1e-6 T and gap ratio in [0.8, 1.2]");
        verify_failed = !ok;
      }
      o.flush();
    };
  });

  int code = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  try {
    if (!g.config.empty()) cfg = cli::load_config(g.config);
    cfg.validate();
  } catch (const Error& e) {
    std::cerr << "error: class=" << to_string(e.error_class()) << " message=" << e.what() << '\n';
    return kExitFlags;
  }
  if (g.jobs > 0) parallel::set_jobs(g.jobs);
  manifest.precision = cfg;
  manifest.jobs = parallel::jobs();

  try {
    action();
    if (verify_failed) code = 1;
  } catch (const PrecisionError& e) {
    std::cerr << "error: class=precision achievable=" << e.achievable_bound()
              << " message=" << e.what() << '\n';
    manifest.error_class = "precision";
    code = kExitPrecision;
  } catch (const Error& e) {
    std::cerr << "error: class=" << to_string(e.error_class()) << " message=" << e.what() << '\n';
    manifest.error_class = to_string(e.error_class());
    code = kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: class=internal message=" << e.what() << '\n';
    manifest.error_class = "internal";
    code = kExitCompute;
  }

  manifest.exit_code = code;
  manifest.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  try {
    manifest.append_to(g.manifest);
  } catch (const std::exception& e) {
    std::cerr << "warning: manifest not written: " << e.what() << '\n';
  }
  return code;
}
