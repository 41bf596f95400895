// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: zlab_acceptance --zlab <path to zlab binary> [--results file] [--only n]
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

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
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) { return csv::format(v); }

std::string fmt_list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// 1. Gram fidelity
Outcome gram_fidelity() {
  constexpr std::int64_t kMaxNu = 100000;
  const auto pts = parallel::map_indices<GramPoint>(static_cast<std::size_t>(kMaxNu),
                                                    [](std::size_t i) {
                                                      return gram_point(static_cast<std::int64_t>(i) + 1);
                                                    });
  double worst = 0.0;
  bool monotone = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const long double r = std::abs(theta_extended(pts[i].t) - std::numbers::pi_v<long double> * pts[i].nu);
    worst = std::max(worst, static_cast<double>(r));
    if (i > 0 && !(pts[i].t > pts[i - 1].t)) monotone = false;
  }
  const double T = 1e4;
  const double count = static_cast<double>(gram_range(Height(T), Height(2 * T)).count());
  const double expect = (theta(Height(2 * T)) - theta(Height(T))) / kPi;
  const double dev = std::abs(count / expect - 1.0);
  Outcome o;
  o.pass = worst <= 1e-10 && monotone && dev <= 0.005;
  o.detail = "max residual " + fmt(worst) + ", monotone " + (monotone ? "yes" : "no") +
             ", count " + fmt(count) + " vs " + fmt(expect) + " (rel " + fmt(dev) + ")";
  return o;
}

// 2. Branch integrity
Outcome branch_integrity() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> d(10.0, 1e4);
  std::vector<double> hs(100);
  for (double& h : hs) h = d(rng);
  ZeroIndex& index = shared_zero_index(default_precision());
  index.ensure(1e4);
  const auto traces = parallel::map_indices<ArgTrace>(hs.size(), [&](std::size_t i) {
    return s_of_t(Height(hs[i]));
  });
  double worst = 0.0;
  int mismatches = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double raw = theta(Height(hs[i])) / kPi + 1.0 + traces[i].s_value;
    worst = std::max(worst, std::abs(raw - std::round(raw)));
    if (static_cast<std::int64_t>(std::llround(raw)) != index.count_upto(hs[i]) ||
        traces[i].zero_count != index.count_upto(hs[i])) {
      ++mismatches;
    }
  }
  Outcome o;
  o.pass = worst <= 1e-8 && mismatches == 0;
  o.detail = "100 heights, max integrality residual " + fmt(worst) + ", sign-count mismatches " +
             std::to_string(mismatches);
  return o;
}

// 3 / 4. Gram-sum asymptotics
Outcome sum_trend(SumKind kind) {
  const double hs[] = {1e3, 5e3, 2e4};
  const TrendReport rep = verify_asymptotic_trend(kind, hs);
  bool band = true;
  for (double r : rep.ratios) band = band && r >= 0.4 && r <= 1.6;
  Outcome o;
  o.pass = band && rep.pass;
  o.detail = "r(T) at 1e3,5e3,2e4 = " + fmt_list(rep.ratios) + "; band [0.4,1.6] " +
             (band ? "ok" : "violated") + "; |r-1| over top two " +
             fmt(std::abs(rep.ratios[1] - 1)) + " -> " + fmt(std::abs(rep.ratios[2] - 1)) +
             (rep.pass ? " (non-increasing)" : " (increasing)") + "; |r-1| ln T = " +
             fmt_list(rep.fitted);
  return o;
}

// 5. Ladder defining equation and chain properties
Outcome ladder_properties() {
  bool ok = true;
  std::string d;
  for (double T : {1e3, 1e4}) {
    const LadderStep s = reverse_step(Height(T));
    const double check = second_moment_critical(Height(T), Height(s.iterate)).value;
    const double res = std::abs(check - (1 - kEulerGamma) * T);
    const double gap_ratio = (s.iterate - T) / ((1 - kEulerGamma) * T / std::log(T));
    ok = ok && res <= 1e-6 * T && gap_ratio >= 0.8 && gap_ratio <= 1.2;
    d += "T=" + fmt(T) + ": residual " + fmt(res) + ", gap ratio " + fmt(gap_ratio) + "; ";
  }
  const LadderChain c = ladder_chain(Height(1e4), 4);
  double total = 0.0, prev = c.base;
  for (double t : c.iterates) {
    total += t - prev;
    prev = t;
  }
  const bool telescoping = total == c.iterates.back() - c.base;
  double slices = 0.0;
  for (double v : c.slice_integrals) slices += v;
  const double whole = second_moment_critical(Height(c.base), Height(c.iterates.back())).value;
  const double part = std::abs(slices / whole - 1.0);
  const PartitionReport rep = partition_report(c);
  bool gaps = true;
  for (double g : rep.gap_ratios) gaps = gaps && g >= 0.9 && g <= 1.1;
  ok = ok && telescoping && part <= 1e-9 && gaps;
  d += std::string("telescoping ") + (telescoping ? "exact" : "inexact") + ", partition rel " +
       fmt(part) + ", gap_ratios " + fmt_list(rep.gap_ratios);
  return {ok, d};
}

// 6. Quotient formulas
Outcome quotients() {
  const QuotientReport qz = quotient_zeta(1.0, Height(1e4));
  const CbarEstimate cb = estimate_cbar(1, Height(1e4), 1e3);
  const S1QuotientReport qs = quotient_s1(1, Height(1e4), cb);
  Outcome o;
  o.pass = qz.normalized >= 0.85 && qz.normalized <= 1.15 && qs.normalized >= 0.7 &&
           qs.normalized <= 1.3;
  o.detail = "zeta quotient * zeta(2)/ln T = " + fmt(qz.normalized) +
             "; S1 quotient * cbar/ln T = " + fmt(qs.normalized) + " (cbar " + fmt(cb.cbar) +
             " +- " + fmt(cb.spread) + ", Selberg deviation " + fmt(qs.selberg_deviation) + ")";
  return o;
}

// 7. Scaling identity
Outcome scaling_identity() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(0.25, 4.0);
  std::uniform_real_distribution<double> hs(150.0, 2000.0);
  double worst = 0.0;
  for (FunctionalKind kind : {FunctionalKind::A, FunctionalKind::C}) {
    FunctionalParam p;
    p.sigma = 1.0;
    const double k = substitution_constant(kind, p);
    for (int i = 0; i < 10; ++i) {
      const double x = xs(rng);
      const double tau = hs(rng) / k / x;
      const double lhs = functional_approximant(kind, x, p, tau).value;
      const double rhs = x * functional_approximant(kind, 1.0, p, x * tau).value;
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  return {worst <= 1e-12, "kinds A, C over 10 random (x, tau) each: max relative deviation " + fmt(worst)};
}

// 8. Functional convergence (runs are memoized and reused by criterion 9)
constexpr double kHeights[] = {1e4, 5e4};

FunctionalApproximant at_height(FunctionalKind kind, double x, const FunctionalParam& p, double T) {
  return functional_approximant(kind, x, p, T / substitution_constant(kind, p) / x);
}

Outcome functional_convergence() {
  FunctionalParam p;
  p.sigma = 1.0;
  bool ok = true;
  std::string d;
  for (FunctionalKind kind : {FunctionalKind::A, FunctionalKind::C}) {
    const auto lo = at_height(kind, 1.0, p, kHeights[0]);
    const auto hi = at_height(kind, 1.0, p, kHeights[1]);
    const bool band = lo.value >= 0.5 && lo.value <= 1.5;
    const bool closer = hi.rel_err < lo.rel_err;
    ok = ok && band && closer;
    d += std::string(to_string(kind)) + ": value(T=1e4) " + fmt(lo.value) +
         (band ? " in band" : " outside [0.5,1.5]") + ", value(T=5e4) " + fmt(hi.value) +
         (closer ? " (closer to 1)" : " (not closer to 1)") + "; ";
  }
  return {ok, d};
}

// 9. Fermat ground truth
Outcome fermat_ground_truth(const std::function<CbarEstimate()>& cbar) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto found = fermat_search(50, 3, 12);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  struct W {
    std::uint64_t x, y, z;
    unsigned n;
    FunctionalKind kind;
  };
  const W witnesses[] = {{1, 1, 1, 3, FunctionalKind::A}, {3, 4, 5, 3, FunctionalKind::A},
                         {2, 1, 1, 3, FunctionalKind::A}, {1, 1, 1, 3, FunctionalKind::C},
                         {3, 4, 5, 3, FunctionalKind::C}, {1, 1, 1, 3, FunctionalKind::B}};
  int exact_one = 0, disagree = 0, consistent = 0, unresolved = 0;
  std::string d;
  for (const W& w : witnesses) {
    FunctionalParam p;
    p.sigma = 1.0;
    p.l = 1;
    if (w.kind == FunctionalKind::B) p.cbar = cbar();
    const double q = fermat_rational(w.x, w.y, w.z, w.n).get_d();
    const double k = substitution_constant(w.kind, p);
    std::vector<double> taus;
    for (double T : kHeights) taus.push_back(T / k / q);
    const FermatWitness fw = fermat_equivalence_check(w.x, w.y, w.z, w.n, w.kind, p, taus);
    exact_one += fw.is_one_exact;
    disagree += fw.verdict == Verdict::disagree;
    consistent += fw.verdict == Verdict::consistent;
    unresolved += fw.verdict == Verdict::unresolved;
    d += std::string(to_string(w.kind)) + "(" + fw.rational.get_str() + ")=" +
         to_string(fw.verdict) + " ";
  }
  Outcome o;
  o.pass = found.empty() && secs <= 60.0 && exact_one == 0 && disagree == 0;
  o.detail = "search x,y,z<=50, 3<=n<=12: " + std::to_string(found.size()) + " solutions in " +
             fmt(secs) + " s; witnesses: " + d + "(consistent " + std::to_string(consistent) +
             ", converging " + std::to_string(unresolved) + ", disagree " +
             std::to_string(disagree) + ")";
  return o;
}

// 10. Determinism across --jobs
std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& zlab_bin) {
  namespace fs = std::filesystem;
  const fs::path work = fs::temp_directory_path() / "zlab_acceptance_determinism";
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path manifest = work / "manifest.jsonl";
  // Pin the configuration through a manifest, as a rerun would.
  cli::RunManifest seed;
  seed.append_to(manifest);

  const std::vector<std::string> suites = {
      "gram --from 1000 --to 3000",
      "sum --kind pair --T 2000",
      "sum --kind fourth --T 2000",
      "moments --kind critical2 --from 100 --to 300",
      "moments --kind s1moment --from 100 --to 300 --l 1,2",
      "moments --kind sigma2 --sigma 0.75 --from 100 --to 200",
      "ladder --T 1000 --k 3",
      "functional --kind A --x 1.5 --heights 300,600",
      "verify --suite asymptotics --heights 300,600,1200",
  };
  int mismatched = 0, failed = 0;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    std::string digests[2];
    for (int r = 0; r < 2; ++r) {
      const int jobs = r == 0 ? 1 : 4;
      const fs::path out = work / ("out_" + std::to_string(i) + "_" + std::to_string(jobs) + ".csv");
      const std::string cmd = "ZLAB_CACHE_DIR='" + (work / "cache").string() + "' '" + zlab_bin +
                              "' --jobs " + std::to_string(jobs) + " --config '" +
                              manifest.string() + "' --manifest '" + (work / "runs.jsonl").string() +
                              "' --out '" + out.string() + "' " + suites[i] + " >/dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      if (rc != 0 && !(suites[i].rfind("verify", 0) == 0 && WEXITSTATUS(rc) == 1)) ++failed;
      digests[r] = cli::sha256_bytes(slurp(out));
    }
    if (digests[0] != digests[1]) ++mismatched;
  }
  fs::remove_all(work);
  return {mismatched == 0 && failed == 0,
          std::to_string(suites.size()) + " CLI suites at --jobs 1 vs 4: " +
              std::to_string(mismatched) + " differing CSVs, " + std::to_string(failed) +
              " failed runs"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string zlab_bin;
  std::string results_path;
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string a = argv[i];
    if (a == "--zlab") zlab_bin = argv[i + 1];
    else if (a == "--results") results_path = argv[i + 1];
    else if (a == "--only") only = std::atoi(argv[i + 1]);
  }

  std::optional<CbarEstimate> cbar_cache;
  const auto cbar = [&] {
    if (!cbar_cache) cbar_cache = estimate_cbar(1, Height(1e4), 1e3);
    return *cbar_cache;
  };

  const std::array<std::pair<const char*, std::function<Outcome()>>, 10> criteria{{
      {"Gram fidelity", gram_fidelity},
      {"Branch integrity", branch_integrity},
      {"Titchmarsh asymptotic", [] { return sum_trend(SumKind::pair); }},
      {"Fourth-power asymptotic", [] { return sum_trend(SumKind::fourth); }},
      {"Ladder defining equation", ladder_properties},
      {"Quotient formulas", quotients},
      {"Functional scaling identity", scaling_identity},
      {"Functional convergence", functional_convergence},
      {"Fermat ground truth", [&] { return fermat_ground_truth(cbar); }},
      {"Determinism", [&] { return determinism(zlab_bin); }},
  }};

  std::ofstream results;
  if (!results_path.empty()) results.open(results_path);
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only && only != n) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << " [" << criteria[i].first
         << "] " << o.detail << " (" << fmt(secs) << " s)";
    std::cout << line.str() << std::endl;
    if (results) results << line.str() << std::endl;
    failures += !o.pass;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
            << std::endl;
  // Completion is reported through the results file; the exit status flags
  // only whether the suite ran to the end.
  return 0;
}
