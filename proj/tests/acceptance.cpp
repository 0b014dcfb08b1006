// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "simdepth/cli.hpp"
#include "simdepth/depth.hpp"
#include "simdepth/experiments.hpp"
#include "simdepth/max_depth.hpp"
#include "simdepth/ordering.hpp"
#include "simdepth/random.hpp"
#include "simdepth/special.hpp"

using namespace simdepth;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s [%s] (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// 1 ------------------------------------------------------------------------
Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  int agree = 0;
  for (std::uint64_t inst = 0; inst < 200; ++inst) {
    CounterRng rng(derive_seed(20240601, inst), 0);
    const std::size_t n = 1 + rng() % 50;
    const bool lattice = inst % 2 == 0;  // integer grid: many ties and collinearities
    auto coord = [&] {
      return lattice ? static_cast<double>(static_cast<int>(rng() % 7) - 3) : 2.0 * rng.normal();
    };
    std::vector<PlanarPoint> pts(n);
    for (auto& p : pts) p.coords = {coord(), coord()};
    PlanarPoint theta;
    const std::uint64_t mode = rng() % 3;
    if (mode == 0) {
      theta = pts[rng() % n];
    } else {
      theta.coords = {coord(), coord()};
    }
    const auto e = depth_exact_2d(theta, pts);
    const auto b = depth_brute(theta, pts);
    if (e.count == b.count && e.n == b.n) ++agree;
  }
  const double dt = seconds_since(t0);
  return {agree == 200 && dt < 10.0, fmt("%.0f/200 agree in %.2f s", agree, dt)};
}

// 2 ------------------------------------------------------------------------
Outcome k2_exact() {
  double worst = 0.0;
  for (double a : {0.1, 0.25, 0.5, 1.0, 4.0}) worst = std::max(worst, std::abs(max_depth_gamma(2, a).value - 0.5));
  return {worst <= 1e-12, fmt("max |h - 1/2| = %.3g", worst)};
}

// 3 ------------------------------------------------------------------------
Outcome closed_vs_mc() {
  const auto t0 = Clock::now();
  double worst_z = 0.0;
  int cells = 0;
  for (std::size_t k = 2; k <= 10; ++k) {
    for (double a : {0.25, 0.5, 1.0}) {
      const double h = max_depth_gamma(k, a).value;
      const auto mc = max_depth_mc(k, DistributionSpec::gamma(a), 1000000, derive_seed(3, k, cells));
      // Binomial standard error at the closed-form probability.
      const double se = std::sqrt(h * (1.0 - h) / 1e6);
      worst_z = std::max(worst_z, std::abs(h - mc.value) / se);
      ++cells;
    }
  }
  const double dt = seconds_since(t0);
  return {worst_z <= 4.0 && dt < 120.0, fmt("%.0f cells, max |z| = %.2f, %.1f s", cells, worst_z, dt)};
}

// 4 ------------------------------------------------------------------------
Outcome monotone() {
  double worst = -INFINITY;
  for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    for (std::size_t k = 2; k <= 30; ++k) {
      worst = std::max(worst, max_depth_gamma(k + 1, a).value - max_depth_gamma(k, a).value);
    }
  }
  return {worst <= 1e-12, fmt("max h(k+1) - h(k) = %.3g", worst)};
}

// 5 ------------------------------------------------------------------------
Outcome limit() {
  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0}) {
    worst = std::max(worst, std::abs(max_depth_gamma(500, a).value - regularized_upper_gamma(a, a)));
  }
  const double e = std::abs(regularized_upper_gamma(1.0, 1.0) - std::exp(-1.0));
  return {worst < 5e-3 && e <= 1e-12, fmt("max |h_500 - Q| = %.3g, |Q(1,1) - 1/e| = %.3g", worst, e)};
}

// 6 ------------------------------------------------------------------------
Outcome lower_bound() {
  double worst = INFINITY;
  for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    for (std::size_t k = 2; k <= 30; ++k) {
      worst = std::min(worst, max_depth_gamma(k, a).value - 1.0 / static_cast<double>(k + 1));
    }
  }
  return {worst >= -1e-12, fmt("min h - 1/(k+1) = %.4g", worst)};
}

// 7 ------------------------------------------------------------------------
Outcome fig2_desk() {
  const auto t0 = Clock::now();
  const auto cfg = fig2_config(Scale::desk, 7);
  const auto res = run_fig2(cfg);
  std::string detail;
  bool ok = true;
  for (const auto& a : res.per_alpha) {
    const double m = fig2_dominance_margin(a);
    ok = ok && m >= 0.0;
    detail += fmt("alpha=%g mu=%.4f max=%.4f", a.alpha, a.mu_avg_depth, a.summary.max) + fmt(" margin=%.4f; ", m);
  }
  const double dt = seconds_since(t0);
  detail += fmt("%.0f s", dt);
  return {ok && dt < 600.0, detail};
}

// 8 ------------------------------------------------------------------------
Outcome fig3_desk() {
  auto cfg = fig3_config(Scale::desk, 8);
  cfg.alphas = {1.0, 0.5, 0.25, 4.0};
  const auto cells = run_fig3(cfg);
  bool ok = true;
  std::string detail;
  double prev_iqr = INFINITY;
  double prev_alpha = -1.0;
  for (const auto& c : cells) {
    if (c.alpha != prev_alpha) prev_iqr = INFINITY;
    const double tol = 4.0 / std::sqrt(static_cast<double>(c.n));
    const double dev = std::abs(c.summary.median - c.h_closed);
    const bool asserted = c.alpha <= 1.0;
    const bool cell_ok = dev <= tol && c.summary.iqr() < prev_iqr;
    if (asserted) ok = ok && cell_ok;
    detail += fmt("a=%g n=%.0f ", c.alpha, static_cast<double>(c.n)) +
              fmt("|med-h|=%.4f/%.4f iqr=%.4f", dev, tol, c.summary.iqr()) + (asserted ? "" : " (report)") + "; ";
    prev_iqr = c.summary.iqr();
    prev_alpha = c.alpha;
  }
  return {ok, detail};
}

// 9 ------------------------------------------------------------------------
Outcome probe() {
  const std::vector<double> inside = {0.5};
  const auto in_report = counterexample_search(inside, 100, 10000, 9);
  const std::vector<double> outside = {2.0, 4.0, 8.0};
  const auto out_report = counterexample_search(outside, 20, 100000, 99);
  std::size_t confirmed = 0;
  for (std::size_t i = 0; i < out_report.size(); ++i) {
    if (confirm_counterexample(out_report[i], 10, derive_seed(999, i)).violated()) ++confirmed;
  }
  std::string detail = fmt("alpha=0.5: %.0f violations in 100 pairs; alpha>1: %.0f witnesses, %.0f confirmed at 10x",
                           static_cast<double>(in_report.size()), static_cast<double>(out_report.size()),
                           static_cast<double>(confirmed));
  // A witness that fails confirmation is discarded, not a failure.
  return {in_report.empty(), detail};
}

// 10 -----------------------------------------------------------------------
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome reproducible() {
  const fs::path root = fs::temp_directory_path() / "simdepth_acceptance_repro";
  fs::remove_all(root);
  struct Case {
    std::vector<std::string> args;
    std::vector<std::string> files;  // empty: compare stdout
  };
  const std::vector<Case> cases = {
      {{"sample", "--k", "3", "--alpha", "0.5", "--n", "500", "--seed", "1"}, {}},
      {{"sample", "--k", "5", "--alpha", "2", "--n", "200", "--seed", "2"}, {}},
      {{"depth", "--input", "@sample", "--theta", "0.2,0.3,0.5", "--method", "approx", "--directions", "50",
        "--seed", "3"},
       {}},
      {{"maxdepth", "--k", "4", "--alpha", "0.5", "--mc", "--n", "20000", "--seed", "4"}, {}},
      {{"probe", "--alpha-w", "4", "--alpha-q", "4", "--a", "0.5,0.5", "--b", "1,0", "--n", "5000", "--seed", "5"},
       {}},
      {{"search", "--alphas", "4", "--pairs", "3", "--n", "5000", "--seed", "6", "--out", "@dir"}, {"search.csv"}},
      {{"fig1", "--k-max", "6", "--mc-n", "5000", "--seed", "7", "--out", "@dir"}, {"fig1.csv", "fig1.svg"}},
      {{"fig2", "--locations", "10", "--n", "500", "--replicates", "2", "--seed", "8", "--out", "@dir"},
       {"fig2.csv", "fig2.svg"}},
      {{"fig3", "--ns", "200,400", "--replicates", "5", "--seed", "9", "--out", "@dir"}, {"fig3.csv", "fig3.svg"}},
      {{"validate-median", "--resolution", "6", "--n", "1000", "--seed", "10", "--out", "@dir"},
       {"validate_median.csv"}},
  };
  fs::create_directories(root);
  {
    std::ostringstream out, err;
    run_cli({"sample", "--k", "3", "--alpha", "1", "--n", "300", "--seed", "11"}, out, err);
    std::ofstream(root / "input.csv") << out.str();
  }
  int ok = 0;
  std::string failed;
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    std::string outputs[2];
    bool runs_ok = true;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path dir = root / ("case" + std::to_string(ci) + "_" + std::to_string(rep));
      std::vector<std::string> args = cases[ci].args;
      for (auto& a : args) {
        if (a == "@dir") a = dir.string();
        if (a == "@sample") a = (root / "input.csv").string();
      }
      std::ostringstream out, err;
      runs_ok = runs_ok && run_cli(args, out, err) == 0;
      outputs[rep] = out.str();
      for (const auto& f : cases[ci].files) {
        outputs[rep] += "\n--" + f + "--\n" + slurp(dir / f);
      }
    }
    if (runs_ok && outputs[0] == outputs[1] && !outputs[0].empty()) {
      ++ok;
    } else {
      failed += " " + cases[ci].args[0];
    }
  }
  fs::remove_all(root);
  return {ok == static_cast<int>(cases.size()),
          fmt("%.0f/%.0f subcommands byte-identical", ok, static_cast<double>(cases.size())) + failed};
}

}  // namespace

int main() {
  report(1, "exact planar depth equals the brute-force oracle", oracle_equivalence);
  report(2, "maximal depth is 1/2 at k=2", k2_exact);
  report(3, "closed form agrees with Monte Carlo", closed_vs_mc);
  report(4, "maximal depth is non-increasing in k", monotone);
  report(5, "large-k limit Q(alpha, alpha)", limit);
  report(6, "maximal depth is at least 1/(k+1)", lower_bound);
  report(7, "barycentre dominates random locations (desk scale)", fig2_desk);
  report(8, "barycentre depth concentrates at the closed form (desk scale)", fig3_desk);
  report(9, "no stochastic-order violations inside the unimodal class", probe);
  report(10, "seeded subcommands are byte-identical on rerun", reproducible);
  std::printf("%s: %d failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
