#include "simdepth/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "simdepth/depth.hpp"
#include "simdepth/errors.hpp"
#include "simdepth/experiments.hpp"
#include "simdepth/format.hpp"
#include "simdepth/max_depth.hpp"
#include "simdepth/models.hpp"
#include "simdepth/ordering.hpp"

#ifndef SIMDEPTH_VERSION
#define SIMDEPTH_VERSION "0.0.0"
#endif
#ifndef SIMDEPTH_BUILD_ID
#define SIMDEPTH_BUILD_ID "unknown"
#endif

namespace simdepth {

namespace {

std::string g12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Scale parse_scale(const std::string& s) { return s == "full" ? Scale::full : Scale::desk; }

std::vector<std::size_t> parse_count_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : parse_double_list(text)) {
    if (!(v >= 1.0) || v != std::floor(v)) {
      throw InputError("expected positive integers, got '" + text + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

const char* hypothesis_note(bool within) {
  return within ? "" : " [alpha > 1: outside the unimodal class; not known to be the maximal depth]";
}

struct ExperimentFlags {
  std::string out_dir;
  std::uint64_t seed = 0;
  std::string scale = "desk";
  std::string alphas;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("--out", f.out_dir, "Directory for CSV and SVG output");
  cmd->add_option("--seed", f.seed, "Random seed")->required();
  cmd->add_option("--scale", f.scale, "desk (minutes) or full (hours)")
      ->check(CLI::IsMember({"desk", "full"}));
  cmd->add_option("--alphas", f.alphas, "Comma-separated Gamma shapes overriding the defaults");
}

void apply_common(ExperimentConfig& c, const ExperimentFlags& f) {
  c.output_dir = f.out_dir;
  if (!f.alphas.empty()) {
    c.alphas = parse_double_list(f.alphas);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Halfspace depth on the probability simplex: exact depth, closed-form maximal depth, "
               "stochastic-ordering probes and experiment runners"};
  app.set_version_flag("--version", std::string("simdepth ") + SIMDEPTH_VERSION + " (" + SIMDEPTH_BUILD_ID + ")");
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Draw compositions (V_1..V_k)/sum V with V ~ Gamma(alpha, rate)");
  std::size_t sample_k = 3, sample_n = 0;
  double sample_alpha = 1.0, sample_rate = 0.5;
  std::uint64_t sample_seed = 0;
  sample_cmd->add_option("--k", sample_k, "Dimension")->required();
  sample_cmd->add_option("--alpha", sample_alpha, "Gamma shape")->required();
  sample_cmd->add_option("--rate", sample_rate, "Gamma rate (default 0.5)");
  sample_cmd->add_option("--n", sample_n, "Sample size")->required();
  sample_cmd->add_option("--seed", sample_seed, "Random seed")->required();

  // depth
  auto* depth_cmd = app.add_subcommand("depth", "Halfspace depth of a composition w.r.t. a CSV sample");
  std::string depth_input, depth_theta, depth_method;
  std::size_t depth_directions = 1000;
  std::optional<std::uint64_t> depth_seed;
  depth_cmd->add_option("--input", depth_input, "Headerless CSV, one composition per row")->required();
  depth_cmd->add_option("--theta", depth_theta, "Query composition, e.g. 0.2,0.3,0.5")->required();
  depth_cmd->add_option("--method", depth_method, "exact (k=3), brute, or approx; default exact for k=3, brute otherwise")
      ->check(CLI::IsMember({"exact", "brute", "approx"}));
  depth_cmd->add_option("--directions", depth_directions, "Random directions for approx (default 1000)");
  depth_cmd->add_option("--seed", depth_seed, "Random seed (required for approx)");

  // maxdepth
  auto* max_cmd = app.add_subcommand("maxdepth", "Maximal depth P[X_k1 >= 1/k] under Gamma(alpha) compositions");
  std::size_t max_k = 0, max_n = 1000000;
  double max_alpha = 0.0;
  bool max_mc = false;
  std::optional<std::uint64_t> max_seed;
  max_cmd->add_option("--k", max_k, "Dimension")->required();
  max_cmd->add_option("--alpha", max_alpha, "Gamma shape")->required();
  max_cmd->add_flag("--mc", max_mc, "Monte Carlo estimate instead of the closed form");
  max_cmd->add_option("--n", max_n, "Monte Carlo draws (default 1e6)");
  max_cmd->add_option("--seed", max_seed, "Random seed (required with --mc)");

  // limit
  auto* limit_cmd = app.add_subcommand("limit", "Limit of the maximal depth as k grows: Q(alpha, alpha)");
  double limit_alpha = 0.0;
  limit_cmd->add_option("--alpha", limit_alpha, "Gamma shape")->required();

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "Empirical check of W/sum(a Q) <=st W/sum(b Q)");
  double probe_alpha_w = 0.5, probe_confidence = 0.999;
  std::optional<double> probe_alpha_q;
  std::string probe_a, probe_b;
  std::size_t probe_n = 10000;
  std::uint64_t probe_seed = 0;
  probe_cmd->add_option("--alpha-w", probe_alpha_w, "Gamma shape of W")->required();
  probe_cmd->add_option("--alpha-q", probe_alpha_q, "Gamma shape of the Q's (default: alpha-w)");
  probe_cmd->add_option("--a", probe_a, "Weights a (majorized by b)")->required();
  probe_cmd->add_option("--b", probe_b, "Weights b")->required();
  probe_cmd->add_option("--n", probe_n, "Draws per side (default 1e4)");
  probe_cmd->add_option("--seed", probe_seed, "Random seed")->required();
  probe_cmd->add_option("--confidence", probe_confidence, "DKW band confidence (default 0.999)");

  // search
  auto* search_cmd = app.add_subcommand("search", "Random search for stochastic-order violations at alpha > 1");
  std::string search_alphas = "2,4,8";
  std::size_t search_pairs = 20, search_n = 100000, search_confirm = 10;
  double search_confidence = 0.999;
  std::uint64_t search_seed = 0;
  std::string search_out;
  search_cmd->add_option("--alphas", search_alphas, "Comma-separated Gamma shapes (default 2,4,8)");
  search_cmd->add_option("--pairs", search_pairs, "Majorization pairs per alpha (default 20)");
  search_cmd->add_option("--n", search_n, "Draws per side (default 1e5)");
  search_cmd->add_option("--seed", search_seed, "Random seed")->required();
  search_cmd->add_option("--confidence", search_confidence, "DKW band confidence (default 0.999)");
  search_cmd->add_option("--confirm-factor", search_confirm, "Re-run witnesses with this many times n (0: skip)");
  search_cmd->add_option("--out", search_out, "Directory for search.csv");

  // experiments
  ExperimentFlags fig1_flags, fig2_flags, fig3_flags, val_flags;
  auto* fig1_cmd = app.add_subcommand("fig1", "Maximal depth versus k, closed form and Monte Carlo");
  add_experiment_flags(fig1_cmd, fig1_flags);
  std::optional<std::size_t> fig1_kmax, fig1_mcn;
  fig1_cmd->add_option("--k-max", fig1_kmax, "Largest k (default 50)");
  fig1_cmd->add_option("--mc-n", fig1_mcn, "Monte Carlo draws per point (default 1e6)");

  auto* fig2_cmd = app.add_subcommand("fig2", "Depth of random locations versus the barycentre");
  add_experiment_flags(fig2_cmd, fig2_flags);
  std::optional<std::size_t> fig2_N, fig2_n, fig2_M;
  fig2_cmd->add_option("--locations", fig2_N, "Number of random locations N");
  fig2_cmd->add_option("--n", fig2_n, "Sample size n");
  fig2_cmd->add_option("--replicates", fig2_M, "Replicates M");

  auto* fig3_cmd = app.add_subcommand("fig3", "Sampling distribution of the barycentre depth");
  add_experiment_flags(fig3_cmd, fig3_flags);
  std::optional<std::size_t> fig3_M;
  std::string fig3_ns;
  fig3_cmd->add_option("--replicates", fig3_M, "Replicates M");
  fig3_cmd->add_option("--ns", fig3_ns, "Comma-separated sample sizes");

  auto* val_cmd = app.add_subcommand("validate-median", "Lattice search for the deepest point of the simplex");
  add_experiment_flags(val_cmd, val_flags);
  std::optional<std::size_t> val_r, val_n;
  val_cmd->add_option("--resolution", val_r, "Lattice resolution r");
  val_cmd->add_option("--n", val_n, "Sample size n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*sample_cmd) {
      const auto s = sample_composition(sample_k, DistributionSpec::gamma(sample_alpha, sample_rate), sample_n, sample_seed);
      write_sample_csv(out, s);
    } else if (*depth_cmd) {
      std::ifstream is(depth_input);
      if (!is) {
        throw InputError("cannot read " + depth_input);
      }
      const auto points = read_points_csv(is);
      if (points.empty()) {
        throw InputError(depth_input + " contains no points");
      }
      const Composition theta(parse_double_list(depth_theta), 1e-9);
      const std::size_t k = points.front().dim();
      if (theta.dim() != k) {
        throw InputError("theta has " + std::to_string(theta.dim()) + " coordinates, sample has " + std::to_string(k));
      }
      std::string method = depth_method.empty() ? (k == 3 ? "exact" : "brute") : depth_method;
      const auto sample = embed_simplex(std::span<const Composition>(points));
      const PlanarPoint t = embed_simplex(theta);
      DepthResult r;
      if (method == "exact") {
        if (k != 3) {
          throw InputError("exact depth needs k = 3; use --method brute or approx");
        }
        r = depth_exact_2d(t, sample);
      } else if (method == "brute") {
        r = depth_brute(t, sample);
      } else {
        if (!depth_seed) {
          throw InputError("--method approx requires --seed");
        }
        r = depth_approx(t, sample, depth_directions, *depth_seed);
      }
      out << "depth " << r.fraction().str() << " = " << g12(r.value()) << " (count " << r.count << " of " << r.n
          << ", method " << method << ")\n";
    } else if (*max_cmd) {
      if (max_mc) {
        if (!max_seed) {
          throw InputError("--mc requires --seed");
        }
        const auto v = max_depth_mc(max_k, DistributionSpec::gamma(max_alpha), max_n, *max_seed);
        out << g12(v.value) << " se=" << g12(v.std_error) << " n=" << v.mc_n << hypothesis_note(v.within_hypothesis)
            << '\n';
      } else {
        const auto v = max_depth_gamma(max_k, max_alpha);
        out << g12(v.value) << hypothesis_note(v.within_hypothesis) << '\n';
      }
    } else if (*limit_cmd) {
      const auto v = max_depth_limit_gamma(limit_alpha);
      out << g12(v.value) << hypothesis_note(v.within_hypothesis) << '\n';
    } else if (*probe_cmd) {
      const auto v = eaton_olshen_probe(DistributionSpec::gamma(probe_alpha_w),
                                        DistributionSpec::gamma(probe_alpha_q.value_or(probe_alpha_w)),
                                        WeightVector(parse_double_list(probe_a)),
                                        WeightVector(parse_double_list(probe_b)), probe_n, probe_seed,
                                        probe_confidence);
      out << (v.violated() ? "violated" : "consistent") << " gap=" << fmt_g17(v.gap) << " worst_t="
          << fmt_g17(v.worst_t) << " band=" << fmt_g17(v.band) << '\n';
    } else if (*search_cmd) {
      const auto alphas = parse_double_list(search_alphas);
      const auto report = counterexample_search(alphas, search_pairs, search_n, search_seed, {search_confidence});
      out << report.size() << " violation(s) found\n";
      for (std::size_t i = 0; i < report.size(); ++i) {
        const auto& c = report[i];
        out << "alpha=" << c.alpha << " gap=" << g12(c.gap) << " worst_t=" << g12(c.worst_t);
        if (search_confirm > 0) {
          const auto v = confirm_counterexample(c, search_confirm, derive_seed(search_seed, 0xC0FFEE, i),
                                                search_confidence);
          out << " confirmation(n=" << c.n * search_confirm << "): " << (v.violated() ? "violated" : "consistent")
              << " gap=" << g12(v.gap);
        }
        out << '\n';
      }
      if (!search_out.empty()) {
        std::filesystem::create_directories(search_out);
        std::ofstream os(std::filesystem::path(search_out) / "search.csv", std::ios::binary);
        if (!os) {
          throw InputError("cannot write search.csv under " + search_out);
        }
        write_search_csv(os, report);
      }
    } else if (*fig1_cmd) {
      auto c = fig1_config(parse_scale(fig1_flags.scale), fig1_flags.seed);
      apply_common(c, fig1_flags);
      if (fig1_kmax) c.k_max = *fig1_kmax;
      if (fig1_mcn) c.mc_n = *fig1_mcn;
      const auto rows = run_fig1(c);
      for (const auto& r : rows) {
        if (r.k == 2 || r.k == c.k_max || r.k % 10 == 0) {
          out << "alpha=" << r.alpha << " k=" << r.k << " h=" << g12(r.h_closed) << " mc=" << g12(r.h_mc)
              << " limit=" << g12(r.h_limit) << '\n';
        }
      }
    } else if (*fig2_cmd) {
      auto c = fig2_config(parse_scale(fig2_flags.scale), fig2_flags.seed);
      apply_common(c, fig2_flags);
      if (fig2_N) c.locations = *fig2_N;
      if (fig2_n) c.sample_size = *fig2_n;
      if (fig2_M) c.replicates = *fig2_M;
      const auto res = run_fig2(c);
      for (const auto& a : res.per_alpha) {
        out << "alpha=" << a.alpha << " mu_depth=" << g12(a.mu_avg_depth) << " locations: median="
            << g12(a.summary.median) << " max=" << g12(a.summary.max) << " dominance_margin="
            << g12(fig2_dominance_margin(a)) << hypothesis_note(a.within_hypothesis) << '\n';
      }
    } else if (*fig3_cmd) {
      auto c = fig3_config(parse_scale(fig3_flags.scale), fig3_flags.seed);
      apply_common(c, fig3_flags);
      if (fig3_M) c.replicates = *fig3_M;
      if (!fig3_ns.empty()) c.sample_sizes = parse_count_list(fig3_ns);
      for (const auto& cell : run_fig3(c)) {
        out << "alpha=" << cell.alpha << " n=" << cell.n << " median=" << g12(cell.summary.median) << " iqr="
            << g12(cell.summary.iqr()) << " P[X1>=1/k]=" << g12(cell.h_closed)
            << hypothesis_note(cell.within_hypothesis) << '\n';
      }
    } else if (*val_cmd) {
      auto c = theorem1_config(parse_scale(val_flags.scale), val_flags.seed);
      apply_common(c, val_flags);
      if (val_r) c.grid_resolution = *val_r;
      if (val_n) c.sample_size = *val_n;
      const auto rep = validate_theorem1(c);
      const auto& best = rep.lattice[rep.argmax];
      out << "argmax (" << best.index[0] << "," << best.index[1] << "," << best.index[2] << ")/" << rep.resolution
          << " depth=" << g12(best.depth) << " mu_depth=" << g12(rep.mu_depth) << " gap=" << g12(rep.gap)
          << " tolerance=" << g12(rep.tolerance) << (rep.passed ? " PASS" : " FAIL") << '\n';
      if (!rep.mu_on_lattice) {
        out << "barycentre is not a lattice point; nearest is (" << rep.nearest_to_mu[0] << ","
            << rep.nearest_to_mu[1] << "," << rep.nearest_to_mu[2] << ")/" << rep.resolution << '\n';
      }
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace simdepth
