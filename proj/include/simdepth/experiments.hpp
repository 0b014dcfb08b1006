#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "simdepth/composition.hpp"
#include "simdepth/depth.hpp"

namespace simdepth {

enum class Scale { desk, full };

struct ExperimentConfig {
  std::size_t k = 3;
  std::vector<double> alphas;
  std::size_t locations = 200;        // N
  std::size_t sample_size = 20000;    // n
  std::vector<std::size_t> sample_sizes;  // fig3 n grid
  std::size_t replicates = 20;        // M
  std::uint64_t seed = 0;
  std::size_t k_max = 50;
  std::size_t mc_n = 1000000;         // fig1 Monte Carlo draws per (k, alpha)
  std::size_t grid_resolution = 30;
  /// Directions for depth_approx when k != 3; 0 means exact planar depth only.
  std::size_t approx_directions = 0;
  /// Empty: no files are written.
  std::filesystem::path output_dir;

  /// Throws InputError on zero counts or nonpositive alphas.
  void validate() const;
};

ExperimentConfig fig1_config(Scale scale, std::uint64_t seed);
ExperimentConfig fig2_config(Scale scale, std::uint64_t seed);
ExperimentConfig fig3_config(Scale scale, std::uint64_t seed);
ExperimentConfig theorem1_config(Scale scale, std::uint64_t seed);

struct BoxplotSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t count = 0;

  double iqr() const { return q3 - q1; }
};

/// Quartiles by linear interpolation between order statistics.
BoxplotSummary summarize(std::span<const double> values);

struct Fig1Row {
  std::size_t k = 0;
  double alpha = 0.0;
  double h_closed = 0.0;
  double h_mc = 0.0;
  double h_mc_se = 0.0;
  double h_limit = 0.0;
};

/// k = 2..k_max for every alpha: closed form, Monte Carlo (mc_n draws), limit.
/// Writes fig1.csv / fig1.svg under output_dir when set.
std::vector<Fig1Row> run_fig1(const ExperimentConfig& config);

struct Fig2Alpha {
  double alpha = 0.0;
  bool within_hypothesis = true;
  std::vector<double> avg_depth;  // per location, averaged over replicates
  std::vector<double> se_depth;   // Monte Carlo std error of each average
  double mu_avg_depth = 0.0;
  double mu_se = 0.0;
  BoxplotSummary summary;         // of avg_depth
};

struct Fig2Result {
  std::vector<Composition> locations;
  std::vector<Fig2Alpha> per_alpha;
};

/// Depth of N uniform locations and of the barycentre, averaged over M
/// samples of size n from each P_{k,alpha}. Writes fig2.csv / fig2.svg.
Fig2Result run_fig2(const ExperimentConfig& config);

/// Smallest value of mu_avg - avg_i + 2 sqrt(se_mu^2 + se_i^2) over the
/// locations; nonnegative when the barycentre dominates within tolerance.
double fig2_dominance_margin(const Fig2Alpha& a);

struct Fig3Cell {
  double alpha = 0.0;
  std::size_t n = 0;
  bool within_hypothesis = true;
  std::vector<double> depths;  // M replicate depths at the barycentre
  BoxplotSummary summary;
  double h_closed = 0.0;       // P[X_k1 >= 1/k]
};

/// For each alpha and n in sample_sizes: M replicate depths of mu_k.
/// Writes fig3.csv / fig3.svg.
std::vector<Fig3Cell> run_fig3(const ExperimentConfig& config);

struct LatticeDepth {
  std::array<std::size_t, 3> index{};
  double depth = 0.0;
};

struct Theorem1Report {
  double alpha = 0.0;
  std::size_t resolution = 0;
  std::size_t n = 0;
  std::vector<LatticeDepth> lattice;
  std::size_t argmax = 0;       // index into lattice (first maximal point)
  std::size_t ties = 0;         // lattice points sharing the maximal depth
  double mu_depth = 0.0;
  double gap = 0.0;             // lattice max depth - depth at mu
  double tolerance = 0.0;       // 2/sqrt(n) + 1/r
  bool mu_on_lattice = false;
  std::array<std::size_t, 3> nearest_to_mu{};
  double argmax_distance = 0.0;  // max-coordinate distance from argmax to mu
  bool passed = false;
};

/// Exact depth of every point (i, j, r-i-j)/r of the triangular lattice
/// against one sample of size n from P_{3,alphas[0]}.
Theorem1Report validate_theorem1(const ExperimentConfig& config);

/// Lattice depths from an explicit sample (used for equivariance checks).
std::vector<LatticeDepth> lattice_depths(std::span<const PlanarPoint> embedded_sample, std::size_t resolution);

}  // namespace simdepth
