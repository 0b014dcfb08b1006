#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simdepth/composition.hpp"
#include "simdepth/random.hpp"

namespace simdepth {

/// Gamma(alpha, rate): density x^(alpha-1) exp(-rate x) rate^alpha / Gamma(alpha).
struct GammaShape {
  double alpha = 1.0;
  double rate = 0.5;

  friend bool operator==(const GammaShape&, const GammaShape&) = default;
};

/// A generic positive law given by knots (probability, quantile) of its
/// quantile function; sampled by linear interpolation between knots.
/// Below the first knot the quantile is interpolated from (0, 0); above the
/// last knot it is held at the last quantile.
struct InverseCdfTable {
  std::vector<std::pair<double, double>> knots;

  friend bool operator==(const InverseCdfTable&, const InverseCdfTable&) = default;
};

/// The law F of the i.i.d. positive variables that are normalized into a
/// composition.
class DistributionSpec {
 public:
  static DistributionSpec gamma(double alpha, double rate = 0.5);
  static DistributionSpec table(std::vector<std::pair<double, double>> knots);

  bool is_gamma() const noexcept { return std::holds_alternative<GammaShape>(family_); }
  const GammaShape& gamma_shape() const;
  const InverseCdfTable& inverse_cdf_table() const;

  /// True when F(0) = 0 and F is concave on (0, inf), i.e. the density is
  /// non-increasing. For Gamma this is alpha <= 1; for a table, the quantile
  /// slopes (interpolation from (0,0) included) must be non-decreasing.
  bool in_unimodal_class() const noexcept;

  /// Quantile function; for tables this is the interpolation used in sampling.
  double table_quantile(double p) const;

  std::string describe() const;

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

 private:
  explicit DistributionSpec(std::variant<GammaShape, InverseCdfTable> family) : family_(std::move(family)) {}
  std::variant<GammaShape, InverseCdfTable> family_;
};

/// One draw from the standard Gamma(alpha, 1) law using `rng`.
/// alpha <= 1: Ahrens-Dieter GS rejection; alpha > 1: Marsaglia-Tsang.
double sample_standard_gamma(double alpha, CounterRng& rng);

/// One strictly positive draw from `spec` (zero draws are redrawn).
double sample_one(const DistributionSpec& spec, CounterRng& rng);

/// n i.i.d. draws; draw i uses stream i of `seed`.
std::vector<double> sample_positive(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

/// Fills `out` (length k) with point `index` of the composition stream `seed`:
/// V_1..V_k from stream `index`, divided by their sum.
void draw_composition(const DistributionSpec& spec, std::uint64_t seed, std::uint64_t index,
                      std::span<double> out);

struct EmpiricalSample {
  std::vector<Composition> points;
  DistributionSpec spec;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  bool uniform_family = false;

  std::size_t size() const noexcept { return points.size(); }
};

EmpiricalSample sample_composition(std::size_t k, const DistributionSpec& spec, std::size_t n,
                                   std::uint64_t seed);

/// Uniform law on the simplex: Gamma(1, 1/2) draws normalized by their sum.
EmpiricalSample sample_uniform_simplex(std::size_t k, std::size_t n, std::uint64_t seed);

/// Headerless CSV, one row per point, 17 significant digits, preceded by a
/// '#' comment line recording spec, seed, n and k.
void write_sample_csv(std::ostream& os, const EmpiricalSample& sample);

/// Reads k-column rows; '#' lines and blank lines are skipped. Throws
/// InputError on ragged rows, unparsable numbers, or invalid compositions
/// (sum tolerance `tolerance`).
std::vector<Composition> read_points_csv(std::istream& is, double tolerance = 1e-9);

}  // namespace simdepth
