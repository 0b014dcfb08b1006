#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "simdepth/models.hpp"

namespace simdepth {

class WeightVector {
 public:
  /// Throws InputError on non-finite entries.
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double sum() const noexcept { return sum_; }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }

 private:
  std::vector<double> weights_;
  double sum_ = 0.0;
};

/// a is majorized by b: equal totals and, after sorting both in decreasing
/// order, every prefix sum of a is at most the matching prefix sum of b
/// (slack `tol`). Throws InputError on length mismatch or totals differing
/// by more than `tol`.
bool is_majorized(const WeightVector& a, const WeightVector& b, double tol = 1e-12);

enum class OrderingStatus { consistent, violated };

struct OrderingVerdict {
  OrderingStatus status = OrderingStatus::consistent;
  /// Threshold t maximizing S_x(t) - S_y(t).
  double worst_t = 0.0;
  /// sup_t S_x(t) - S_y(t); positive values point against X <=st Y.
  double gap = 0.0;
  double band = 0.0;

  bool violated() const noexcept { return status == OrderingStatus::violated; }
};

/// One-sided check of X <=st Y from samples: violated when the largest
/// excess of the empirical survival function of X over that of Y exceeds
/// the sum of the two DKW half-widths sqrt(ln(2/delta) / (2 n)),
/// delta = 1 - confidence.
OrderingVerdict empirical_stochastic_order(std::span<const double> x_samples, std::span<const double> y_samples,
                                           double confidence);

/// Samples W / sum a_l Q_l and W / sum b_l Q_l (independent draws for the
/// two sides, i.i.d. Q's) and tests left <=st right. Requires a majorized by
/// b and nonnegative weights with positive total.
OrderingVerdict eaton_olshen_probe(const DistributionSpec& spec_w, const DistributionSpec& spec_q,
                                   const WeightVector& a, const WeightVector& b, std::size_t n,
                                   std::uint64_t seed, double confidence);

struct MajorizationPair {
  WeightVector a;
  WeightVector b;
};

/// Random pair with a majorized by b: b is a skewed random probability
/// vector (sometimes a vertex), a = lambda b + (1 - lambda) / m.
MajorizationPair random_majorization_pair(CounterRng& rng, std::size_t min_len = 2, std::size_t max_len = 6);

struct Counterexample {
  double alpha = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  double gap = 0.0;
  double worst_t = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

struct SearchOptions {
  double confidence = 0.999;
};

/// For each alpha, probes `pair_budget` random majorization pairs with W and
/// the Q's all Gamma(alpha, 1/2) and reports every violated verdict.
/// An empty report is a legitimate outcome.
std::vector<Counterexample> counterexample_search(std::span<const double> alpha_grid, std::size_t pair_budget,
                                                  std::size_t n, std::uint64_t seed, SearchOptions options = {});

/// Re-runs a reported witness with `factor` times the sample size on a
/// fresh seed.
OrderingVerdict confirm_counterexample(const Counterexample& c, std::size_t factor, std::uint64_t seed,
                                       double confidence = 0.999);

/// CSV with header alpha,a,b,gap,worst_t,n,seed; weight vectors are
/// ';'-separated inside their field.
void write_search_csv(std::ostream& os, std::span<const Counterexample> report);

}  // namespace simdepth
