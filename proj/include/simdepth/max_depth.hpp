#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "simdepth/models.hpp"

namespace simdepth {

enum class MaxDepthMethod { closed_form, monte_carlo };

/// Maximal depth h_k = P[X_k1 >= 1/k], or its k -> infinity limit when
/// `k` is empty.
struct MaxDepthValue {
  double value = 0.0;
  std::optional<std::size_t> k;
  DistributionSpec spec = DistributionSpec::gamma(1.0);
  MaxDepthMethod method = MaxDepthMethod::closed_form;
  std::size_t mc_n = 0;
  std::uint64_t mc_seed = 0;
  double std_error = 0.0;
  /// False when F has a density that is not non-increasing (e.g. Gamma with
  /// alpha > 1): the value is still P[X_k1 >= 1/k], but it is not known to
  /// be the maximal depth.
  bool within_hypothesis = true;
};

/// 1 - I_{1/k}(alpha, (k-1) alpha): X_k1 is Beta(alpha, (k-1) alpha) under
/// the symmetric Dirichlet law.
MaxDepthValue max_depth_gamma(std::size_t k, double alpha);

/// Q(alpha, alpha) = P[Z >= E Z] for Z ~ Gamma(alpha, 1).
MaxDepthValue max_depth_limit_gamma(double alpha);

/// Closed form for Gamma specs; refuses inverse-cdf tables.
MaxDepthValue max_depth_closed(std::size_t k, const DistributionSpec& spec);

/// Fraction of n sampled compositions with X_1 >= 1/k, with binomial
/// standard error sqrt(p (1 - p) / n). Uses the composition stream `seed`.
MaxDepthValue max_depth_mc(std::size_t k, const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

/// Fraction of n draws V with V >= mean of the same draws; estimates the
/// limit for any spec.
MaxDepthValue max_depth_limit_mc(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace simdepth
