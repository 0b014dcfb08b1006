#include "simdepth/max_depth.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "simdepth/errors.hpp"
#include "simdepth/special.hpp"

namespace simdepth {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InputError("alpha must be positive and finite");
  }
}

double binomial_se(double p, std::size_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

}  // namespace

MaxDepthValue max_depth_gamma(std::size_t k, double alpha) {
  if (k < 2) {
    throw InputError("max_depth_gamma: k must be at least 2");
  }
  check_alpha(alpha);
  const double kd = static_cast<double>(k);
  MaxDepthValue out;
  out.value = 1.0 - regularized_incomplete_beta(alpha, (kd - 1.0) * alpha, 1.0 / kd);
  out.k = k;
  out.spec = DistributionSpec::gamma(alpha);
  out.within_hypothesis = alpha <= 1.0;
  return out;
}

MaxDepthValue max_depth_limit_gamma(double alpha) {
  check_alpha(alpha);
  MaxDepthValue out;
  out.value = regularized_upper_gamma(alpha, alpha);
  out.spec = DistributionSpec::gamma(alpha);
  out.within_hypothesis = alpha <= 1.0;
  return out;
}

MaxDepthValue max_depth_closed(std::size_t k, const DistributionSpec& spec) {
  if (!spec.is_gamma()) {
    throw InputError("no closed form for inverse_cdf_table specs; use the Monte Carlo estimate");
  }
  MaxDepthValue out = max_depth_gamma(k, spec.gamma_shape().alpha);
  out.spec = spec;
  return out;
}

MaxDepthValue max_depth_mc(std::size_t k, const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
  if (k < 2) {
    throw InputError("max_depth_mc: k must be at least 2");
  }
  if (n == 0) {
    throw InputError("max_depth_mc: n must be at least 1");
  }
  const double threshold = 1.0 / static_cast<double>(k);
  std::vector<double> buf(k);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    draw_composition(spec, seed, i, buf);
    if (buf[0] >= threshold) {
      ++hits;
    }
  }
  MaxDepthValue out;
  out.value = static_cast<double>(hits) / static_cast<double>(n);
  out.k = k;
  out.spec = spec;
  out.method = MaxDepthMethod::monte_carlo;
  out.mc_n = n;
  out.mc_seed = seed;
  // Floor at 1/(2n) keeps the error positive when every draw agrees.
  out.std_error = std::max(binomial_se(out.value, n), 0.5 / static_cast<double>(n));
  out.within_hypothesis = spec.in_unimodal_class();
  return out;
}

MaxDepthValue max_depth_limit_mc(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
  const std::vector<double> draws = sample_positive(spec, n, seed);
  double mean = 0.0;
  for (double v : draws) {
    mean += v;
  }
  mean /= static_cast<double>(n);
  std::size_t hits = 0;
  for (double v : draws) {
    if (v >= mean) {
      ++hits;
    }
  }
  MaxDepthValue out;
  out.value = static_cast<double>(hits) / static_cast<double>(n);
  out.spec = spec;
  out.method = MaxDepthMethod::monte_carlo;
  out.mc_n = n;
  out.mc_seed = seed;
  out.std_error = std::max(binomial_se(out.value, n), 0.5 / static_cast<double>(n));
  out.within_hypothesis = spec.in_unimodal_class();
  return out;
}

}  // namespace simdepth
