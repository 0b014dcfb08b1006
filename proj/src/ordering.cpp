#include "simdepth/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

#include "simdepth/errors.hpp"
#include "simdepth/format.hpp"

namespace simdepth {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w)) {
      throw InputError("weight vector entries must be finite");
    }
    sum_ += w;
  }
}

bool is_majorized(const WeightVector& a, const WeightVector& b, double tol) {
  if (a.size() != b.size()) {
    throw InputError("is_majorized: vectors have different lengths");
  }
  if (std::abs(a.sum() - b.sum()) > tol) {
    throw InputError("is_majorized: vectors have different totals");
  }
  std::vector<double> sa(a.weights().begin(), a.weights().end());
  std::vector<double> sb(b.weights().begin(), b.weights().end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  double pa = 0.0;
  double pb = 0.0;
  for (std::size_t r = 0; r + 1 < sa.size(); ++r) {
    pa += sa[r];
    pb += sb[r];
    if (pa > pb + tol) {
      return false;
    }
  }
  return true;
}

OrderingVerdict empirical_stochastic_order(std::span<const double> x_samples, std::span<const double> y_samples,
                                           double confidence) {
  if (x_samples.empty() || y_samples.empty()) {
    throw InputError("empirical_stochastic_order: samples must be nonempty");
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw InputError("empirical_stochastic_order: confidence must lie in (0, 1)");
  }
  std::vector<double> x(x_samples.begin(), x_samples.end());
  std::vector<double> y(y_samples.begin(), y_samples.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());

  OrderingVerdict verdict;
  verdict.gap = -std::numeric_limits<double>::infinity();
  std::size_t ix = 0;
  std::size_t iy = 0;
  // Walk the pooled sample in increasing order; after consuming every value
  // <= t, the survival functions are the unconsumed fractions.
  while (ix < x.size() || iy < y.size()) {
    double t = 0.0;
    if (iy == y.size() || (ix < x.size() && x[ix] <= y[iy])) {
      t = x[ix];
    } else {
      t = y[iy];
    }
    while (ix < x.size() && x[ix] <= t) ++ix;
    while (iy < y.size() && y[iy] <= t) ++iy;
    const double gap = (nx - static_cast<double>(ix)) / nx - (ny - static_cast<double>(iy)) / ny;
    if (gap > verdict.gap) {
      verdict.gap = gap;
      verdict.worst_t = t;
    }
  }
  const double log_term = std::log(2.0 / (1.0 - confidence));
  verdict.band = std::sqrt(log_term / (2.0 * nx)) + std::sqrt(log_term / (2.0 * ny));
  verdict.status = verdict.gap > verdict.band ? OrderingStatus::violated : OrderingStatus::consistent;
  return verdict;
}

namespace {

std::vector<double> ratio_sample(const DistributionSpec& spec_w, const DistributionSpec& spec_q,
                                 const WeightVector& weights, std::size_t n, std::uint64_t seed) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng(seed, i);
    const double w = sample_one(spec_w, rng);
    double denom = 0.0;
    for (double c : weights.weights()) {
      denom += c * sample_one(spec_q, rng);
    }
    if (!(denom > 0.0)) {
      throw InputError("eaton_olshen_probe: nonpositive denominator");
    }
    out[i] = w / denom;
  }
  return out;
}

void check_probe_weights(const WeightVector& v) {
  for (double c : v.weights()) {
    if (c < 0.0) {
      throw InputError("eaton_olshen_probe: weights must be nonnegative");
    }
  }
  if (!(v.sum() > 0.0)) {
    throw InputError("eaton_olshen_probe: weights must have a positive total");
  }
}

}  // namespace

OrderingVerdict eaton_olshen_probe(const DistributionSpec& spec_w, const DistributionSpec& spec_q,
                                   const WeightVector& a, const WeightVector& b, std::size_t n,
                                   std::uint64_t seed, double confidence) {
  if (n == 0) {
    throw InputError("eaton_olshen_probe: n must be at least 1");
  }
  if (!is_majorized(a, b, 1e-12)) {
    throw InputError("eaton_olshen_probe: a is not majorized by b");
  }
  check_probe_weights(a);
  check_probe_weights(b);
  const auto left = ratio_sample(spec_w, spec_q, a, n, derive_seed(seed, 0));
  const auto right = ratio_sample(spec_w, spec_q, b, n, derive_seed(seed, 1));
  return empirical_stochastic_order(left, right, confidence);
}

MajorizationPair random_majorization_pair(CounterRng& rng, std::size_t min_len, std::size_t max_len) {
  if (min_len < 1 || max_len < min_len) {
    throw InputError("random_majorization_pair: bad length range");
  }
  const std::size_t m = min_len + static_cast<std::size_t>(rng() % (max_len - min_len + 1));
  std::vector<double> b(m, 0.0);
  if (rng.uniform() < 0.25) {
    b[static_cast<std::size_t>(rng() % m)] = 1.0;
  } else {
    const double power = 1.0 + 3.0 * rng.uniform();
    double total = 0.0;
    for (double& v : b) {
      v = std::pow(-std::log(rng.uniform()), power);
      total += v;
    }
    for (double& v : b) {
      v /= total;
    }
  }
  const double lambda = 0.9 * rng.uniform();
  const double md = static_cast<double>(m);
  std::vector<double> a(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = lambda * b[i] + (1.0 - lambda) / md;
  }
  return {WeightVector(std::move(a)), WeightVector(std::move(b))};
}

std::vector<Counterexample> counterexample_search(std::span<const double> alpha_grid, std::size_t pair_budget,
                                                  std::size_t n, std::uint64_t seed, SearchOptions options) {
  std::vector<Counterexample> report;
  for (std::size_t ai = 0; ai < alpha_grid.size(); ++ai) {
    const double alpha = alpha_grid[ai];
    const DistributionSpec spec = DistributionSpec::gamma(alpha);
    for (std::size_t p = 0; p < pair_budget; ++p) {
      CounterRng rng(derive_seed(seed, ai), p);
      const MajorizationPair pair = random_majorization_pair(rng);
      const std::uint64_t probe_seed = derive_seed(seed, ai, p, 1);
      const OrderingVerdict v = eaton_olshen_probe(spec, spec, pair.a, pair.b, n, probe_seed, options.confidence);
      if (v.violated()) {
        report.push_back({alpha,
                          {pair.a.weights().begin(), pair.a.weights().end()},
                          {pair.b.weights().begin(), pair.b.weights().end()},
                          v.gap,
                          v.worst_t,
                          n,
                          probe_seed});
      }
    }
  }
  return report;
}

OrderingVerdict confirm_counterexample(const Counterexample& c, std::size_t factor, std::uint64_t seed,
                                       double confidence) {
  const DistributionSpec spec = DistributionSpec::gamma(c.alpha);
  return eaton_olshen_probe(spec, spec, WeightVector(c.a), WeightVector(c.b), c.n * factor, seed, confidence);
}

void write_search_csv(std::ostream& os, std::span<const Counterexample> report) {
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ';';
      s += fmt_g17(v[i]);
    }
    return s;
  };
  os << "alpha,a,b,gap,worst_t,n,seed\n";
  for (const auto& c : report) {
    os << fmt_g17(c.alpha) << ',' << join(c.a) << ',' << join(c.b) << ',' << fmt_g17(c.gap) << ','
       << fmt_g17(c.worst_t) << ',' << c.n << ',' << c.seed << '\n';
  }
}

}  // namespace simdepth
