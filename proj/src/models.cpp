#include "simdepth/models.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "simdepth/errors.hpp"
#include "simdepth/format.hpp"

namespace simdepth {

DistributionSpec DistributionSpec::gamma(double alpha, double rate) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InputError("gamma_shape: alpha must be positive and finite");
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw InputError("gamma_shape: rate must be positive and finite");
  }
  return DistributionSpec(GammaShape{alpha, rate});
}

DistributionSpec DistributionSpec::table(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) {
    throw InputError("inverse_cdf_table: needs at least one knot");
  }
  double prev_p = 0.0;
  double prev_q = 0.0;
  for (const auto& [p, q] : knots) {
    if (!(p > prev_p) || !(p < 1.0)) {
      throw InputError("inverse_cdf_table: probabilities must be strictly increasing in (0,1)");
    }
    if (!std::isfinite(q) || q < prev_q) {
      throw InputError("inverse_cdf_table: quantiles must be nonnegative and nondecreasing");
    }
    prev_p = p;
    prev_q = q;
  }
  return DistributionSpec(InverseCdfTable{std::move(knots)});
}

const GammaShape& DistributionSpec::gamma_shape() const {
  if (const auto* g = std::get_if<GammaShape>(&family_)) {
    return *g;
  }
  throw InputError("distribution is not a gamma_shape family");
}

const InverseCdfTable& DistributionSpec::inverse_cdf_table() const {
  if (const auto* t = std::get_if<InverseCdfTable>(&family_)) {
    return *t;
  }
  throw InputError("distribution is not an inverse_cdf_table");
}

bool DistributionSpec::in_unimodal_class() const noexcept {
  if (const auto* g = std::get_if<GammaShape>(&family_)) {
    return g->alpha <= 1.0;
  }
  // Concave cdf <=> convex quantile function <=> non-decreasing slopes.
  const auto& knots = std::get<InverseCdfTable>(family_).knots;
  double prev_p = 0.0;
  double prev_q = 0.0;
  double prev_slope = 0.0;
  for (const auto& [p, q] : knots) {
    const double slope = (q - prev_q) / (p - prev_p);
    if (slope < prev_slope * (1.0 - 1e-12)) {
      return false;
    }
    prev_slope = slope;
    prev_p = p;
    prev_q = q;
  }
  return true;
}

double DistributionSpec::table_quantile(double u) const {
  const auto& knots = inverse_cdf_table().knots;
  double prev_p = 0.0;
  double prev_q = 0.0;
  for (const auto& [p, q] : knots) {
    if (u <= p) {
      return prev_q + (q - prev_q) * (u - prev_p) / (p - prev_p);
    }
    prev_p = p;
    prev_q = q;
  }
  return knots.back().second;
}

std::string DistributionSpec::describe() const {
  if (const auto* g = std::get_if<GammaShape>(&family_)) {
    return "gamma_shape(alpha=" + fmt_g17(g->alpha) + ",rate=" + fmt_g17(g->rate) + ")";
  }
  const auto& knots = std::get<InverseCdfTable>(family_).knots;
  return "inverse_cdf_table(knots=" + std::to_string(knots.size()) + ")";
}

double sample_standard_gamma(double alpha, CounterRng& rng) {
  if (alpha <= 1.0) {
    const double b = (std::numbers::e + alpha) / std::numbers::e;
    for (;;) {
      const double p = b * rng.uniform();
      if (p <= 1.0) {
        const double x = std::pow(p, 1.0 / alpha);
        if (rng.uniform() <= std::exp(-x)) {
          return x;
        }
      } else {
        const double x = -std::log((b - p) / alpha);
        if (rng.uniform() <= std::pow(x, alpha - 1.0)) {
          return x;
        }
      }
    }
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = rng.normal();
    double v = 1.0 + c * z;
    if (v <= 0.0) {
      continue;
    }
    v = v * v * v;
    const double u = rng.uniform();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) {
      return d * v;
    }
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

double sample_one(const DistributionSpec& spec, CounterRng& rng) {
  for (;;) {
    double x = 0.0;
    if (spec.is_gamma()) {
      const auto& g = spec.gamma_shape();
      x = sample_standard_gamma(g.alpha, rng) / g.rate;
    } else {
      x = spec.table_quantile(rng.uniform());
    }
    if (x > 0.0) {
      return x;
    }
  }
}

std::vector<double> sample_positive(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw InputError("sample_positive: n must be at least 1");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng(seed, i);
    out[i] = sample_one(spec, rng);
  }
  return out;
}

void draw_composition(const DistributionSpec& spec, std::uint64_t seed, std::uint64_t index,
                      std::span<double> out) {
  CounterRng rng(seed, index);
  double sum = 0.0;
  for (double& v : out) {
    v = sample_one(spec, rng);
    sum += v;
  }
  for (double& v : out) {
    v /= sum;
  }
}

EmpiricalSample sample_composition(std::size_t k, const DistributionSpec& spec, std::size_t n,
                                   std::uint64_t seed) {
  if (k < 2) {
    throw InputError("sample_composition: k must be at least 2");
  }
  if (n == 0) {
    throw InputError("sample_composition: n must be at least 1");
  }
  EmpiricalSample sample{{}, spec, seed, k, false};
  sample.points.reserve(n);
  std::vector<double> buf(k);
  for (std::size_t i = 0; i < n; ++i) {
    draw_composition(spec, seed, i, buf);
    sample.points.emplace_back(buf);
  }
  return sample;
}

EmpiricalSample sample_uniform_simplex(std::size_t k, std::size_t n, std::uint64_t seed) {
  EmpiricalSample sample = sample_composition(k, DistributionSpec::gamma(1.0, 0.5), n, seed);
  sample.uniform_family = true;
  return sample;
}

void write_sample_csv(std::ostream& os, const EmpiricalSample& sample) {
  os << "# spec=" << sample.spec.describe() << " seed=" << sample.seed << " n=" << sample.size()
     << " k=" << sample.k << (sample.uniform_family ? " family=uniform" : "") << '\n';
  for (const auto& p : sample.points) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (j > 0) {
        os << ',';
      }
      os << fmt_g17(p[j]);
    }
    os << '\n';
  }
}

std::vector<Composition> read_points_csv(std::istream& is, double tolerance) {
  std::vector<Composition> points;
  std::string line;
  std::size_t lineno = 0;
  std::size_t k = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::vector<double> row;
    try {
      row = parse_double_list(line);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (k == 0) {
      k = row.size();
    } else if (row.size() != k) {
      throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(k) + " columns");
    }
    try {
      points.emplace_back(std::move(row), tolerance);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return points;
}

}  // namespace simdepth
