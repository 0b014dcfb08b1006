#include "simdepth/composition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simdepth/errors.hpp"

namespace simdepth {

Composition::Composition(std::vector<double> coords, double tolerance) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw InputError("composition must have at least one coordinate");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double c = coords_[i];
    if (!std::isfinite(c) || c < 0.0) {
      throw InputError("composition coordinate " + std::to_string(i) + " is negative or not finite");
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw InputError("composition coordinates sum to " + std::to_string(sum) + ", not 1");
  }
}

Composition mean_vector(std::size_t k) {
  if (k < 2) {
    throw InputError("mean_vector requires k >= 2");
  }
  // Summation error of k copies of 1/k grows like k * eps.
  return Composition(std::vector<double>(k, 1.0 / static_cast<double>(k)),
                     std::max(kSimplexSumTolerance, 4.0 * static_cast<double>(k) * 1e-16));
}

PlanarPoint embed_simplex(std::span<const double> x) {
  const std::size_t k = x.size();
  if (k < 2) {
    throw InputError("embed_simplex requires k >= 2");
  }
  const double mu = 1.0 / static_cast<double>(k);
  PlanarPoint out;
  out.coords.resize(k - 1);
  // Running prefix sum of (x_i - mu) gives each Helmert coordinate in O(1).
  double prefix = 0.0;
  for (std::size_t j = 1; j < k; ++j) {
    prefix += x[j - 1] - mu;
    const double jd = static_cast<double>(j);
    out.coords[j - 1] = (prefix - jd * (x[j] - mu)) / std::sqrt(jd * (jd + 1.0));
  }
  return out;
}

PlanarPoint embed_simplex(const Composition& point) { return embed_simplex(point.coords()); }

std::vector<PlanarPoint> embed_simplex(std::span<const Composition> points) {
  std::vector<PlanarPoint> out;
  if (points.empty()) {
    return out;
  }
  const std::size_t k = points.front().dim();
  if (k < 2) {
    throw InputError("embed_simplex requires k >= 2");
  }
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != k) {
      throw InputError("embed_simplex: dimension mismatch among points");
    }
    out.push_back(embed_simplex(p.coords()));
  }
  return out;
}

}  // namespace simdepth
