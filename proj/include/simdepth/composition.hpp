#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace simdepth {

inline constexpr double kSimplexSumTolerance = 1e-12;

/// A point of the probability simplex: nonnegative coordinates summing to 1.
class Composition {
 public:
  /// Validates and wraps. Throws InputError on a negative, non-finite, or
  /// mis-normalized coordinate vector (|sum - 1| > tolerance).
  explicit Composition(std::vector<double> coords, double tolerance = kSimplexSumTolerance);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<double> coords_;
};

/// A point of the (k-1)-dimensional embedding space of the simplex.
struct PlanarPoint {
  std::vector<double> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  double operator[](std::size_t i) const noexcept { return coords[i]; }

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// (1/k, ..., 1/k).
Composition mean_vector(std::size_t k);

/// Maps the affine hyperplane {x : sum x = 1} isometrically onto R^(k-1):
/// y_j = <h_j, x - mu_k> with the Helmert basis
/// h_j = (1, ..., 1, -j, 0, ..., 0) / sqrt(j (j + 1)), j = 1..k-1.
/// The barycentre maps to the origin.
PlanarPoint embed_simplex(const Composition& point);
PlanarPoint embed_simplex(std::span<const double> coords);
std::vector<PlanarPoint> embed_simplex(std::span<const Composition> points);

}  // namespace simdepth
