#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simdepth/composition.hpp"

namespace simdepth {

/// Reduced nonnegative fraction.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  std::string str() const;
};

/// Empirical halfspace depth: `count` sample points lie in the minimizing
/// closed halfspace whose inner normal is `witness_direction`.
struct DepthResult {
  std::size_t count = 0;
  std::size_t n = 0;
  std::vector<double> witness_direction;

  Fraction fraction() const;
  double value() const { return static_cast<double>(count) / static_cast<double>(n); }
};

/// Number of points x with <u, x - theta> >= 0.
std::size_t closed_halfspace_count(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                                   std::span<const double> u);

struct SweepOptions {
  /// Angles closer than this (radians) are treated as one direction.
  double angle_tolerance = 1e-12;
};

/// Exact planar depth by angular sweep, O(n log n).
/// Points equal to theta belong to every closed halfspace.
DepthResult depth_exact_2d(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                           SweepOptions options = {});

struct BruteOptions {
  /// Refuse when C(n, d-1) * 2 * n halfspace membership tests exceed this.
  double max_evaluations = 1e8;
  /// Dot products within tol * |u| * |v| of zero count as on the boundary.
  double zero_tolerance = 1e-12;
};

/// Depth by enumeration of the candidate directions: normals of hyperplanes
/// through theta and every (d-1)-subset of sample points, each tilted
/// symbolically off the subset toward either closed side, plus the
/// coordinate directions. Exact for d <= 2; exact in general position for d >= 3.
DepthResult depth_brute(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                        BruteOptions options = {});

/// Upper bound on depth from the coordinate directions (and negations) plus
/// `num_directions` uniform directions. Direction i comes from stream i of
/// `seed`, so the direction set for m directions is a prefix of the set for
/// any m' > m.
DepthResult depth_approx(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                         std::size_t num_directions, std::uint64_t seed);

}  // namespace simdepth
