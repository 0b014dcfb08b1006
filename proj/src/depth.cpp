#include "simdepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>

#include "simdepth/errors.hpp"
#include "simdepth/random.hpp"

namespace simdepth {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void check_sample(const PlanarPoint& theta, std::span<const PlanarPoint> sample) {
  if (sample.empty()) {
    throw InputError("depth: sample is empty");
  }
  if (theta.dim() == 0) {
    throw InputError("depth: theta has no coordinates");
  }
  for (const auto& x : sample) {
    if (x.dim() != theta.dim()) {
      throw InputError("depth: sample point dimension differs from theta");
    }
  }
}

std::vector<double> normalized(std::vector<double> u) {
  const double len = norm(u);
  if (len > 0.0) {
    for (double& c : u) {
      c /= len;
    }
  }
  return u;
}

struct AngleGroup {
  double angle;  // angle of the first member
  double last;   // angle of the last member, for chaining near-ties
  std::size_t count;
};

// Solves the dense system m * x = rhs in place (partial pivoting).
// Returns false when a pivot is below `eps` relative to the matrix scale.
bool solve_in_place(std::vector<double>& m, std::vector<double>& rhs, std::size_t dim, double eps) {
  double scale = 0.0;
  for (double c : m) {
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0) {
    return false;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (std::abs(m[r * dim + col]) > std::abs(m[piv * dim + col])) {
        piv = r;
      }
    }
    if (std::abs(m[piv * dim + col]) <= eps * scale) {
      return false;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < dim; ++c) {
        std::swap(m[col * dim + c], m[piv * dim + c]);
      }
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double f = m[r * dim + col] / m[col * dim + col];
      for (std::size_t c = col; c < dim; ++c) {
        m[r * dim + c] -= f * m[col * dim + c];
      }
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = dim; r-- > 0;) {
    double s = rhs[r];
    for (std::size_t c = r + 1; c < dim; ++c) {
      s -= m[r * dim + c] * rhs[c];
    }
    rhs[r] = s / m[r * dim + r];
  }
  return true;
}

double determinant(std::vector<double> m, std::size_t dim) {
  double det = 1.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (std::abs(m[r * dim + col]) > std::abs(m[piv * dim + col])) {
        piv = r;
      }
    }
    if (m[piv * dim + col] == 0.0) {
      return 0.0;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < dim; ++c) {
        std::swap(m[col * dim + c], m[piv * dim + c]);
      }
      det = -det;
    }
    det *= m[col * dim + col];
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double f = m[r * dim + col] / m[col * dim + col];
      for (std::size_t c = col; c < dim; ++c) {
        m[r * dim + c] -= f * m[col * dim + c];
      }
    }
  }
  return det;
}

// Normal of the hyperplane spanned by the rows (generalized cross product).
std::vector<double> hyperplane_normal(const std::vector<std::span<const double>>& rows, std::size_t d) {
  std::vector<double> normal(d);
  if (d == 1) {
    normal[0] = 1.0;
    return normal;
  }
  const std::size_t m = d - 1;
  std::vector<double> minor(m * m);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < m; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != j) {
          minor[r * m + cc++] = rows[r][c];
        }
      }
    }
    const double sign = ((j + m) % 2 == 0) ? 1.0 : -1.0;
    normal[j] = sign * determinant(minor, m);
  }
  return normal;
}

// Least-norm w with <w, row_r> = -1 for every row: w = R^T (R R^T)^-1 (-1).
std::optional<std::vector<double>> tilt_direction(const std::vector<std::span<const double>>& rows,
                                                  std::size_t d) {
  const std::size_t m = rows.size();
  std::vector<double> w(d, 0.0);
  if (m == 0) {
    return w;
  }
  std::vector<double> gram(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      gram[a * m + b] = dot(rows[a], rows[b]);
    }
  }
  std::vector<double> coef(m, -1.0);
  if (!solve_in_place(gram, coef, m, 1e-13)) {
    return std::nullopt;
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < d; ++c) {
      w[c] += coef[a] * rows[a][c];
    }
  }
  return w;
}

}  // namespace

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Fraction DepthResult::fraction() const {
  if (n == 0) {
    return {0, 1};
  }
  const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(count, n);
  return {count / g, n / g};
}

std::size_t closed_halfspace_count(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                                   std::span<const double> u) {
  std::size_t count = 0;
  const std::size_t d = theta.dim();
  for (const auto& x : sample) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      s += u[j] * (x[j] - theta[j]);
    }
    if (s >= 0.0) {
      ++count;
    }
  }
  return count;
}

DepthResult depth_exact_2d(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                           SweepOptions options) {
  check_sample(theta, sample);
  if (theta.dim() != 2) {
    throw InputError("depth_exact_2d: points must be 2-dimensional");
  }
  const double tol = options.angle_tolerance;

  std::size_t coincident = 0;
  std::vector<double> angles;
  angles.reserve(sample.size());
  for (const auto& x : sample) {
    const double dx = x[0] - theta[0];
    const double dy = x[1] - theta[1];
    if (dx == 0.0 && dy == 0.0) {
      ++coincident;
    } else {
      angles.push_back(std::atan2(dy, dx));
    }
  }

  DepthResult result;
  result.n = sample.size();
  if (angles.empty()) {
    result.count = coincident;
    result.witness_direction = {1.0, 0.0};
    return result;
  }
  std::sort(angles.begin(), angles.end());

  std::vector<AngleGroup> groups;
  for (double a : angles) {
    if (!groups.empty() && a - groups.back().last <= tol) {
      groups.back().last = a;
      ++groups.back().count;
    } else {
      groups.push_back({a, a, 1});
    }
  }
  if (groups.size() > 1 && groups.front().angle + 2.0 * kPi - groups.back().last <= tol) {
    groups.front().count += groups.back().count;
    groups.pop_back();
  }

  // A closed halfplane with inner normal at angle psi holds the points with
  // angle in [psi - pi/2, psi + pi/2]. Its minimum over psi is attained on an
  // open arc of directions whose leading edge psi + pi/2 sits just below some
  // group g; there the count is the mass of groups with angle in
  // [a_g - pi, a_g). Groups are unrolled twice around the circle.
  const std::size_t m = groups.size();
  std::vector<double> a(2 * m);
  std::vector<std::size_t> prefix(2 * m + 1, 0);
  for (std::size_t i = 0; i < 2 * m; ++i) {
    a[i] = groups[i % m].angle + (i >= m ? 2.0 * kPi : 0.0);
    prefix[i + 1] = prefix[i] + groups[i % m].count;
  }

  std::size_t best = std::numeric_limits<std::size_t>::max();
  double best_angle = 0.0;
  std::size_t lo = 0;
  for (std::size_t g = m; g < 2 * m; ++g) {
    while (a[lo] < a[g] - kPi - tol) {
      ++lo;
    }
    const std::size_t cnt = prefix[g] - prefix[lo];
    if (cnt < best) {
      best = cnt;
      const double left = std::max(a[g - 1], a[lo - 1] + kPi);
      best_angle = 0.5 * (left + a[g]) - 0.5 * kPi;
    }
  }

  result.count = best + coincident;
  result.witness_direction = {std::cos(best_angle), std::sin(best_angle)};
  return result;
}

DepthResult depth_brute(const PlanarPoint& theta, std::span<const PlanarPoint> sample, BruteOptions options) {
  check_sample(theta, sample);
  const std::size_t d = theta.dim();
  const std::size_t n = sample.size();
  const double tol = options.zero_tolerance;

  std::vector<std::vector<double>> offsets;
  std::size_t coincident = 0;
  for (const auto& x : sample) {
    std::vector<double> v(d);
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j) {
      v[j] = x[j] - theta[j];
      zero = zero && v[j] == 0.0;
    }
    if (zero) {
      ++coincident;
    } else {
      offsets.push_back(std::move(v));
    }
  }

  DepthResult result;
  result.n = n;
  result.count = n;
  result.witness_direction.assign(d, 0.0);
  result.witness_direction[0] = 1.0;
  if (offsets.empty()) {
    return result;
  }

  const std::size_t p = offsets.size();
  const std::size_t subset_size = d - 1;
  double subsets = 1.0;
  for (std::size_t i = 0; i < subset_size; ++i) {
    subsets = subsets * static_cast<double>(p - i) / static_cast<double>(i + 1);
  }
  if (subset_size > p) {
    subsets = 0.0;
  }
  if (subsets * 2.0 * static_cast<double>(n) > options.max_evaluations) {
    throw BudgetError("depth_brute: " + std::to_string(subsets * 2.0 * static_cast<double>(n)) +
                      " evaluations exceed the budget");
  }

  auto consider = [&](std::size_t count, std::vector<double> u) {
    if (count < result.count) {
      result.count = count;
      result.witness_direction = normalized(std::move(u));
    }
  };

  for (std::size_t j = 0; j < d; ++j) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> u(d, 0.0);
      u[j] = s;
      consider(closed_halfspace_count(theta, sample, u), u);
    }
  }

  std::vector<double> lengths(p);
  for (std::size_t i = 0; i < p; ++i) {
    lengths[i] = norm(offsets[i]);
  }

  std::vector<std::size_t> idx(subset_size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::span<const double>> rows(subset_size);
  while (subset_size <= p) {
    for (std::size_t r = 0; r < subset_size; ++r) {
      rows[r] = offsets[idx[r]];
    }
    std::vector<double> normal = hyperplane_normal(rows, d);
    double scale = 1.0;
    for (std::size_t r = 0; r < subset_size; ++r) {
      scale *= lengths[idx[r]];
    }
    const double nlen = norm(normal);
    const auto w = tilt_direction(rows, d);
    if (nlen > 1e-12 * scale && w) {
      const double wlen = norm(*w);
      for (double s : {1.0, -1.0}) {
        // Limit of the closed count for s * normal + eps * w as eps -> 0+.
        std::size_t count = coincident;
        for (std::size_t i = 0; i < p; ++i) {
          const double dn = s * dot(normal, offsets[i]);
          const double bound = tol * nlen * lengths[i];
          if (dn > bound) {
            ++count;
          } else if (dn >= -bound && dot(*w, offsets[i]) >= -tol * wlen * lengths[i]) {
            ++count;
          }
        }
        if (count < result.count) {
          std::vector<double> u(d);
          const double eps = 1e-9 * nlen / std::max(wlen, std::numeric_limits<double>::min());
          for (std::size_t c = 0; c < d; ++c) {
            u[c] = s * normal[c] + eps * (*w)[c];
          }
          consider(count, std::move(u));
        }
      }
    }

    // Next combination in lexicographic order.
    if (subset_size == 0) {
      break;
    }
    std::size_t r = subset_size;
    while (r > 0 && idx[r - 1] == p - subset_size + r - 1) {
      --r;
    }
    if (r == 0) {
      break;
    }
    ++idx[r - 1];
    for (std::size_t q = r; q < subset_size; ++q) {
      idx[q] = idx[q - 1] + 1;
    }
  }
  return result;
}

DepthResult depth_approx(const PlanarPoint& theta, std::span<const PlanarPoint> sample,
                         std::size_t num_directions, std::uint64_t seed) {
  if (num_directions == 0) {
    throw InputError("depth_approx: num_directions must be positive");
  }
  check_sample(theta, sample);
  const std::size_t d = theta.dim();

  DepthResult result;
  result.n = sample.size();
  result.count = std::numeric_limits<std::size_t>::max();
  auto consider = [&](std::vector<double> u) {
    const std::size_t count = closed_halfspace_count(theta, sample, u);
    if (count < result.count) {
      result.count = count;
      result.witness_direction = std::move(u);
    }
  };

  for (std::size_t j = 0; j < d; ++j) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> u(d, 0.0);
      u[j] = s;
      consider(std::move(u));
    }
  }
  std::vector<double> u(d);
  for (std::size_t i = 0; i < num_directions; ++i) {
    CounterRng rng(seed, i);
    double len = 0.0;
    do {
      for (double& c : u) {
        c = rng.normal();
      }
      len = norm(u);
    } while (len == 0.0);
    for (double& c : u) {
      c /= len;
    }
    consider(u);
  }
  return result;
}

}  // namespace simdepth
