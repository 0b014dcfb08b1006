#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "simdepth/errors.hpp"
#include "simdepth/models.hpp"
#include "simdepth/special.hpp"

using namespace simdepth;

namespace {

double dkw(double confidence, std::size_t n) {
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(n)));
}

double ecdf_at(std::vector<double> v, double t) {
  return static_cast<double>(std::count_if(v.begin(), v.end(), [&](double x) { return x <= t; })) /
         static_cast<double>(v.size());
}

// Two-sample sup |F1 - F2| on sorted copies.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

std::vector<double> column(const EmpiricalSample& s, std::size_t j) {
  std::vector<double> out;
  for (const auto& p : s.points) out.push_back(p[j]);
  return out;
}

}  // namespace

TEST_CASE("distribution spec validation and class membership") {
  CHECK_THROWS_AS(DistributionSpec::gamma(0.0), InputError);
  CHECK_THROWS_AS(DistributionSpec::gamma(1.0, -1.0), InputError);
  CHECK(DistributionSpec::gamma(0.5).in_unimodal_class());
  CHECK(DistributionSpec::gamma(1.0).in_unimodal_class());
  CHECK_FALSE(DistributionSpec::gamma(4.0).in_unimodal_class());

  CHECK_THROWS_AS(DistributionSpec::table({}), InputError);
  CHECK_THROWS_AS(DistributionSpec::table({{0.5, 1.0}, {0.4, 2.0}}), InputError);
  CHECK_THROWS_AS(DistributionSpec::table({{0.0, 1.0}}), InputError);
  CHECK_THROWS_AS(DistributionSpec::table({{0.5, 2.0}, {0.7, 1.0}}), InputError);
  CHECK_THROWS_AS(DistributionSpec::table({{0.5, -1.0}}), InputError);

  // Uniform on (0, 1): linear quantile, flat density.
  CHECK(DistributionSpec::table({{0.5, 0.5}, {0.999, 0.999}}).in_unimodal_class());
  // Concave quantile = density increasing somewhere.
  CHECK_FALSE(DistributionSpec::table({{0.5, 2.0}, {0.9, 2.1}}).in_unimodal_class());
}

TEST_CASE("inverse-cdf table interpolation") {
  const auto spec = DistributionSpec::table({{0.5, 1.0}, {0.75, 3.0}});
  CHECK(spec.table_quantile(0.25) == doctest::Approx(0.5));
  CHECK(spec.table_quantile(0.5) == doctest::Approx(1.0));
  CHECK(spec.table_quantile(0.625) == doctest::Approx(2.0));
  CHECK(spec.table_quantile(0.9) == doctest::Approx(3.0));
}

TEST_CASE("gamma(1, 1/2) sample mean is 2") {
  const auto v = sample_positive(DistributionSpec::gamma(1.0, 0.5), 1000000, 7);
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  CHECK(std::abs(mean - 2.0) <= 3.0 * 2.0 / 1000.0);
}

TEST_CASE("gamma(4, 1/2) sample mean is 8") {
  const std::size_t n = 200000;
  const auto v = sample_positive(DistributionSpec::gamma(4.0, 0.5), n, 8);
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);
  CHECK(std::abs(mean - 8.0) <= 3.0 * 4.0 / std::sqrt(static_cast<double>(n)));  // sd = sqrt(4) / 0.5
}

TEST_CASE("gamma(1/2, 1/2) empirical cdf at the true median") {
  // Median m solves P(1/2, m/2) = 1/2; bisection on the regularized gamma.
  double lo = 0.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (regularized_lower_gamma(0.5, 0.5 * mid) < 0.5 ? lo : hi) = mid;
  }
  const double median = 0.5 * (lo + hi);
  CHECK(median == doctest::Approx(0.454936423119572).epsilon(1e-12));
  const std::size_t n = 100000;
  const auto v = sample_positive(DistributionSpec::gamma(0.5, 0.5), n, 9);
  CHECK(std::abs(ecdf_at(v, median) - 0.5) <= dkw(0.99, n));
}

TEST_CASE("sampling is deterministic and strictly positive") {
  const auto spec = DistributionSpec::gamma(0.5);
  const auto a = sample_positive(spec, 1000, 123);
  const auto b = sample_positive(spec, 1000, 123);
  const auto c = sample_positive(spec, 1000, 124);
  CHECK(a == b);
  CHECK(a != c);
  // Tiny shapes underflow p^(1/alpha); zero draws must be redrawn.
  for (double x : sample_positive(DistributionSpec::gamma(0.01), 20000, 5)) {
    REQUIRE(x > 0.0);
  }
  CHECK_THROWS_AS(sample_positive(spec, 0, 1), InputError);
}

TEST_CASE("compositions are valid and scale-free") {
  for (double alpha : {0.05, 0.25, 1.0, 4.0}) {
    const auto s = sample_composition(5, DistributionSpec::gamma(alpha), 2000, 31);
    CHECK(s.size() == 2000);
    for (const auto& p : s.points) {
      double sum = 0.0;
      for (double c : p.coords()) {
        REQUIRE(std::isfinite(c));
        sum += c;
      }
      REQUIRE(std::abs(sum - 1.0) <= 1e-12);
    }
  }
  const auto half = sample_composition(3, DistributionSpec::gamma(0.7, 0.5), 500, 4);
  const auto three = sample_composition(3, DistributionSpec::gamma(0.7, 3.0), 500, 4);
  for (std::size_t i = 0; i < 500; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(half.points[i][j] == doctest::Approx(three.points[i][j]).epsilon(1e-14));
  }
  CHECK_THROWS_AS(sample_composition(1, DistributionSpec::gamma(1), 10, 1), InputError);
  CHECK_THROWS_AS(sample_composition(3, DistributionSpec::gamma(1), 0, 1), InputError);
}

TEST_CASE("mean vector of sampled compositions is the barycentre") {
  const std::size_t n = 100000;
  for (double alpha : {0.25, 1.0, 4.0}) {
    const auto s = sample_composition(3, DistributionSpec::gamma(alpha), n, 100);
    for (std::size_t j = 0; j < 3; ++j) {
      const auto col = column(s, j);
      double mean = 0.0, sq = 0.0;
      for (double x : col) mean += x;
      mean /= static_cast<double>(n);
      for (double x : col) sq += (x - mean) * (x - mean);
      const double se = std::sqrt(sq / static_cast<double>(n - 1) / static_cast<double>(n));
      INFO("alpha=" << alpha << " j=" << j);
      CHECK(std::abs(mean - 1.0 / 3.0) <= 3.0 * se);
    }
  }
}

TEST_CASE("uniform simplex marginals") {
  const std::size_t n = 100000;
  // k = 2: first coordinate uniform on [0, 1].
  auto x = column(sample_uniform_simplex(2, n, 17), 0);
  std::sort(x.begin(), x.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ks = std::max({ks, std::abs(static_cast<double>(i + 1) / n - x[i]), std::abs(static_cast<double>(i) / n - x[i])});
  }
  CHECK(ks <= dkw(0.99, n));

  // k = 3: X1 ~ Beta(1, 2); P[X1 >= 1/3] = 4/9 and P[X1 <= 1/3] = 5/9.
  const auto s3 = sample_uniform_simplex(3, n, 18);
  const auto c0 = column(s3, 0);
  const double p_ge = static_cast<double>(std::count_if(c0.begin(), c0.end(), [](double v) { return v >= 1.0 / 3.0; })) / n;
  const double se = std::sqrt(4.0 / 9.0 * 5.0 / 9.0 / n);
  CHECK(std::abs(p_ge - 4.0 / 9.0) <= 3.0 * se);
  CHECK(std::abs(ecdf_at(c0, 1.0 / 3.0) - 5.0 / 9.0) <= 3.0 * se);

  CHECK(s3.uniform_family);
  CHECK(s3.points == sample_composition(3, DistributionSpec::gamma(1.0, 0.5), n, 18).points);
}

TEST_CASE("coordinates are exchangeable in distribution") {
  const std::size_t n = 100000;
  const auto s = sample_composition(3, DistributionSpec::gamma(0.5), n, 55);
  const double band = 2.0 * dkw(0.99, n);
  CHECK(ks_two_sample(column(s, 0), column(s, 1)) <= band);
  CHECK(ks_two_sample(column(s, 0), column(s, 2)) <= band);
  CHECK(ks_two_sample(column(s, 1), column(s, 2)) <= band);
}

TEST_CASE("inverse-cdf table sampling") {
  // Knots of the Exp(rate 1/2) quantile -2 log(1 - p).
  std::vector<std::pair<double, double>> knots;
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    knots.emplace_back(p, -2.0 * std::log1p(-p));
  }
  const auto spec = DistributionSpec::table(knots);
  CHECK(spec.in_unimodal_class());
  const std::size_t n = 100000;
  const auto v = sample_positive(spec, n, 3);
  CHECK(std::abs(ecdf_at(v, 2.0 * std::log(2.0)) - 0.5) <= dkw(0.99, n) + 1e-3);
  const auto s = sample_composition(3, spec, 1000, 3);
  CHECK(s.size() == 1000);
}

TEST_CASE("sample CSV round trip") {
  const auto s = sample_composition(4, DistributionSpec::gamma(0.3), 300, 2024);
  std::stringstream ss;
  write_sample_csv(ss, s);
  const std::string text = ss.str();
  CHECK(text.rfind("# spec=gamma_shape(alpha=0.29999999999999999,rate=0.5) seed=2024 n=300 k=4", 0) == 0);
  const auto back = read_points_csv(ss);
  CHECK(back == s.points);
}

TEST_CASE("point CSV errors") {
  std::istringstream ragged("0.5,0.5\n0.2,0.3,0.5\n");
  CHECK_THROWS_AS(read_points_csv(ragged), InputError);
  std::istringstream junk("0.5,abc\n");
  CHECK_THROWS_AS(read_points_csv(junk), InputError);
  std::istringstream off("0.5,0.6\n");
  CHECK_THROWS_AS(read_points_csv(off), InputError);
  std::istringstream ok("# meta\n\n0.5,0.5\r\n0.25,0.75\n");
  CHECK(read_points_csv(ok).size() == 2);
}
