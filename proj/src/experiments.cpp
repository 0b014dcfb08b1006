#include "simdepth/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "simdepth/errors.hpp"
#include "simdepth/format.hpp"
#include "simdepth/max_depth.hpp"
#include "simdepth/models.hpp"
#include "simdepth/random.hpp"
#include "simdepth/svg.hpp"

namespace simdepth {

namespace {

// Stream tags keep the experiments' random streams disjoint.
enum : std::uint64_t { kTagFig1 = 1, kTagFig2Locations, kTagFig2Samples, kTagFig3, kTagTheorem1, kTagApprox };

void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw InputError("cannot open " + path.string() + " for writing");
  }
  os << content;
  if (!os) {
    throw InputError("failed writing " + path.string());
  }
}

std::string alpha_label(double alpha) {
  std::ostringstream os;
  os << "alpha=" << alpha;
  return os.str();
}

class DepthEvaluator {
 public:
  DepthEvaluator(const ExperimentConfig& config) : k_(config.k), directions_(config.approx_directions),
                                                   seed_(derive_seed(config.seed, kTagApprox)) {
    if (k_ != 3 && directions_ == 0) {
      throw InputError("exact depth needs k = 3; set approx_directions for other k");
    }
  }

  double operator()(const PlanarPoint& theta, std::span<const PlanarPoint> sample) const {
    if (k_ == 3) {
      return depth_exact_2d(theta, sample).value();
    }
    return depth_approx(theta, sample, directions_, seed_).value();
  }

 private:
  std::size_t k_;
  std::size_t directions_;
  std::uint64_t seed_;
};

std::vector<PlanarPoint> embedded_sample(std::size_t k, double alpha, std::size_t n, std::uint64_t seed) {
  const EmpiricalSample s = sample_composition(k, DistributionSpec::gamma(alpha), n, seed);
  return embed_simplex(std::span<const Composition>(s.points));
}

}  // namespace

void ExperimentConfig::validate() const {
  if (k < 2) throw InputError("config: k must be at least 2");
  if (alphas.empty()) throw InputError("config: alphas must be nonempty");
  for (double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) throw InputError("config: alphas must be positive");
  }
  if (locations == 0 || sample_size == 0 || replicates == 0 || mc_n == 0 || grid_resolution == 0) {
    throw InputError("config: counts must be at least 1");
  }
  for (std::size_t n : sample_sizes) {
    if (n == 0) throw InputError("config: sample sizes must be at least 1");
  }
}

ExperimentConfig fig1_config(Scale, std::uint64_t seed) {
  ExperimentConfig c;
  c.alphas = {0.25, 0.5, 1.0, 4.0};
  c.k_max = 50;
  c.mc_n = 1000000;
  c.seed = seed;
  return c;
}

ExperimentConfig fig2_config(Scale scale, std::uint64_t seed) {
  ExperimentConfig c;
  c.alphas = {4.0, 1.0, 0.5, 0.25};
  c.seed = seed;
  if (scale == Scale::full) {
    c.locations = 1000;
    c.sample_size = 100000;
    c.replicates = 100;
  } else {
    c.locations = 200;
    c.sample_size = 20000;
    c.replicates = 20;
  }
  return c;
}

ExperimentConfig fig3_config(Scale scale, std::uint64_t seed) {
  ExperimentConfig c;
  c.alphas = {4.0, 1.0, 0.5, 0.25};
  c.sample_sizes = {500, 2000, 8000};
  c.replicates = scale == Scale::full ? 1000 : 200;
  c.seed = seed;
  return c;
}

ExperimentConfig theorem1_config(Scale scale, std::uint64_t seed) {
  ExperimentConfig c;
  c.alphas = {1.0};
  c.grid_resolution = scale == Scale::full ? 60 : 30;
  c.sample_size = scale == Scale::full ? 100000 : 50000;
  c.seed = seed;
  return c;
}

BoxplotSummary summarize(std::span<const double> values) {
  if (values.empty()) {
    throw InputError("summarize: no values");
  }
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  auto quantile = [&](double p) {
    const double h = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  BoxplotSummary s;
  s.min = v.front();
  s.max = v.back();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  s.count = v.size();
  return s;
}

std::vector<Fig1Row> run_fig1(const ExperimentConfig& config) {
  config.validate();
  if (config.k_max < 2) {
    throw InputError("fig1: k_max must be at least 2");
  }
  std::vector<Fig1Row> rows;
  for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
    const double alpha = config.alphas[ai];
    const DistributionSpec spec = DistributionSpec::gamma(alpha);
    const double limit = max_depth_limit_gamma(alpha).value;
    for (std::size_t k = 2; k <= config.k_max; ++k) {
      const MaxDepthValue mc = max_depth_mc(k, spec, config.mc_n, derive_seed(config.seed, kTagFig1, ai, k));
      rows.push_back({k, alpha, max_depth_gamma(k, alpha).value, mc.value, mc.std_error, limit});
    }
  }

  if (!config.output_dir.empty()) {
    std::string csv = "k,alpha,h_closed,h_mc,h_mc_se,h_limit\n";
    for (const auto& r : rows) {
      csv += std::to_string(r.k) + ',' + fmt_g17(r.alpha) + ',' + fmt_g17(r.h_closed) + ',' + fmt_g17(r.h_mc) +
             ',' + fmt_g17(r.h_mc_se) + ',' + fmt_g17(r.h_limit) + '\n';
    }
    write_file(config.output_dir, "fig1.csv", csv);

    double y_lo = 0.5;
    for (const auto& r : rows) y_lo = std::min({y_lo, r.h_closed, r.h_limit});
    SvgChart chart(2.0, static_cast<double>(config.k_max), std::floor(y_lo * 20.0) / 20.0, 0.52,
                   "Maximal depth h(k, alpha) and its limit");
    chart.x_label("k");
    chart.y_label("maximal depth");
    for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
      std::vector<std::pair<double, double>> pts;
      double limit = 0.0;
      for (const auto& r : rows) {
        if (r.alpha == config.alphas[ai]) {
          pts.emplace_back(static_cast<double>(r.k), r.h_closed);
          limit = r.h_limit;
        }
      }
      chart.polyline(pts, palette(ai));
      chart.hline(limit, 2.0, static_cast<double>(config.k_max), palette(ai));
      chart.legend(alpha_label(config.alphas[ai]), palette(ai));
    }
    write_file(config.output_dir, "fig1.svg", chart.str());
  }
  return rows;
}

double fig2_dominance_margin(const Fig2Alpha& a) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.avg_depth.size(); ++i) {
    const double se = std::sqrt(a.mu_se * a.mu_se + a.se_depth[i] * a.se_depth[i]);
    margin = std::min(margin, a.mu_avg_depth - a.avg_depth[i] + 2.0 * se);
  }
  return margin;
}

Fig2Result run_fig2(const ExperimentConfig& config) {
  config.validate();
  const DepthEvaluator depth(config);
  const std::size_t k = config.k;
  const std::size_t N = config.locations;
  const std::size_t M = config.replicates;

  Fig2Result result;
  result.locations = sample_uniform_simplex(k, N, derive_seed(config.seed, kTagFig2Locations)).points;
  const auto theta = embed_simplex(std::span<const Composition>(result.locations));
  const PlanarPoint mu = embed_simplex(mean_vector(k));

  for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
    const double alpha = config.alphas[ai];
    std::vector<double> sum(N, 0.0), sumsq(N, 0.0);
    double mu_sum = 0.0, mu_sumsq = 0.0;
    for (std::size_t r = 0; r < M; ++r) {
      const auto sample =
          embedded_sample(k, alpha, config.sample_size, derive_seed(config.seed, kTagFig2Samples, ai, r));
      for (std::size_t i = 0; i < N; ++i) {
        const double d = depth(theta[i], sample);
        sum[i] += d;
        sumsq[i] += d * d;
      }
      const double d = depth(mu, sample);
      mu_sum += d;
      mu_sumsq += d * d;
    }
    const double md = static_cast<double>(M);
    auto se = [&](double s, double ss) {
      if (M < 2) return 0.0;
      const double var = std::max(0.0, (ss - s * s / md) / (md - 1.0));
      return std::sqrt(var / md);
    };
    Fig2Alpha out;
    out.alpha = alpha;
    out.within_hypothesis = alpha <= 1.0;
    out.avg_depth.resize(N);
    out.se_depth.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      out.avg_depth[i] = sum[i] / md;
      out.se_depth[i] = se(sum[i], sumsq[i]);
    }
    out.mu_avg_depth = mu_sum / md;
    out.mu_se = se(mu_sum, mu_sumsq);
    out.summary = summarize(out.avg_depth);
    result.per_alpha.push_back(std::move(out));
  }

  if (!config.output_dir.empty()) {
    std::string csv = "alpha,location_id";
    for (std::size_t j = 1; j <= k; ++j) csv += ",theta_" + std::to_string(j);
    csv += ",avg_depth\n";
    const Composition mu_c = mean_vector(k);
    for (const auto& a : result.per_alpha) {
      for (std::size_t i = 0; i < N; ++i) {
        csv += fmt_g17(a.alpha) + ',' + std::to_string(i);
        for (std::size_t j = 0; j < k; ++j) csv += ',' + fmt_g17(result.locations[i][j]);
        csv += ',' + fmt_g17(a.avg_depth[i]) + '\n';
      }
      csv += fmt_g17(a.alpha) + ",mu";
      for (std::size_t j = 0; j < k; ++j) csv += ',' + fmt_g17(mu_c[j]);
      csv += ',' + fmt_g17(a.mu_avg_depth) + '\n';
    }
    write_file(config.output_dir, "fig2.csv", csv);

    const double x_max = static_cast<double>(result.per_alpha.size()) + 0.5;
    SvgChart chart(0.5, x_max, 0.0, 0.5, "Averaged sample depth of random locations; dot = barycentre");
    chart.y_label("averaged sample depth");
    for (std::size_t ai = 0; ai < result.per_alpha.size(); ++ai) {
      const auto& a = result.per_alpha[ai];
      const double x = static_cast<double>(ai) + 1.0;
      chart.box(x, 0.25, a.summary, palette(ai));
      chart.marker(x, a.mu_avg_depth, "black");
      chart.label(x, -0.03, alpha_label(a.alpha));
    }
    write_file(config.output_dir, "fig2.svg", chart.str());
  }
  return result;
}

std::vector<Fig3Cell> run_fig3(const ExperimentConfig& config) {
  config.validate();
  if (config.sample_sizes.empty()) {
    throw InputError("fig3: sample_sizes must be nonempty");
  }
  const DepthEvaluator depth(config);
  const PlanarPoint mu = embed_simplex(mean_vector(config.k));
  std::vector<Fig3Cell> cells;
  for (std::size_t ai = 0; ai < config.alphas.size(); ++ai) {
    const double alpha = config.alphas[ai];
    const double h = max_depth_gamma(config.k, alpha).value;
    for (std::size_t n : config.sample_sizes) {
      Fig3Cell cell;
      cell.alpha = alpha;
      cell.n = n;
      cell.within_hypothesis = alpha <= 1.0;
      cell.h_closed = h;
      cell.depths.reserve(config.replicates);
      for (std::size_t r = 0; r < config.replicates; ++r) {
        const auto sample = embedded_sample(config.k, alpha, n, derive_seed(config.seed, kTagFig3, ai, n, r));
        cell.depths.push_back(depth(mu, sample));
      }
      cell.summary = summarize(cell.depths);
      cells.push_back(std::move(cell));
    }
  }

  if (!config.output_dir.empty()) {
    std::string csv = "alpha,n,replicate,depth\n";
    for (const auto& c : cells) {
      for (std::size_t r = 0; r < c.depths.size(); ++r) {
        csv += fmt_g17(c.alpha) + ',' + std::to_string(c.n) + ',' + std::to_string(r) + ',' +
               fmt_g17(c.depths[r]) + '\n';
      }
    }
    write_file(config.output_dir, "fig3.csv", csv);

    const std::size_t per = config.sample_sizes.size();
    const double x_max = static_cast<double>(cells.size() + config.alphas.size()) + 0.5;
    double y_lo = 0.5, y_hi = 0.0;
    for (const auto& c : cells) {
      y_lo = std::min({y_lo, c.summary.min, c.h_closed});
      y_hi = std::max({y_hi, c.summary.max, c.h_closed});
    }
    SvgChart chart(0.5, x_max, std::floor(y_lo * 20.0) / 20.0, std::ceil(y_hi * 20.0) / 20.0,
                   "Sample depth of the barycentre; dashed = P[X1 >= 1/k]");
    chart.y_label("sample depth");
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const std::size_t ai = ci / per;
      const double x = static_cast<double>(ci + ai) + 1.0;
      chart.box(x, 0.3, cells[ci].summary, palette(ai));
      chart.label(x, std::floor(y_lo * 20.0) / 20.0 + 0.005, "n=" + std::to_string(cells[ci].n));
      if (ci % per == 0) {
        const double x_end = x + static_cast<double>(per - 1);
        chart.hline(cells[ci].h_closed, x - 0.4, x_end + 0.4, palette(ai));
        chart.legend(alpha_label(cells[ci].alpha), palette(ai));
      }
    }
    write_file(config.output_dir, "fig3.svg", chart.str());
  }
  return cells;
}

std::vector<LatticeDepth> lattice_depths(std::span<const PlanarPoint> embedded, std::size_t r) {
  if (r == 0) {
    throw InputError("lattice resolution must be at least 1");
  }
  std::vector<LatticeDepth> out;
  const double rd = static_cast<double>(r);
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; i + j <= r; ++j) {
      const std::size_t l = r - i - j;
      const std::array<double, 3> x{static_cast<double>(i) / rd, static_cast<double>(j) / rd,
                                    static_cast<double>(l) / rd};
      out.push_back({{i, j, l}, depth_exact_2d(embed_simplex(x), embedded).value()});
    }
  }
  return out;
}

Theorem1Report validate_theorem1(const ExperimentConfig& config) {
  config.validate();
  if (config.k != 3) {
    throw InputError("validate_theorem1: k must be 3");
  }
  const std::size_t r = config.grid_resolution;
  if (r < 2) {
    throw InputError("validate_theorem1: grid_resolution must be at least 2");
  }
  const double points = static_cast<double>((r + 1) * (r + 2) / 2);
  if (points * static_cast<double>(config.sample_size) > 5e10) {
    throw BudgetError("validate_theorem1: lattice x sample size exceeds the evaluation budget");
  }

  Theorem1Report rep;
  rep.alpha = config.alphas.front();
  rep.resolution = r;
  rep.n = config.sample_size;
  const auto sample = embedded_sample(3, rep.alpha, rep.n, derive_seed(config.seed, kTagTheorem1));
  rep.lattice = lattice_depths(sample, r);
  for (std::size_t i = 0; i < rep.lattice.size(); ++i) {
    if (rep.lattice[i].depth > rep.lattice[rep.argmax].depth) rep.argmax = i;
  }
  const double best = rep.lattice[rep.argmax].depth;
  rep.ties = static_cast<std::size_t>(
      std::count_if(rep.lattice.begin(), rep.lattice.end(), [&](const LatticeDepth& d) { return d.depth == best; }));
  rep.mu_depth = depth_exact_2d(embed_simplex(mean_vector(3)), sample).value();
  rep.gap = best - rep.mu_depth;
  const double rd = static_cast<double>(r);
  rep.tolerance = 2.0 / std::sqrt(static_cast<double>(rep.n)) + 1.0 / rd;
  rep.mu_on_lattice = r % 3 == 0;
  const std::size_t third = static_cast<std::size_t>(std::llround(rd / 3.0));
  rep.nearest_to_mu = {third, third, r - 2 * third};
  rep.argmax_distance = 0.0;
  for (std::size_t c = 0; c < 3; ++c) {
    rep.argmax_distance =
        std::max(rep.argmax_distance, std::abs(static_cast<double>(rep.lattice[rep.argmax].index[c]) / rd - 1.0 / 3.0));
  }
  rep.passed = rep.gap <= rep.tolerance;

  if (!config.output_dir.empty()) {
    std::string csv = "i,j,l,theta_1,theta_2,theta_3,depth\n";
    for (const auto& d : rep.lattice) {
      csv += std::to_string(d.index[0]) + ',' + std::to_string(d.index[1]) + ',' + std::to_string(d.index[2]);
      for (std::size_t c = 0; c < 3; ++c) csv += ',' + fmt_g17(static_cast<double>(d.index[c]) / rd);
      csv += ',' + fmt_g17(d.depth) + '\n';
    }
    csv += "mu,mu,mu," + fmt_g17(1.0 / 3.0) + ',' + fmt_g17(1.0 / 3.0) + ',' + fmt_g17(1.0 / 3.0) + ',' +
           fmt_g17(rep.mu_depth) + '\n';
    write_file(config.output_dir, "validate_median.csv", csv);
  }
  return rep;
}

}  // namespace simdepth
