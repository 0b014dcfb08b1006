#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simdepth/depth.hpp"
#include "simdepth/errors.hpp"
#include "simdepth/experiments.hpp"
#include "simdepth/max_depth.hpp"
#include "simdepth/models.hpp"
#include "simdepth/ordering.hpp"
#include "simdepth/special.hpp"

namespace py = pybind11;
using namespace simdepth;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<PlanarPoint> to_points(const Array& arr) {
  if (arr.ndim() != 2) {
    throw InputError("expected a 2-d array of points");
  }
  auto r = arr.unchecked<2>();
  std::vector<PlanarPoint> out(static_cast<std::size_t>(r.shape(0)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i) {
    out[i].coords.resize(static_cast<std::size_t>(r.shape(1)));
    for (py::ssize_t j = 0; j < r.shape(1); ++j) {
      out[i].coords[j] = r(i, j);
    }
  }
  return out;
}

Array to_array(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  Array out({static_cast<py::ssize_t>(rows.size()), static_cast<py::ssize_t>(cols)});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      w(i, j) = rows[i][j];
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_simdepth, m) {
  m.doc() = "Halfspace depth on the probability simplex";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<DepthResult>(m, "DepthResult")
      .def_readonly("count", &DepthResult::count)
      .def_readonly("n", &DepthResult::n)
      .def_readonly("witness_direction", &DepthResult::witness_direction)
      .def_property_readonly("value", &DepthResult::value)
      .def_property_readonly("fraction", [](const DepthResult& r) {
        const Fraction f = r.fraction();
        return py::make_tuple(f.num, f.den);
      })
      .def("__repr__", [](const DepthResult& r) { return "DepthResult(" + r.fraction().str() + ")"; });

  py::class_<OrderingVerdict>(m, "OrderingVerdict")
      .def_property_readonly("violated", &OrderingVerdict::violated)
      .def_readonly("worst_t", &OrderingVerdict::worst_t)
      .def_readonly("gap", &OrderingVerdict::gap)
      .def_readonly("band", &OrderingVerdict::band);

  m.def("embed_simplex", [](const Array& comps) {
    auto r = comps.unchecked<2>();
    std::vector<Composition> pts;
    for (py::ssize_t i = 0; i < r.shape(0); ++i) {
      pts.emplace_back(std::vector<double>(comps.data(i, 0), comps.data(i, 0) + r.shape(1)), 1e-9);
    }
    std::vector<std::vector<double>> rows;
    for (auto& p : embed_simplex(std::span<const Composition>(pts))) rows.push_back(std::move(p.coords));
    return to_array(rows, r.shape(1) > 0 ? static_cast<std::size_t>(r.shape(1) - 1) : 0);
  }, py::arg("compositions"), "Isometric Helmert embedding of (n, k) compositions into (n, k-1).");

  m.def("depth_exact_2d", [](std::vector<double> theta, const Array& sample) {
    return depth_exact_2d(PlanarPoint{std::move(theta)}, to_points(sample));
  }, py::arg("theta"), py::arg("sample"));
  m.def("depth_brute", [](std::vector<double> theta, const Array& sample) {
    return depth_brute(PlanarPoint{std::move(theta)}, to_points(sample));
  }, py::arg("theta"), py::arg("sample"));
  m.def("depth_approx", [](std::vector<double> theta, const Array& sample, std::size_t directions, std::uint64_t seed) {
    return depth_approx(PlanarPoint{std::move(theta)}, to_points(sample), directions, seed);
  }, py::arg("theta"), py::arg("sample"), py::arg("num_directions"), py::arg("seed"));

  m.def("sample_composition", [](std::size_t k, double alpha, std::size_t n, std::uint64_t seed, double rate) {
    const auto s = sample_composition(k, DistributionSpec::gamma(alpha, rate), n, seed);
    std::vector<std::vector<double>> rows;
    rows.reserve(s.size());
    for (const auto& p : s.points) rows.emplace_back(p.coords().begin(), p.coords().end());
    return to_array(rows, k);
  }, py::arg("k"), py::arg("alpha"), py::arg("n"), py::arg("seed"), py::arg("rate") = 0.5);
  m.def("sample_positive", [](double alpha, std::size_t n, std::uint64_t seed, double rate) {
    return sample_positive(DistributionSpec::gamma(alpha, rate), n, seed);
  }, py::arg("alpha"), py::arg("n"), py::arg("seed"), py::arg("rate") = 0.5);

  m.def("regularized_incomplete_beta", &regularized_incomplete_beta, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("regularized_upper_gamma", &regularized_upper_gamma, py::arg("a"), py::arg("x"));
  m.def("max_depth_gamma", [](std::size_t k, double alpha) { return max_depth_gamma(k, alpha).value; },
        py::arg("k"), py::arg("alpha"));
  m.def("max_depth_limit_gamma", [](double alpha) { return max_depth_limit_gamma(alpha).value; }, py::arg("alpha"));
  m.def("max_depth_mc", [](std::size_t k, double alpha, std::size_t n, std::uint64_t seed) {
    const auto v = max_depth_mc(k, DistributionSpec::gamma(alpha), n, seed);
    return py::make_tuple(v.value, v.std_error);
  }, py::arg("k"), py::arg("alpha"), py::arg("n"), py::arg("seed"));

  m.def("is_majorized", [](std::vector<double> a, std::vector<double> b, double tol) {
    return is_majorized(WeightVector(std::move(a)), WeightVector(std::move(b)), tol);
  }, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-12);
  m.def("eaton_olshen_probe", [](double alpha_w, double alpha_q, std::vector<double> a, std::vector<double> b,
                                 std::size_t n, std::uint64_t seed, double confidence) {
    return eaton_olshen_probe(DistributionSpec::gamma(alpha_w), DistributionSpec::gamma(alpha_q),
                              WeightVector(std::move(a)), WeightVector(std::move(b)), n, seed, confidence);
  }, py::arg("alpha_w"), py::arg("alpha_q"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("seed"),
        py::arg("confidence") = 0.999);

  m.def("run_fig3", [](std::vector<double> alphas, std::vector<std::size_t> ns, std::size_t replicates,
                       std::uint64_t seed) {
    ExperimentConfig c = fig3_config(Scale::desk, seed);
    c.alphas = std::move(alphas);
    c.sample_sizes = std::move(ns);
    c.replicates = replicates;
    py::list out;
    for (const auto& cell : run_fig3(c)) {
      py::dict d;
      d["alpha"] = cell.alpha;
      d["n"] = cell.n;
      d["depths"] = cell.depths;
      d["median"] = cell.summary.median;
      d["iqr"] = cell.summary.iqr();
      d["h_closed"] = cell.h_closed;
      out.append(d);
    }
    return out;
  }, py::arg("alphas"), py::arg("sample_sizes"), py::arg("replicates"), py::arg("seed"));
}
