#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specvar/blaschke.hpp"
#include "specvar/bounds.hpp"
#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/figures.hpp"
#include "specvar/harness.hpp"
#include "specvar/hypgeo.hpp"
#include "specvar/json_io.hpp"
#include "specvar/linalg.hpp"
#include "specvar/matching.hpp"
#include "specvar/modelop.hpp"
#include "specvar/suites.hpp"

namespace py = pybind11;
using namespace specvar;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1) || arr.shape(0) == 0) {
    throw InvalidMatrix("expected a non-empty square 2-D array");
  }
  const auto n = static_cast<std::size_t>(arr.shape(0));
  return ComplexMatrix(n, std::vector<cplx>(arr.data(), arr.data() + n * n));
}

CArray to_array(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

// nlohmann::json to Python objects by way of the json module.
py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(specvar, m) {
  m.doc() = "Spectral variation bounds for contractions";

  py::register_exception<Error>(m, "SpecvarError", PyExc_ValueError);

  m.def("op_norm", [](const CArray& a) { return op_norm(to_matrix(a)); });
  m.def("spectral_radius", [](const CArray& a) { return spectral_radius(to_matrix(a)); });
  m.def("eigenvalues", [](const CArray& a) { return eigenvalues(to_matrix(a)); });
  m.def("min_poly_degree", [](const CArray& a, double tol) { return min_poly_degree(to_matrix(a), tol); },
        py::arg("a"), py::arg("tol") = 1e-8);

  m.def("pseudo_distance", &pseudo_distance);
  m.def("hyperbolic_to_euclidean", [](cplx a, double r) {
    const auto d = to_euclidean({a, r});
    return py::make_tuple(d.center, d.radius);
  });

  m.def("theta2", &theta2);
  m.def("theta3", &theta3);
  m.def("modulus_k", &modulus_k);
  m.def("inverse_k", &inverse_k);

  m.def("blaschke_eval", [](std::vector<cplx> zeros, cplx z) { return BlaschkeProduct(std::move(zeros))(z); });
  m.def("cheb_blaschke_value", &cheb_blaschke_value);

  m.def("bottleneck_assignment", [](const std::vector<std::vector<double>>& costs) {
    const std::size_t n = costs.size();
    std::vector<double> flat;
    for (const auto& row : costs) {
      if (row.size() != n) throw SizeMismatch("cost matrix must be square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    const auto a = bottleneck_assignment(CostMatrix(n, flat));
    return py::make_tuple(a.value, a.permutation);
  });
  m.def("d_euclid", &d_euclid);
  m.def("d_hyper", &d_hyper);

  m.def("model_matrix", [](const std::vector<cplx>& zeros) { return to_array(build_model_matrix(zeros).matrix); });

  m.def("krause_alpha", &krause_alpha);
  m.def(
      "bound_report",
      [](const CArray& a, const CArray& b, std::optional<int> mdeg, const std::string& constant) {
        ReportOptions opt;
        opt.m = mdeg;
        return to_py(to_json(make_bound_report(to_matrix(a), to_matrix(b), opt), ConstantChoice::parse(constant)));
      },
      py::arg("a"), py::arg("b"), py::arg("m") = py::none(), py::arg("constant") = "bek");

  m.def("random_contraction", [](std::size_t n, double norm, std::uint64_t seed) {
    return to_array(random_contraction(n, norm, seed));
  });

  m.def(
      "run_suite",
      [](const std::string& suite, int trials, std::uint64_t seed, int threads) {
        ExperimentConfig cfg;
        cfg.suite = suite;
        cfg.trials = trials;
        cfg.masterSeed = seed;
        cfg.threads = threads;
        SuiteReport rep;
        {
          py::gil_scoped_release release;
          rep = run_suite(cfg);
        }
        return to_py(to_json(rep));
      },
      py::arg("suite") = "all", py::arg("trials") = 100, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def("figure_data", &figure_data, py::arg("which"), py::arg("seed") = 0);
}
