#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>

#include "spshrink/config_space.hpp"
#include "spshrink/eig_select.hpp"
#include "spshrink/error.hpp"
#include "spshrink/reconstruct.hpp"
#include "spshrink/report.hpp"
#include "spshrink/shrinker.hpp"
#include "spshrink/spaces.hpp"
#include "spshrink/spectrum.hpp"
#include "spshrink/ss_calculus.hpp"
#include "spshrink/suite.hpp"
#include "spshrink/theta.hpp"

namespace py = pybind11;
using namespace spshrink;

namespace {

SpaceId space_arg(const std::string& tag) {
  if (auto id = parse_space(tag)) return *id;
  throw Error(ErrorCode::InvalidArgument, "unknown space '" + tag + "'");
}

// Callbacks re-enter Python from whichever thread the library runs them on.
// Callers hold `f` for the duration of the C++ call and release the GIL.
MatrixMap python_map(const py::function& f) {
  return [&f](const ComplexMatrix& x) {
    py::gil_scoped_acquire gil;
    return f(x).cast<ComplexMatrix>();
  };
}

ScalarFunction python_scalar(const py::function& f) {
  return [&f](Complex z) {
    py::gil_scoped_acquire gil;
    return f(z).cast<Complex>();
  };
}

using OracleArg = std::variant<std::string, py::function>;

MatrixMap oracle_arg(const OracleArg& oracle) {
  if (const auto* f = std::get_if<py::function>(&oracle)) return python_map(*f);
  const auto& name = std::get<std::string>(oracle);
  if (name == "id") return identity_oracle();
  if (name == "transpose") return transpose_oracle();
  if (name == "theta") return theta_oracle();
  throw Error(ErrorCode::InvalidArgument, "unknown oracle '" + name + "'");
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_spshrink, m) {
  static py::exception<Error> error_type(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error_type.ptr())(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      inst.attr("value") = e.value() ? py::cast(*e.value()) : py::none();
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.def("spaces", [] {
    std::vector<std::string> out;
    for (SpaceId id : kAllSpaces) out.emplace_back(to_string(id));
    return out;
  });
  m.def(
      "sample",
      [](const std::string& space, Eigen::Index n, std::uint64_t seed, bool simple_spectrum) {
        Rng rng = make_rng(seed);
        return sample(space_arg(space), n, rng, {.simple_spectrum = simple_spectrum});
      },
      py::arg("space"), py::arg("n"), py::arg("seed") = 0, py::arg("simple_spectrum") = false);
  m.def(
      "membership", [](const std::string& space, const ComplexMatrix& x, double tol) {
        return membership(space_arg(space), x, tol);
      },
      py::arg("space"), py::arg("x"), py::arg("tol") = 1e-8);
  m.def("spectrum", [](const ComplexMatrix& x) { return spectrum_of(x).values(); });
  m.def("spectrum_match_distance", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return spectrum_match_distance(spectrum_of(a), spectrum_of(b));
  });
  m.def("spectrum_inclusion_defect", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return spectrum_inclusion_defect(spectrum_of(a), spectrum_of(b));
  });

  m.def("canonical_shrinker", [](const ComplexMatrix& x, int p, int q) { return canonical_shrinker(x, p, q); },
        py::arg("x"), py::arg("p") = 1, py::arg("q") = 0);
  m.def(
      "check_shrinking",
      [](const std::string& space, int n, int p, int q, int samples, std::uint64_t seed) {
        const int size = (p + q) * n;
        const MatrixMap phi = canonical_shrinker_map(p, q, random_continuous_conjugator(n, size, seed));
        py::gil_scoped_release release;
        return dump(to_json(check_powerlaw(phi, space_arg(space), n, size, {.samples = samples, .seed = seed})));
      },
      py::arg("space"), py::arg("n"), py::arg("p") = 1, py::arg("q") = 0, py::arg("samples") = 100,
      py::arg("seed") = 0);

  m.def("su_select", [](const ComplexMatrix& u) { return su_select(u); });
  m.def("un_lambda_select", [](const ComplexMatrix& u, Complex lambda) { return un_lambda_select(u, lambda); });
  m.def("hn_select", [](const ComplexMatrix& x) { return hn_select(x); });
  m.def("xz_matrix", &xz_matrix);
  m.def("monodromy", [](int n, double r, int steps) { return dump(to_json(monodromy_Xz(n, r, steps))); },
        py::arg("n"), py::arg("r") = 1.0, py::arg("steps") = 1024);

  m.def("classify_component", [](const std::vector<Complex>& z) {
    return dump(permutation_to_json(classify_component(CirclePoints(z)).representative()));
  });
  m.def("isotropy_order", [](const std::vector<Complex>& z) { return isotropy_of_component(CirclePoints(z)).size(); });
  m.def("verify_cycle_decomposition", &verify_cycle_decomposition);

  m.def(
      "apply_function",
      [](const ComplexMatrix& t, const py::function& f, double grouping_tol) {
        const ScalarFunction g = python_scalar(f);
        py::gil_scoped_release release;
        return apply_function(t, g, grouping_tol);
      },
      py::arg("t"), py::arg("f"), py::arg("grouping_tol") = kDefaultGroupingTol);
  m.def("spectral_idempotents", [](const ComplexMatrix& t, double grouping_tol) {
    std::vector<std::pair<Complex, ComplexMatrix>> out;
    for (auto& [lambda, e] : spectral_idempotents(t, grouping_tol).pairs) out.emplace_back(lambda, e);
    return out;
  }, py::arg("t"), py::arg("grouping_tol") = kDefaultGroupingTol);
  m.def("calc_2x2_closed_form", [](Complex l1, Complex l2, Complex alpha, const py::function& f) {
    return calc_2x2_closed_form(l1, l2, alpha, python_scalar(f));
  });

  m.def("theta", [](const ComplexMatrix& x) { return theta(x); });
  m.def("theta_decompose", [](const ComplexMatrix& x) {
    ThetaDecomposition d = theta_decompose(x);
    py::dict out;
    out["S"] = d.S;
    out["N"] = d.N;
    out["residual"] = d.residual;
    out["condition"] = d.condition;
    return out;
  });

  m.def(
      "reconstruct",
      [](const OracleArg& oracle, Eigen::Index n, int samples, std::uint64_t seed, double tol) {
        const MatrixMap phi = oracle_arg(oracle);
        py::gil_scoped_release release;
        return dump(to_json(reconstruct(phi, n, {.validation_samples = samples, .seed = seed, .tol = tol})));
      },
      py::arg("oracle"), py::arg("n"), py::arg("samples") = 50, py::arg("seed") = 0, py::arg("tol") = 1e-6);
  m.def(
      "classify_preserver",
      [](const OracleArg& oracle, const std::string& space, Eigen::Index n, int samples, std::uint64_t seed) {
        const MatrixMap phi = oracle_arg(oracle);
        const SpaceId id = space_arg(space);
        py::gil_scoped_release release;
        return dump(to_json(classify_preserver(phi, id, n, {.validation_samples = samples, .seed = seed})));
      },
      py::arg("oracle"), py::arg("space"), py::arg("n"), py::arg("samples") = 50, py::arg("seed") = 0);

  m.def(
      "run_criterion",
      [](int id, std::uint64_t seed, std::size_t workers) {
        py::gil_scoped_release release;
        return dump(to_json(run_criterion(id, {.seed = seed, .workers = workers})));
      },
      py::arg("id"), py::arg("seed") = 0, py::arg("workers") = 1);
}
