#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <stdexcept>

#include "cube_spectra/cube_spectra.hpp"

namespace py = pybind11;
namespace cs = cube_spectra;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

cs::CubeFunction to_function(const Array& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
  const auto len = static_cast<std::uint64_t>(a.shape(0));
  if (len < 2 || !std::has_single_bit(len)) throw std::invalid_argument("length must be 2^n with n >= 1");
  const int n = std::countr_zero(len);
  return cs::CubeFunction(n, std::vector<double>(a.data(), a.data() + len));
}

Array to_array(const cs::CubeFunction& f) {
  Array out(static_cast<py::ssize_t>(f.size()));
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

// Reports go through their JSON form so Python sees the same keys as the CLI.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

cs::Code to_code(int n, std::vector<cs::Point> points) { return cs::Code(n, std::move(points)); }

std::vector<cs::Point> code_points(const cs::Code& c) { return {c.points().begin(), c.points().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fourier and spectral tools on the Hamming cube";

  py::register_exception<cs::CodeParseError>(m, "CodeParseError", PyExc_ValueError);
  py::register_exception<cs::VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

  m.def("wht", [](const Array& f) { return to_array(cs::wht(to_function(f))); }, py::arg("values"));
  m.def("inverse_wht", [](const Array& f) { return to_array(cs::inverse_wht(to_function(f))); }, py::arg("values"));
  m.def("convolve", [](const Array& f, const Array& g) { return to_array(cs::convolve(to_function(f), to_function(g))); },
        py::arg("f"), py::arg("g"));
  m.def("adjacency_apply", [](const Array& f) { return to_array(cs::adjacency_apply(to_function(f))); },
        py::arg("values"));
  m.def("essential_support_size", [](const Array& f) { return cs::essential_support_size(to_function(f)); },
        py::arg("values"));

  m.def("lambda_ball_exact", &cs::lambda_ball_exact, py::arg("n"), py::arg("r"));
  m.def(
      "lambda_for_radius_recurrence",
      [](int n, int r) {
        const cs::BallEigenWitness w = cs::lambda_for_radius_recurrence(n, r);
        py::dict d;
        d["lambda"] = w.lambda;
        d["p"] = w.truncation;
        d["profile"] = w.profile.values;
        return d;
      },
      py::arg("n"), py::arg("r"));
  m.def(
      "lambda_subset_bruteforce",
      [](int n, std::vector<cs::Point> members) { return cs::lambda_subset_bruteforce(cs::SubsetGraph(n, std::move(members))); },
      py::arg("n"), py::arg("members"));
  m.def("min_radius_for_lambda", &cs::min_radius_for_lambda, py::arg("n"), py::arg("target"));

  m.def("min_distance", [](int n, std::vector<cs::Point> pts) { return cs::min_distance(to_code(n, std::move(pts))); },
        py::arg("n"), py::arg("points"));
  m.def("dual_distance", [](int n, std::vector<cs::Point> pts) { return cs::dual_distance(to_code(n, std::move(pts))); },
        py::arg("n"), py::arg("points"));
  m.def("random_code", [](int n, int min_d, std::uint64_t seed) { return code_points(cs::random_code(n, min_d, seed)); },
        py::arg("n"), py::arg("min_d"), py::arg("seed") = 0);
  m.def("read_code_file",
        [](const std::string& path) {
          const cs::Code c = cs::read_code_file(path);
          return py::make_tuple(c.length(), code_points(c));
        },
        py::arg("path"));
  m.def("phi_from_code", [](int n, std::vector<cs::Point> pts) { return to_array(cs::phi_from_code(to_code(n, std::move(pts)))); },
        py::arg("n"), py::arg("points"));

  m.def("check_prop_ineq",
        [](int n, std::vector<cs::Point> pts, int r) { return to_python(cs::check_prop_ineq(to_code(n, std::move(pts)), r).to_json()); },
        py::arg("n"), py::arg("points"), py::arg("r"));
  m.def("check_covering",
        [](int n, std::vector<cs::Point> pts, int r) { return to_python(cs::check_covering(to_code(n, std::move(pts)), r).to_json()); },
        py::arg("n"), py::arg("points"), py::arg("r"));
  m.def("covered_fraction", [](int n, std::vector<cs::Point> pts, int r) { return cs::covered_fraction(to_code(n, std::move(pts)), r); },
        py::arg("n"), py::arg("points"), py::arg("r"));
  m.def("essential_covering_radius",
        [](int n, std::vector<cs::Point> pts) { return cs::essential_covering_radius(to_code(n, std::move(pts))); },
        py::arg("n"), py::arg("points"));
  m.def(
      "exhaustive_verify",
      [](int n, const std::string& mode, int trials, std::uint64_t seed, int threads) {
        cs::VerifyMode vm;
        if (mode == "all-linear") {
          vm = cs::VerifyMode::all_linear;
        } else if (mode == "random-general") {
          vm = cs::VerifyMode::random_general;
        } else {
          throw std::invalid_argument("mode must be 'all-linear' or 'random-general'");
        }
        py::gil_scoped_release release;
        const cs::VerifySummary s = cs::exhaustive_verify(n, vm, trials, seed, threads);
        py::gil_scoped_acquire acquire;
        return to_python(s.to_json());
      },
      py::arg("n"), py::arg("mode") = "all-linear", py::arg("trials") = 0, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def("binary_entropy", &cs::binary_entropy, py::arg("x"));
  m.def("first_lp_rate", &cs::first_lp_rate, py::arg("delta"));
  m.def("ball_size", [](int n, int r) { return py::int_(py::str(cs::ball_size(n, r).str())); }, py::arg("n"), py::arg("r"));
  m.def("finite_code_bound", [](int n, int d) { return to_python(cs::finite_code_bound(n, d).to_json()); }, py::arg("n"),
        py::arg("d"));
  m.def("rate_bound", [](double delta) { return to_python(cs::rate_bound(delta).to_json()); }, py::arg("delta"));
  m.def("essential_covering_radius_bound",
        [](int n, int d) { return to_python(cs::essential_covering_radius_bound(n, d).to_json()); }, py::arg("n"), py::arg("d"));
  m.def("tietavainen_bound", &cs::tietavainen_bound, py::arg("n"), py::arg("d"));
}
