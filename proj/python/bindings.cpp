#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <vector>

#include "tangle/closed_form.hpp"
#include "tangle/errors.hpp"
#include "tangle/measures.hpp"
#include "tangle/numerics.hpp"
#include "tangle/rindler.hpp"
#include "tangle/sweep.hpp"
#include "tangle/verify.hpp"

namespace py = pybind11;
using namespace tangle;

namespace {

DensityMatrix density_from_array(py::array_t<Complex, py::array::c_style | py::array::forcecast> m,
                                 std::vector<Index> dims) {
  if (m.ndim() != 2 || m.shape(0) != m.shape(1)) throw DomainError("expected a square matrix");
  SubsystemLayout layout(std::move(dims));
  if (static_cast<Index>(m.shape(0)) != layout.total()) throw DomainError("matrix size does not match dims");
  return DensityMatrix(layout, std::span<const Complex>(m.data(), static_cast<std::size_t>(m.size())));
}

py::array_t<Complex> density_to_array(const DensityMatrix& rho) {
  const auto n = static_cast<py::ssize_t>(rho.dim());
  py::array_t<Complex> out({n, n});
  const auto dense = rho.to_dense();
  std::copy(dense.begin(), dense.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_tangle, m) {
  m.doc() = "Tripartite entanglement of Dirac and scalar fields in Rindler frames";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<TruncationError>(m, "TruncationError", numerical.ptr());
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  (void)domain;

  py::enum_<Field>(m, "Field").value("DIRAC", Field::Dirac).value("SCALAR", Field::Scalar);
  py::enum_<Method>(m, "Method").value("NUMERIC", Method::Numeric).value("CLOSED_FORM", Method::ClosedForm);
  py::enum_<DiracCharlieForm>(m, "DiracCharlieForm")
      .value("BLOCK_SPECTRUM", DiracCharlieForm::BlockSpectrum)
      .value("SPLIT_ROOT", DiracCharlieForm::SplitRoot);
  py::enum_<ScalarCharlieForm>(m, "ScalarCharlieForm")
      .value("SHIFT_TWO", ScalarCharlieForm::ShiftTwo)
      .value("SHIFT_ONE", ScalarCharlieForm::ShiftOne);
  py::enum_<SeriesForm>(m, "SeriesForm").value("SUM", SeriesForm::Sum).value("POLYLOG", SeriesForm::Polylog);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("herm", &Tolerances::herm)
      .def_readwrite("eig", &Tolerances::eig)
      .def_readwrite("series", &Tolerances::series)
      .def_readwrite("ckw", &Tolerances::ckw)
      .def_readwrite("eps_norm", &Tolerances::eps_norm);

  py::class_<TruncationReport>(m, "TruncationReport")
      .def_readonly("n_max", &TruncationReport::n_max)
      .def_readonly("norm_deficit", &TruncationReport::norm_deficit)
      .def_readonly("tail_bound", &TruncationReport::tail_bound);

  py::class_<TangleReport>(m, "TangleReport")
      .def_readonly("one_tangles", &TangleReport::one_tangles)
      .def_readonly("two_tangles", &TangleReport::two_tangles)
      .def_readonly("residuals", &TangleReport::residuals)
      .def_readonly("pi_tangle", &TangleReport::pi_tangle)
      .def_readonly("ckw_ok", &TangleReport::ckw_ok)
      .def_readonly("method", &TangleReport::method)
      .def_readonly("truncation", &TangleReport::truncation)
      .def("__repr__", [](const TangleReport& r) {
        return "<TangleReport pi_tangle=" + std::to_string(r.pi_tangle) + ">";
      });

  auto scenario = [](Field field, double alpha, double r) { return ScenarioParams{field, alpha, r, {}}; };
  m.def(
      "evaluate_numeric",
      [scenario](Field field, double alpha, double r, const Tolerances& tol) {
        py::gil_scoped_release release;
        return evaluate_numeric(scenario(field, alpha, r), tol);
      },
      py::arg("field"), py::arg("alpha"), py::arg("r"), py::arg("tol") = Tolerances{});
  m.def(
      "evaluate_closed_form",
      [scenario](Field field, double alpha, double r, const Tolerances& tol) {
        return evaluate_closed_form(scenario(field, alpha, r), tol);
      },
      py::arg("field"), py::arg("alpha"), py::arg("r"), py::arg("tol") = Tolerances{});

  m.def("r_from_acceleration", &r_from_acceleration, py::arg("field"), py::arg("a"), py::arg("omega") = 1.0,
        py::arg("c") = 1.0);
  m.def(
      "rho_abc",
      [scenario](Field field, double alpha, double r, const Tolerances& tol) {
        return density_to_array(build_rho_abc(scenario(field, alpha, r), tol).rho);
      },
      py::arg("field"), py::arg("alpha"), py::arg("r"), py::arg("tol") = Tolerances{},
      "Dense three-party state; scalar states are truncated adaptively.");

  m.def(
      "negativity",
      [](py::array_t<Complex, py::array::c_style | py::array::forcecast> rho, std::vector<Index> dims,
         std::size_t subsystem) { return negativity(density_from_array(rho, std::move(dims)), subsystem); },
      py::arg("rho"), py::arg("dims"), py::arg("subsystem"));
  m.def(
      "partial_trace",
      [](py::array_t<Complex, py::array::c_style | py::array::forcecast> rho, std::vector<Index> dims,
         std::vector<std::size_t> keep) { return density_to_array(partial_trace(density_from_array(rho, dims), keep)); },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def(
      "eigenvalues_hermitian",
      [](py::array_t<Complex, py::array::c_style | py::array::forcecast> a) {
        if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DomainError("expected a square matrix");
        const auto n = static_cast<std::size_t>(a.shape(0));
        return eigenvalues_hermitian(DenseMatrix(n, std::vector<Complex>(a.data(), a.data() + a.size()))).eigenvalues;
      },
      py::arg("matrix"));
  m.def("polylog_neg_half", &polylog_neg_half, py::arg("x"), py::arg("tol") = 1e-14);

  m.def("fermion_one_tangle_inertial", &fermion_one_tangle_inertial, py::arg("alpha"), py::arg("r"));
  m.def("fermion_one_tangle_charlie", &fermion_one_tangle_charlie, py::arg("alpha"), py::arg("r"),
        py::arg("form") = DiracCharlieForm::BlockSpectrum);
  m.def("fermion_pi_tangle", &fermion_pi_tangle, py::arg("alpha"), py::arg("r"),
        py::arg("form") = DiracCharlieForm::BlockSpectrum);
  m.def("boson_one_tangle_inertial", &boson_one_tangle_inertial, py::arg("alpha"), py::arg("r"),
        py::arg("form") = SeriesForm::Sum, py::arg("tol") = Tolerances{});
  m.def("boson_one_tangle_charlie", &boson_one_tangle_charlie, py::arg("alpha"), py::arg("r"),
        py::arg("form") = ScalarCharlieForm::ShiftTwo, py::arg("tol") = Tolerances{});
  m.def("boson_pi_tangle", &boson_pi_tangle, py::arg("alpha"), py::arg("r"), py::arg("tol") = Tolerances{});

  m.def(
      "sweep_csv",
      [](Field field, std::vector<double> alphas, double r_min, double r_max, std::size_t r_steps, bool numeric,
         bool closed_form, double eps_norm, std::size_t threads) {
        SweepGrid grid;
        grid.field = field;
        grid.alphas = std::move(alphas);
        grid.r_min = r_min;
        grid.r_max = r_max;
        grid.r_steps = r_steps;
        grid.numeric = numeric;
        grid.closed_form = closed_form;
        grid.eps_norm = eps_norm;
        py::gil_scoped_release release;
        return format_csv(run_sweep(grid, {}, threads));
      },
      py::arg("field"), py::arg("alphas"), py::arg("r_min") = 0.0, py::arg("r_max"), py::arg("r_steps") = 50,
      py::arg("numeric") = true, py::arg("closed_form") = true, py::arg("eps_norm") = 1e-10, py::arg("threads") = 0,
      "Runs a sweep and returns the CSV text.");
  m.def(
      "write_figures",
      [](const std::filesystem::path& dir, std::size_t r_steps, double scalar_r_max, Method method) {
        FigureOptions options{r_steps, scalar_r_max, method};
        py::gil_scoped_release release;
        return cmd_figures(dir, options);
      },
      py::arg("output_dir"), py::arg("r_steps") = 101, py::arg("scalar_r_max") = 3.0,
      py::arg("method") = Method::Numeric);
  m.def("figure_alphas", &figure_alphas);
  m.attr("CSV_HEADER") = std::string(kCsvHeader);

  m.def(
      "verify",
      [](std::uint64_t seed, std::optional<double> check_tolerance) {
        VerifyOptions options;
        options.seed = seed;
        options.check_tolerance = check_tolerance;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = cmd_verify(options);
        }
        return py::make_tuple(report.passed(), report.format());
      },
      py::arg("seed") = 1, py::arg("check_tolerance") = py::none(),
      "Runs the invariant suite; returns (passed, report text).");
}
