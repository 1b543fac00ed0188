// SPDX-License-Identifier: MIT
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subdiff/harness.hpp"

namespace py = pybind11;
using namespace subdiff;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Second-order L1 time stepping for subdiffusion on graded "
            "time meshes: mesh grading, convolution weights, P1 finite "
            "elements, the marching schemes, Mittag-Leffler evaluation, "
            "and convergence studies.";

  // --- mesh ---
  py::class_<GradedMesh>(m, "GradedMesh")
      .def_readonly("T", &GradedMesh::T)
      .def_readonly("N", &GradedMesh::N)
      .def_readonly("gamma", &GradedMesh::gamma)
      .def_readonly("tau", &GradedMesh::tau)
      .def_readonly("nodes", &GradedMesh::nodes)
      .def("step", &GradedMesh::step, py::arg("i"));
  py::class_<MeshPropertyReport>(m, "MeshPropertyReport")
      .def_readonly("growth_violations", &MeshPropertyReport::growth_violations)
      .def_readonly("step_violations", &MeshPropertyReport::step_violations)
      .def("ok", &MeshPropertyReport::ok);
  m.def("build_graded_mesh", &build_graded_mesh, py::arg("T"), py::arg("N"),
        py::arg("gamma"));
  m.def("check_mesh_properties", &check_mesh_properties, py::arg("mesh"));

  // --- convolution weights ---
  m.def("kernel", &kernel, py::arg("alpha"), py::arg("t"));
  m.def("primary_weight", &primary_weight, py::arg("mesh"), py::arg("alpha"),
        py::arg("n"), py::arg("j"));
  m.def("secondary_weight", &secondary_weight, py::arg("mesh"),
        py::arg("alpha"), py::arg("n"), py::arg("j"));
  m.def("primary_row_sum", &primary_row_sum, py::arg("t_n"), py::arg("alpha"));
  m.def("weight_oracle", &weight_oracle, py::arg("mesh"), py::arg("alpha"),
        py::arg("n"), py::arg("j"));

  // --- finite elements ---
  py::class_<SymTridiag>(m, "SymTridiag")
      .def(py::init<>())
      .def_readwrite("diag", &SymTridiag::diag)
      .def_readwrite("off", &SymTridiag::off)
      .def("size", &SymTridiag::size);
  py::class_<Problem>(m, "Problem")
      .def(py::init<>())
      .def_readwrite("alpha", &Problem::alpha)
      .def_readwrite("kappa", &Problem::kappa)
      .def_readwrite("react", &Problem::react)
      .def_readwrite("source", &Problem::source)
      .def_readwrite("init", &Problem::init)
      .def_readwrite("init_prime", &Problem::init_prime);
  py::class_<SpatialSystem>(m, "SpatialSystem")
      .def_readonly("a", &SpatialSystem::a)
      .def_readonly("b", &SpatialSystem::b)
      .def_readonly("elements", &SpatialSystem::elements)
      .def_readonly("h", &SpatialSystem::h)
      .def_readonly("mass", &SpatialSystem::mass)
      .def_readonly("stiff", &SpatialSystem::stiff)
      .def("dim", &SpatialSystem::dim)
      .def("node", &SpatialSystem::node, py::arg("p"));
  m.def("apply", &apply, py::arg("A"), py::arg("x"));
  m.def("lincomb", &lincomb, py::arg("A"), py::arg("c"), py::arg("B"));
  m.def("tridiagonal_solve", &tridiagonal_solve, py::arg("A"), py::arg("rhs"));
  m.def("build_system", &build_system, py::arg("a"), py::arg("b"),
        py::arg("elements"), py::arg("problem"));
  m.def("ritz_project",
        py::overload_cast<const SpatialSystem&, const ScalarField&,
                          const ScalarField&>(&ritz_project),
        py::arg("sys"), py::arg("w"), py::arg("w_prime"));
  m.def("ritz_project",
        py::overload_cast<const SpatialSystem&, const ScalarField&>(
            &ritz_project),
        py::arg("sys"), py::arg("w"));
  m.def("l2_project", &l2_project, py::arg("sys"), py::arg("w"));
  m.def("load_vector",
        py::overload_cast<const SpatialSystem&, const SpaceTimeField&, double,
                          double>(&load_vector),
        py::arg("sys"), py::arg("f"), py::arg("t0"), py::arg("t1"));
  m.def("l2_error", &l2_error, py::arg("sys"), py::arg("coeffs"), py::arg("g"),
        py::arg("refine") = 1);

  // --- Mittag-Leffler and the series reference ---
  m.def("ml_neg", &ml_neg, py::arg("alpha"), py::arg("x"));
  m.def("ml_switch_point", &ml_switch_point, py::arg("alpha"));
  m.def("ml_series", &ml_series, py::arg("alpha"), py::arg("x"));
  m.def("ml_asymptotic", &ml_asymptotic, py::arg("alpha"), py::arg("x"));
  m.def("ml_overlap_discrepancy", &ml_overlap_discrepancy, py::arg("alpha"),
        py::arg("samples") = 64);
  py::class_<SeriesSolution>(m, "SeriesSolution")
      .def(py::init<>())
      .def_readwrite("alpha", &SeriesSolution::alpha)
      .def_readwrite("n_terms", &SeriesSolution::n_terms)
      .def_readwrite("kappa", &SeriesSolution::kappa)
      .def_readwrite("react", &SeriesSolution::react)
      .def("lambda_", &SeriesSolution::lambda, py::arg("m"))
      .def("mode_factor", &SeriesSolution::mode_factor, py::arg("m"),
           py::arg("t"))
      .def("__call__", &SeriesSolution::operator(), py::arg("x"),
           py::arg("t"));
  m.def("exact_solution", &exact_solution, py::arg("sol"), py::arg("x"),
        py::arg("t"));

  // --- marching schemes ---
  py::enum_<Scheme>(m, "Scheme")
      .value("L1", Scheme::L1)
      .value("GCN", Scheme::GCN);
  py::enum_<InitialData>(m, "InitialData")
      .value("Ritz", InitialData::Ritz)
      .value("L2", InitialData::L2);
  py::class_<SolutionHistory>(m, "SolutionHistory")
      .def_readonly("mesh", &SolutionHistory::mesh)
      .def_readonly("scheme", &SolutionHistory::scheme)
      .def_readonly("coeffs", &SolutionHistory::coeffs);
  py::class_<WeightRow>(m, "WeightRow")
      .def_readonly("primary", &WeightRow::primary)
      .def_readonly("secondary", &WeightRow::secondary);
  py::class_<WeightTable>(m, "WeightTable")
      .def(py::init<const GradedMesh&, double>(), py::arg("mesh"),
           py::arg("alpha"), py::keep_alive<1, 2>())
      .def("row", &WeightTable::row, py::arg("n"))
      .def("alpha", &WeightTable::alpha);
  m.def("step_l1", &step_l1, py::arg("sys"), py::arg("weights"),
        py::arg("history"), py::arg("n"), py::arg("F_n"));
  m.def("step_gcn", &step_gcn, py::arg("sys"), py::arg("weights"),
        py::arg("history"), py::arg("n"), py::arg("F_n"));
  // No GIL release here: Problem fields may wrap Python callables that the
  // march invokes through load_vector.
  m.def("run", &run, py::arg("problem"), py::arg("mesh"), py::arg("sys"),
        py::arg("scheme"), py::arg("init") = InitialData::Ritz);

  // --- studies ---
  py::class_<StudyConfig>(m, "StudyConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &StudyConfig::alpha)
      .def_readwrite("gammas", &StudyConfig::gammas)
      .def_readwrite("n_list", &StudyConfig::n_list)
      .def_readwrite("m_list", &StudyConfig::m_list)
      .def_readwrite("m_fixed", &StudyConfig::m_fixed)
      .def_readwrite("n_fixed", &StudyConfig::n_fixed)
      .def_readwrite("T", &StudyConfig::T)
      .def_readwrite("scheme", &StudyConfig::scheme)
      .def_readwrite("sigma", &StudyConfig::sigma)
      .def_readwrite("terms", &StudyConfig::terms)
      .def_readwrite("kappa", &StudyConfig::kappa)
      .def_readwrite("react", &StudyConfig::react)
      .def_readwrite("init", &StudyConfig::init)
      .def_readwrite("output", &StudyConfig::output)
      .def_readwrite("strict", &StudyConfig::strict);
  py::class_<RateRow>(m, "RateRow")
      .def_readonly("study", &RateRow::study)
      .def_readonly("alpha", &RateRow::alpha)
      .def_readonly("gamma", &RateRow::gamma)
      .def_readonly("scheme", &RateRow::scheme)
      .def_readonly("N", &RateRow::N)
      .def_readonly("M", &RateRow::M)
      .def_readonly("t", &RateRow::t)
      .def_readonly("error", &RateRow::error)
      .def_readonly("rate", &RateRow::rate)
      .def_readonly("has_rate", &RateRow::has_rate)
      .def_readonly("is_trace", &RateRow::is_trace);
  py::class_<StudyResult>(m, "StudyResult")
      .def_readonly("rows", &StudyResult::rows)
      .def_readonly("warnings", &StudyResult::warnings)
      .def_readonly("csv", &StudyResult::csv)
      .def_readonly("table", &StudyResult::table);
  m.def("max_error", &max_error, py::arg("history"), py::arg("sys"),
        py::arg("sol"), py::arg("refine") = 1);
  m.def("predicted_rate", &predicted_rate, py::arg("alpha"), py::arg("gamma"),
        py::arg("sigma"));
  m.def("observed_rate", &observed_rate, py::arg("e_prev"), py::arg("e_cur"),
        py::arg("x_prev"), py::arg("x_cur"));
  m.def("temporal_study", &temporal_study, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("spatial_study", &spatial_study, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("error_trace", &error_trace, py::arg("alpha"), py::arg("gamma"),
        py::arg("N"), py::arg("M"), py::arg("base") = StudyConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("to_csv", &to_csv, py::arg("rows"));
  m.def("to_text", &to_text, py::arg("rows"), py::arg("sigma"));
}
