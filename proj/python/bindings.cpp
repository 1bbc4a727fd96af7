#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biphoton/braun_twiss.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/montecarlo.hpp"
#include "biphoton/qutrit.hpp"
#include "biphoton/source.hpp"

namespace py = pybind11;
using namespace biphoton;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-mode biphoton qutrits and the Braun-Twiss coincidence scheme";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UnknownName>(m, "UnknownNameError", PyExc_ValueError);
  py::register_exception<ZeroState>(m, "ZeroStateError", PyExc_ValueError);
  py::register_exception<CutoffExceeded>(m, "CutoffExceededError", PyExc_RuntimeError);

  py::class_<PolarizationMode>(m, "PolarizationMode")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_static("named", &PolarizationMode::named, py::arg("name"))
      .def_static("from_jones", &PolarizationMode::from_jones, py::arg("h"), py::arg("v"))
      .def_property_readonly("theta", &PolarizationMode::theta)
      .def_property_readonly("phi", &PolarizationMode::phi)
      .def("jones", &PolarizationMode::jones)
      .def("poincare", &PolarizationMode::poincare)
      .def("__repr__", [](const PolarizationMode& mode) {
        return "PolarizationMode(theta=" + std::to_string(mode.theta()) +
               ", phi=" + std::to_string(mode.phi()) + ")";
      });

  m.def("mode_overlap", &mode_overlap, py::arg("u"), py::arg("v"));
  m.def("same_mode", &same_mode, py::arg("u"), py::arg("v"), py::arg("tol") = 1e-12);

  py::class_<BiphotonState>(m, "BiphotonState")
      .def(py::init([](Complex c1, Complex c2, Complex c3) {
             return BiphotonState{c1, c2, c3};
           }),
           py::arg("c1"), py::arg("c2"), py::arg("c3"))
      .def_readwrite("c1", &BiphotonState::c1)
      .def_readwrite("c2", &BiphotonState::c2)
      .def_readwrite("c3", &BiphotonState::c3)
      .def("norm", &BiphotonState::norm)
      .def("is_normalized", &BiphotonState::is_normalized, py::arg("tol") = 1e-12)
      .def("normalized", &BiphotonState::normalized)
      .def("__repr__", [](const BiphotonState& s) {
        std::ostringstream out;
        out << "BiphotonState(c1=" << s.c1 << ", c2=" << s.c2 << ", c3=" << s.c3 << ")";
        return out.str();
      });

  py::class_<PoincarePair>(m, "PoincarePair")
      .def_readonly("first", &PoincarePair::first)
      .def_readonly("second", &PoincarePair::second)
      .def_readonly("global_phase", &PoincarePair::global_phase);

  py::enum_<NamedState>(m, "NamedState")
      .value("HV", NamedState::HV)
      .value("RL", NamedState::RL)
      .value("DDb", NamedState::DDb)
      .value("HH", NamedState::HH)
      .value("VV", NamedState::VV);

  m.def("from_modes", &from_modes, py::arg("u"), py::arg("v"));
  m.def("to_modes", &to_modes, py::arg("state"));
  m.def("overlap", &overlap, py::arg("s1"), py::arg("s2"));
  m.def("is_orthogonal", &is_orthogonal, py::arg("s1"), py::arg("s2"),
        py::arg("tol") = 1e-10);
  m.def("degree_of_polarization", &degree_of_polarization, py::arg("state"));
  m.def("mean_stokes", &mean_stokes, py::arg("state"));
  m.def("standard_state", py::overload_cast<const std::string&>(&standard_state),
        py::arg("name"));
  m.def("standard_state", py::overload_cast<NamedState>(&standard_state), py::arg("name"));
  m.def("random_state", py::overload_cast<std::uint64_t>(&random_state), py::arg("seed"));

  py::class_<DetectorTuning>(m, "DetectorTuning")
      .def(py::init([](PolarizationMode a, PolarizationMode b) {
             return DetectorTuning{a, b};
           }),
           py::arg("arm1_mode"), py::arg("arm2_mode"))
      .def_readwrite("arm1_mode", &DetectorTuning::arm1_mode)
      .def_readwrite("arm2_mode", &DetectorTuning::arm2_mode)
      .def("tuned_state", &DetectorTuning::tuned_state);

  py::class_<CoincidenceResult>(m, "CoincidenceResult")
      .def_readonly("amplitude", &CoincidenceResult::amplitude)
      .def_readonly("exact_probability", &CoincidenceResult::exact_probability)
      .def_readonly("overlap_squared", &CoincidenceResult::overlap_squared)
      .def_readonly("same_arm_probability", &CoincidenceResult::same_arm_probability);

  py::class_<VisibilityScan>(m, "VisibilityScan")
      .def_readonly("max", &VisibilityScan::max)
      .def_readonly("min", &VisibilityScan::min)
      .def_readonly("visibility", &VisibilityScan::visibility);

  m.def("coincidence_probability", &coincidence_probability, py::arg("input"),
        py::arg("tuning"));
  m.def("coincidence_probability_paired", &coincidence_probability_paired,
        py::arg("tuning"), py::arg("c"), py::arg("d"));
  m.def("orthogonality_test", &orthogonality_test, py::arg("input"), py::arg("tuning"),
        py::arg("tol") = 1e-10);
  m.def("singles_intensity", &singles_intensity, py::arg("input"), py::arg("arm"),
        py::arg("analyzer"));
  m.def("visibility_scan", &visibility_scan, py::arg("input"), py::arg("arm"));

  py::enum_<ArmBasis>(m, "ArmBasis")
      .value("TwoZero", ArmBasis::TwoZero)
      .value("OneOne", ArmBasis::OneOne)
      .value("ZeroTwo", ArmBasis::ZeroTwo);

  py::class_<ArmSetting>(m, "ArmSetting")
      .def(py::init<>())
      .def_readwrite("pump_amplitude", &ArmSetting::pump_amplitude)
      .def_readwrite("phase", &ArmSetting::phase)
      .def_readwrite("basis_state", &ArmSetting::basis_state);

  py::class_<SourceConfig>(m, "SourceConfig")
      .def(py::init<>())
      .def_readwrite("arms", &SourceConfig::arms)
      .def("validate", &SourceConfig::validate);

  m.def("emit", &emit, py::arg("config"));
  m.def("settings_for", &settings_for, py::arg("target"));

  py::enum_<Observable>(m, "Observable")
      .value("Overlap2", Observable::Overlap2)
      .value("Exact", Observable::Exact);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("pair_rate", &ExperimentConfig::pair_rate)
      .def_readwrite("integration_time", &ExperimentConfig::integration_time)
      .def_readwrite("efficiency1", &ExperimentConfig::efficiency1)
      .def_readwrite("efficiency2", &ExperimentConfig::efficiency2)
      .def_readwrite("dark_rate1", &ExperimentConfig::dark_rate1)
      .def_readwrite("dark_rate2", &ExperimentConfig::dark_rate2)
      .def_readwrite("coincidence_window", &ExperimentConfig::coincidence_window)
      .def_readwrite("observable", &ExperimentConfig::observable)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def("validate", &ExperimentConfig::validate);

  py::class_<CountRecord>(m, "CountRecord")
      .def_readonly("singles1", &CountRecord::singles1)
      .def_readonly("singles2", &CountRecord::singles2)
      .def_readonly("coincidences", &CountRecord::coincidences)
      .def_readonly("accidental_estimate", &CountRecord::accidental_estimate)
      .def_readonly("duration", &CountRecord::duration)
      .def("rate", &CountRecord::rate)
      .def("rate_error", &CountRecord::rate_error);

  py::class_<TableRow>(m, "TableRow")
      .def_readonly("input", &TableRow::input)
      .def_readonly("detected", &TableRow::detected)
      .def_readonly("input_polarization", &TableRow::input_polarization)
      .def_readonly("detected_polarization", &TableRow::detected_polarization)
      .def_readonly("probability", &TableRow::probability)
      .def_readonly("rate", &TableRow::rate)
      .def_readonly("rate_error", &TableRow::rate_error);

  m.def("run", &run, py::arg("input"), py::arg("tuning"), py::arg("config"));
  m.def("expected_rate", &expected_rate, py::arg("input"), py::arg("tuning"),
        py::arg("config"));
  m.def("accidental_rate", &accidental_rate, py::arg("singles1_rate"),
        py::arg("singles2_rate"), py::arg("window"));
  m.def("tuning_for", &tuning_for, py::arg("name"));
  m.def("ideal_table", &ideal_table, py::arg("observable") = Observable::Overlap2);
  m.def("reproduce_table", &reproduce_table, py::arg("config"), py::arg("seeds") = 10);
}
