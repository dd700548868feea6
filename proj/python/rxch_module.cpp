#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rxch/capacity.hpp"
#include "rxch/info_discrete.hpp"
#include "rxch/info_limit.hpp"
#include "rxch/kinetics.hpp"
#include "rxch/model_io.hpp"
#include "rxch/simulate.hpp"

namespace py = pybind11;
using namespace rxch;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Receptor channel information-rate calculations";

  py::class_<StateInfo>(m, "StateInfo")
      .def_readonly("id", &StateInfo::id)
      .def_readonly("property", &StateInfo::property);

  py::class_<Edge>(m, "Edge")
      .def_readonly("from_state", &Edge::from)
      .def_readonly("to_state", &Edge::to)
      .def_readonly("base_rate", &Edge::base_rate)
      .def_readonly("sensitive", &Edge::sensitive);

  py::class_<ReceptorModel>(m, "ReceptorModel")
      .def_readonly("states", &ReceptorModel::states)
      .def_readonly("edges", &ReceptorModel::edges)
      .def_readonly("x_min", &ReceptorModel::x_min)
      .def_readonly("x_max", &ReceptorModel::x_max)
      .def_property_readonly("size", &ReceptorModel::size)
      .def("has_lump", &ReceptorModel::has_lump);

  py::class_<InputDistribution>(m, "InputDistribution")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("xs"),
           py::arg("ps"))
      .def_static("point_mass", &InputDistribution::point_mass)
      .def_static("binary", &InputDistribution::binary, py::arg("x_low"),
                  py::arg("x_high"), py::arg("p_low"))
      .def_property_readonly("xs", &InputDistribution::xs)
      .def_property_readonly("ps", &InputDistribution::ps)
      .def("mean", &InputDistribution::mean);

  py::class_<InfoReport>(m, "InfoReport")
      .def_readonly("rate_per_use", &InfoReport::rate_per_use)
      .def_readonly("rate_per_second", &InfoReport::rate_per_second)
      .def_readonly("dt", &InfoReport::dt)
      .def_readonly("per_edge", &InfoReport::per_edge);

  py::class_<FluxReport>(m, "FluxReport")
      .def_readonly("per_edge", &FluxReport::per_edge)
      .def_readonly("total", &FluxReport::total);

  py::class_<LimitReport>(m, "LimitReport")
      .def_readonly("rate", &LimitReport::rate)
      .def_readonly("flux", &LimitReport::flux)
      .def_readonly("divergence", &LimitReport::divergence)
      .def_readonly("per_edge_iota", &LimitReport::per_edge_iota);

  py::enum_<RateMode>(m, "RateMode")
      .value("discrete", RateMode::discrete)
      .value("limit", RateMode::limit);

  py::class_<CapacityResult>(m, "CapacityResult")
      .def_readonly("value", &CapacityResult::value)
      .def_readonly("argmax", &CapacityResult::argmax)
      .def_readonly("argmax_p_low", &CapacityResult::argmax_p_low)
      .def_readonly("theorem3_applies", &CapacityResult::theorem3_applies)
      .def_readonly("dt", &CapacityResult::dt);

  py::enum_<MiTarget>(m, "MiTarget").value("Y", MiTarget::Y).value("Z", MiTarget::Z);

  py::class_<MiEstimate>(m, "MiEstimate")
      .def_readonly("mean", &MiEstimate::mean)
      .def_readonly("std_error", &MiEstimate::std_error)
      .def_readonly("n_steps", &MiEstimate::n_steps)
      .def_readonly("n_chains", &MiEstimate::n_chains)
      .def_readonly("low_counts", &MiEstimate::low_counts);

  m.def("builtin", &builtin, py::arg("name"));
  m.def("load_model", &load_model, py::arg("name_or_path"));
  m.def("parse_model", &parse_model, py::arg("text"));
  m.def("serialize_model", &serialize_model, py::arg("model"));
  m.def("dt_max", &dt_max, py::arg("model"));
  m.def("stationary", &stationary, py::arg("model"), py::arg("dist"));
  m.def("mi_rate_discrete", &mi_rate_discrete, py::arg("model"), py::arg("dist"),
        py::arg("dt"));
  m.def("mi_bruteforce", &mi_bruteforce, py::arg("model"), py::arg("dist"),
        py::arg("dt"), py::arg("n"));
  m.def("limit_rate", &limit_rate, py::arg("model"), py::arg("dist"));
  m.def("flux", &flux, py::arg("model"), py::arg("dist"));
  m.def("capacity_binary", &capacity_binary, py::arg("model"), py::arg("x_low"),
        py::arg("x_high"), py::arg("mode"), py::arg("dt") = 0.0);
  m.def("capacity_general", &capacity_general, py::arg("model"), py::arg("alphabet"),
        py::arg("mode"), py::arg("dt") = 0.0, py::arg("seed") = 20240817ULL);
  m.def("estimate_mi_y", &estimate_mi_y, py::arg("model"), py::arg("dist"),
        py::arg("dt"), py::arg("n_steps"), py::arg("n_chains"), py::arg("seed"));
  m.def("estimate_mi_z", &estimate_mi_z, py::arg("model"), py::arg("dist"),
        py::arg("dt"), py::arg("n_steps"), py::arg("n_chains"), py::arg("seed"));
}
