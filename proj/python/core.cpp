#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wald/classifier.hpp"
#include "wald/errors.hpp"
#include "wald/fat_points.hpp"
#include "wald/fixtures.hpp"
#include "wald/json_io.hpp"

namespace py = pybind11;
using namespace wald;

namespace {

std::vector<ProjPoint> points(const std::string& text) { return io::points_from_json(io::parse_text(text, "points")); }

std::string classify_json(const std::string& pts, int m_max, bool sweep_intervals, std::size_t aux_cap) {
  ClassifyConfig cfg;
  cfg.m_max = m_max;
  cfg.sweep_intervals = sweep_intervals;
  cfg.aux_cap = aux_cap;
  return io::to_json(classify(points(pts), cfg)).dump();
}

std::string alpha_json(const std::string& pts, int m) {
  return io::to_json(alpha(FatPointScheme::uniform(points(pts), m))).dump();
}

std::string sweep_json(const std::string& pts, int m_max) {
  Engine eng;
  io::json out = io::json::array();
  for (const auto& e : eng.sweep(points(pts), m_max)) out.push_back(io::to_json(e));
  return out.dump();
}

std::string lower_json(const std::string& pts, const std::optional<std::string>& aux, bool grouped,
                       std::size_t aux_cap) {
  auto p = points(pts);
  AuxCurveSet set = aux ? io::aux_from_json(p, io::parse_text(*aux, "aux")) : auto_aux(p, aux_cap);
  return io::to_json(solve_min_ratio(build_system(set, {grouped}))).dump();
}

std::string upper_json(const std::string& pts, const std::string& divisor) {
  auto p = points(pts);
  FormalDivisor dv = io::divisor_from_json(io::parse_text(divisor, "divisor"), p);
  return io::to_json(verify_upper(dv, p)).dump();
}

std::string fixture_json(const std::string& name) { return io::to_json(fixture(name)).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> base(m, "WaldError", PyExc_ValueError);
  static py::exception<InternalError> internal(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InternalError& e) {
      py::set_error(internal, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    } catch (const std::invalid_argument& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("classify_json", &classify_json, py::arg("points"), py::arg("m_max") = 8, py::arg("sweep_intervals") = true,
        py::arg("aux_cap") = kDefaultAuxCap, py::call_guard<py::gil_scoped_release>());
  m.def("alpha_json", &alpha_json, py::arg("points"), py::arg("m"), py::call_guard<py::gil_scoped_release>());
  m.def("sweep_json", &sweep_json, py::arg("points"), py::arg("m_max"), py::call_guard<py::gil_scoped_release>());
  m.def("lower_json", &lower_json, py::arg("points"), py::arg("aux") = std::nullopt, py::arg("grouped") = false,
        py::arg("aux_cap") = kDefaultAuxCap, py::call_guard<py::gil_scoped_release>());
  m.def("upper_json", &upper_json, py::arg("points"), py::arg("divisor"));
  m.def("fixture_json", &fixture_json, py::arg("name"));
  m.def("fixture_names", &fixture_names);
}
