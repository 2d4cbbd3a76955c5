#include <pybind11/pybind11.h>

#include "picard/errors.hpp"
#include "picard/report.hpp"
#include "picard/torsion.hpp"
#include "picard/words.hpp"

namespace py = pybind11;
using namespace picard;

namespace {

Config make_config(int max_reduce_iters, long precision_bits, std::size_t closure_cap, int word_search_len,
                   std::int64_t height_bound) {
  Config c{max_reduce_iters, precision_bits, closure_cap, word_search_len, height_bound};
  c.install();
  return c;
}

#define PICARD_CONFIG_ARGS                                                                                \
  py::arg("max_reduce_iters") = 1000, py::arg("precision_bits") = 128, py::arg("closure_cap") = 10000, \
  py::arg("word_search_len") = 12, py::arg("height_bound") = 20

template <class F>
auto with_config(F f) {
  return [f](int a, long b, std::size_t c, int d, std::int64_t e) {
    Config cfg = make_config(a, b, c, d, e);
    return f(cfg).dump();
  };
}

}  // namespace

PYBIND11_MODULE(_picard, m) {
  m.doc() = "Exact computations in PU(2,1) over the Eisenstein-Picard ring of discriminant -7";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflow", PyExc_OverflowError);

  m.def("eval_word", [](const std::string& w) { return to_json(eval_word(w)).dump(); }, py::arg("word"));
  m.def(
      "projective_order",
      [](const std::string& w) -> py::object {
        auto n = projective_order(eval_group(w));
        return n ? py::object(py::int_(*n)) : py::object(py::none());
      },
      py::arg("word"));

  m.def("ford_spheres", [] { return ford_spheres_report().dump(); });
  m.def("depths", [](std::int64_t n) { return depth_report(n).dump(); }, py::arg("max_depth") = 16);
  m.def("cusp_overlaps", [] { return cusp_overlaps_report().dump(); });
  m.def("cusp_torsion", [] { return cusp_torsion_report().dump(); });
  m.def(
      "mirror_search",
      [](const std::string& which, std::int64_t norm, std::int64_t height) {
        return mirror_search_report(which, norm, height).dump();
      },
      py::arg("which"), py::arg("norm"), py::arg("height"));

  m.def(
      "ford_reduce",
      [](const std::string& point, int a, long b, std::size_t c, int d, std::int64_t e) {
        return with_config([&](const Config& cfg) { return ford_reduce_report(parse_point(point), cfg); })(a, b, c, d, e);
      },
      py::arg("point"), PICARD_CONFIG_ARGS);
  m.def(
      "torsion_stabilizer",
      [](const std::string& point, int a, long b, std::size_t c, int d, std::int64_t e) {
        return with_config([&](const Config& cfg) { return torsion_stabilizer_report(parse_point(point), cfg); })(a, b, c, d, e);
      },
      py::arg("point"), PICARD_CONFIG_ARGS);
  m.def(
      "mirror_verify",
      [](const std::string& which, int a, long b, std::size_t c, int d, std::int64_t e) {
        return with_config([&](const Config& cfg) { return mirror_verify_report(which, cfg); })(a, b, c, d, e);
      },
      py::arg("which"), PICARD_CONFIG_ARGS);
  m.def(
      "congruence",
      [](const std::string& ideal, int a, long b, std::size_t c, int d, std::int64_t e) {
        return with_config([&](const Config& cfg) { return congruence_report(ideal, cfg); })(a, b, c, d, e);
      },
      py::arg("ideal"), PICARD_CONFIG_ARGS);
  m.def("torsion_enumerate", with_config(torsion_enumerate_report), PICARD_CONFIG_ARGS);
  m.def("presentation", with_config(presentation_report), PICARD_CONFIG_ARGS);
  m.def("report", with_config(full_report), PICARD_CONFIG_ARGS);
}
