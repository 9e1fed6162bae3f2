#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "keller/core/errors.hpp"
#include "keller/pencil/gao.hpp"
#include "keller/verify/harness.hpp"

namespace py = pybind11;
using namespace keller;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string text(const nlohmann::json& j) { return j.dump(); }

std::uint64_t seed_or_default(std::optional<std::uint64_t> s) { return s ? *s : default_seed(); }

CorpusEntry entry(const std::string& p, const std::string& q) {
  CorpusEntry e;
  e.name = "map";
  e.P = p;
  e.Q = q;
  return e;
}

}  // namespace

PYBIND11_MODULE(_keller, m) {
  m.doc() = "Bindings for the keller toolkit; results are JSON text.";

  static py::exception<Error> error(m, "KellerError");
  static py::exception<DegreeCapError> cap(m, "DegreeCapExceeded", error.ptr());
  static py::exception<ParseError> parse(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DegreeCapError& e) {
      py::object ex = py::reinterpret_borrow<py::object>(cap.ptr())(e.what());
      ex.attr("min_poly") = e.min_poly();
      PyErr_SetObject(cap.ptr(), ex.ptr());
    } catch (const ParseError& e) {
      PyErr_SetString(parse.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def(
      "analyze",
      [](const std::string& p, const std::string& q, std::optional<std::uint64_t> seed) {
        RunConfig cfg;
        cfg.seed = seed_or_default(seed);
        return text(to_json(run_map(entry(p, q), cfg)));
      },
      py::arg("P"), py::arg("Q"), py::arg("seed") = py::none());
  m.def(
      "pencil",
      [](const std::string& p, const std::string& q, int samples, std::optional<std::uint64_t> seed) {
        return text(to_json(scan_pencil(PencilMap::parse(p, q), samples, seed_or_default(seed))));
      },
      py::arg("P"), py::arg("Q"), py::arg("samples") = 50, py::arg("seed") = py::none());
  m.def(
      "resolve", [](const std::string& p, const std::string& q) { return text(to_json(resolve_pencil(PencilMap::parse(p, q)))); },
      py::arg("P"), py::arg("Q"));
  m.def(
      "dual_graph_dot",
      [](const std::string& p, const std::string& q) { return dual_graph_dot(resolve_pencil(PencilMap::parse(p, q))); },
      py::arg("P"), py::arg("Q"));
  m.def(
      "jelonek",
      [](const std::string& p, const std::string& q, std::optional<std::uint64_t> seed) {
        PencilMap f = PencilMap::parse(p, q);
        auto ff = finite_fibres_check(f);
        nlohmann::json j = {{"finite_fibres", to_json(ff)}};
        if (ff.finite) {
          auto af = nonproper_set(f, seed_or_default(seed));
          j["deg_geo"] = af.deg_geo;
          j["a_f"] = to_json(af);
        }
        return text(j);
      },
      py::arg("P"), py::arg("Q"), py::arg("seed") = py::none());
  m.def(
      "run_corpus",
      [](const std::string& path, int jobs, std::optional<std::uint64_t> seed) {
        RunConfig cfg;
        cfg.seed = seed_or_default(seed);
        auto rep = run_corpus(load_corpus(path), cfg, jobs);
        return py::make_tuple(text(to_json(rep)), summary_table(rep));
      },
      py::arg("path"), py::arg("jobs") = 1, py::arg("seed") = py::none());
  m.def(
      "jacobian", [](const std::string& p, const std::string& q) { return jacobian(PencilMap::parse(p, q)).to_string(); },
      py::arg("P"), py::arg("Q"));
  m.def(
      "absolute_factor_count", [](const std::string& f) { return absolute_factor_count(parse_poly(f)); }, py::arg("f"));
}
