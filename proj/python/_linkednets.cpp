#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkednets/analysis.hpp"
#include "linkednets/errors.hpp"
#include "linkednets/gen.hpp"
#include "linkednets/serialize.hpp"

namespace py = pybind11;
using namespace linkednets;

namespace {

Vertex to_vertex(const IntTuple& twists) { return Vertex::from_twists(twists); }

std::vector<IntTuple> to_tuples(const std::vector<Vertex>& vs) {
  std::vector<IntTuple> out;
  for (const auto& v : vs) out.push_back(v.twists());
  return out;
}

std::string validate_net(const std::string& text) {
  NetPresentation p = parse_net(text);
  Json reports = Json::array();
  bool passed = true;
  for (const auto& r : axiom_reports(p)) {
    passed = passed && r.passed;
    reports.push_back(report_to_json(r));
  }
  return dump_json(Json{{"passed", passed}, {"reports", reports}});
}

std::string intersection_at(const std::string& text, const IntTuple& vertex, bool allow_large_n) {
  NetPresentation p = parse_net(text);
  KernelProfile prof = kernel_profile(p, to_vertex(vertex));
  auto c = intersection_property_at(prof, p.n(), {.allow_large_n = allow_large_n});
  Json out{{"passed", !c}, {"profile", profile_to_json(prof)}};
  if (c) out["certificate"] = certificate_to_json(*c);
  return dump_json(out);
}

std::string check_intersection(const std::string& text, const std::string& mode, bool allow_large_n) {
  NetPresentation p = parse_net(text);
  IntersectionMode m;
  if (mode == "generators") m = IntersectionMode::GeneratorsOnly;
  else if (mode == "window") m = IntersectionMode::WholeWindow;
  else throw InvalidInput("mode must be 'generators' or 'window'");
  auto r = check_intersection_property(p, m, {.allow_large_n = allow_large_n});
  Json checked = Json::array(), skipped = Json::array();
  for (const auto& v : r.checked) checked.push_back(vertex_to_json(v));
  for (const auto& v : r.skipped) skipped.push_back(vertex_to_json(v));
  Json out{{"passed", r.passed()}, {"checked", checked}, {"skipped", skipped}};
  if (r.violation) out["certificate"] = certificate_to_json(*r.violation);
  return dump_json(out);
}

std::string decompose_net(const std::string& text, bool fallback, bool allow_large_n) {
  NetPresentation p = parse_net(text);
  DecompositionResult d = decompose(p, {.whole_window_fallback = fallback, .intersection = {.allow_large_n = allow_large_n}});
  if (d.violation) return dump_json(Json{{"status", "violation"}, {"certificate", certificate_to_json(*d.violation)}});
  Json summands = Json::array();
  for (const auto& s : d.summands) summands.push_back(summand_to_json(s));
  return dump_json(Json{{"status", "semisimple"}, {"summands", summands}, {"window_adequate", d.window_adequate}});
}

}  // namespace

PYBIND11_MODULE(_linkednets, m) {
  m.doc() = "Exact linked-net verification and decomposition. Nets cross the boundary as JSON text.";

  // Translators registered later are tried first, so subclasses follow the base.
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", error);
  auto precondition = py::register_exception<PreconditionFailed>(m, "PreconditionFailed", error);
  py::register_exception<WindowInsufficient>(m, "WindowInsufficient", error);
  py::register_exception<InconsistentPresentation>(m, "InconsistentPresentation", error);
  py::register_exception<DecompositionPreconditions>(m, "DecompositionPreconditions", precondition);

  m.def("normalize", [](const IntTuple& t) { return normalize(t).twists(); }, py::arg("twists"));
  m.def("delta", [](const IntTuple& u, const IntTuple& w) { return delta(to_vertex(u), to_vertex(w)).counts(); },
        py::arg("u"), py::arg("w"));
  m.def(
      "hull",
      [](const std::vector<IntTuple>& h) {
        std::vector<Vertex> vs;
        for (const auto& t : h) vs.push_back(to_vertex(t));
        return to_tuples(hull(vs));
      },
      py::arg("vertices"));

  m.def("validate", &validate_net, py::arg("net"));
  m.def("intersection_at", &intersection_at, py::arg("net"), py::arg("vertex"), py::arg("allow_large_n") = false);
  m.def("check_intersection", &check_intersection, py::arg("net"), py::arg("mode") = "generators",
        py::arg("allow_large_n") = false);
  m.def("decompose", &decompose_net, py::arg("net"), py::arg("whole_window_fallback") = false,
        py::arg("allow_large_n") = false);
  m.def(
      "generate", [](const std::string& spec) { return dump_net(random_semisimple_net(gen_spec_from_json(parse_json(spec))).first); },
      py::arg("spec"));
  m.def("example_nonsemisimple", [] { return dump_net(fixture_nonsemisimple()); });
}
