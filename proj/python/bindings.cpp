// Python module _duoidal: the command layer, exchanging JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "duo/cli.hpp"

namespace py = pybind11;

namespace {

std::string report(const duo::CommandResult& r) {
  nlohmann::json j = r.to_json({});
  j["exit_code"] = r.exit_code;
  nlohmann::json outs = nlohmann::json::object();
  for (const auto& [stem, file] : r.outputs) outs[stem] = nlohmann::json::parse(duo::serialize_spec(file));
  j["outputs"] = outs;
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_duoidal, m) {
  m.doc() = "duoidal structure checker";
  m.def("validate", [](const std::string& t) { return report(duo::run_validate(t)); }, py::arg("text"));
  m.def("construct", [](const std::string& target, const std::string& t) { return report(duo::run_construct(target, t)); },
        py::arg("target"), py::arg("text"));
  m.def("roundtrip", [](const std::string& t) { return report(duo::run_roundtrip(t)); }, py::arg("text"));
  m.def("classify", [](const std::string& t) { return report(duo::run_classify(t)); }, py::arg("text"));
  m.def("construct_targets", &duo::construct_targets);
  m.def("fixture_catalog", &duo::fixture_catalog);
  m.def("fixture", [](const std::string& name) {
    try {
      return duo::serialize_spec(duo::emit_fixture(name));
    } catch (const duo::ParseError& e) {
      throw py::value_error(e.what());
    }
  }, py::arg("name"));
  m.def("size_budget", &duo::size_budget);
  m.def("set_size_budget", &duo::set_size_budget, py::arg("budget"));
}
