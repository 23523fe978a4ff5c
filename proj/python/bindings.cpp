#include <optional>
#include <string>
#include <utility>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phin/cli.hpp"
#include "phin/json_io.hpp"

namespace py = pybind11;

namespace {

// Same dispatch as the executable; returns (exit code, canonical JSON text).
std::pair<int, std::string> run(const std::string& command, const std::string& payload, unsigned long p,
                                std::optional<std::size_t> n, std::optional<std::size_t> f) {
  phin::SessionConfig config;
  config.p = p;
  config.n = n;
  config.f = f;
  config.command = command;
  nlohmann::json body;
  try {
    body = payload.empty() ? nlohmann::json::object() : nlohmann::json::parse(payload);
  } catch (const nlohmann::json::parse_error& e) {
    nlohmann::json err = {{"error", {{"kind", "invalid_input"}, {"message", std::string("malformed JSON: ") + e.what()}}}};
    return {phin::exit_invalid_input, phin::io::canonical(err)};
  }
  py::gil_scoped_release release;
  const phin::CommandResult r = phin::run_command(command, body, config);
  return {r.exit_code, phin::io::canonical(r.body)};
}

}  // namespace

PYBIND11_MODULE(_phin, m) {
  m.doc() = "Exact computations on (phi, N)-module moduli";
  m.def("run_command", &run, py::arg("command"), py::arg("payload"), py::arg("p") = 2, py::arg("n") = py::none(),
        py::arg("f") = py::none());
  m.def("command_names", &phin::command_names);
}
