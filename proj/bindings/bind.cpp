// Python surface of the engine. Everything structured crosses the border
// as JSON text; the package wraps these in dict-friendly helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "selgames/run_config.hpp"
#include "selgames/strategies.hpp"
#include "selgames/verify.hpp"

namespace py = pybind11;
using namespace selgames;

void bind_selgames(py::module_& m) {
  m.doc() = "Selection-game engine over finitely represented direct sums";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<LegalityError>(m, "LegalityError");
  py::register_exception<ContractError>(m, "ContractError");
  py::register_exception<MalformedElement>(m, "MalformedElement");
  py::register_exception<ResourceError>(m, "ResourceError");

  m.def(
      "simulate",
      [](const std::string& config, bool capture_faults) {
        const RunConfig c = RunConfig::from_json(json::parse(config));
        return run_simulation(c, capture_faults ? FaultPolicy::Capture
                                                : FaultPolicy::Throw)
            .to_jsonl();
      },
      py::arg("config"), py::arg("capture_faults") = true,
      "Run one configured play; returns the transcript as JSONL text.");

  m.def(
      "validate",
      [](const std::string& transcript, bool rebuild) {
        const Transcript t = Transcript::parse_jsonl(transcript);
        const ValidationReport r = validate_transcript(
            t, rebuild ? descriptor_rebuilder() : OneRebuilder{});
        return r.to_json().dump();
      },
      py::arg("transcript"), py::arg("rebuild") = true,
      "Re-check a recorded transcript; returns the report as JSON text.");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t scale) {
        return run_verify_suite(suite, seed, scale).to_json().dump();
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("scale") = 1,
      "Run one named property suite; returns the report as JSON text.");

  m.def("suites", &verify_suite_names,
        "Names accepted by verify(), in command-line order.");

  m.def("pair", &PairingSchedule::pair, py::arg("rank"), py::arg("repeat"),
        "Inning at which the schedule plays the given rank and repeat.");
  m.def("unpair", &PairingSchedule::unpair, py::arg("inning"),
        "Inverse of pair(); returns (rank, repeat).");
  m.def("bound", &PairingSchedule::bound, py::arg("rank"),
        py::arg("repeats"),
        "Inning by which the given rank has been played the given number "
        "of times.");

  m.def(
      "default_probes",
      [](const std::string& config) {
        const RunConfig c = RunConfig::from_json(json::parse(config));
        json out = json::array();
        for (const Element& p : c.probes) out.push_back(p.to_json());
        return out.dump();
      },
      py::arg("config"),
      "Probe sample a config resolves to, as JSON text.");
}
