/*
   Copyright 2026 The sempilot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cmath>
#include <sstream>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sempilot/config.hpp"
#include "sempilot/error.hpp"
#include "sempilot/estimator.hpp"
#include "sempilot/harness.hpp"
#include "sempilot/metrics.hpp"
#include "sempilot/modem.hpp"
#include "sempilot/pilot.hpp"
#include "sempilot/report.hpp"
#include "sempilot/semantic_pilot.hpp"
#include "sempilot/textcodec.hpp"
#include "sempilot/verify.hpp"

namespace py = pybind11;
using namespace sempilot;

namespace {

std::string to_config_value(const py::handle& v) {
  if (py::isinstance<py::bool_>(v)) return v.cast<bool>() ? "true" : "false";
  if (py::isinstance<py::str>(v)) return v.cast<std::string>();
  if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v)) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ",";
      out += to_config_value(item);
    }
    return out;
  }
  if (py::isinstance<py::float_>(v)) {
    const double d = v.cast<double>();
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    std::ostringstream s;
    s.precision(17);
    s << d;
    return s.str();
  }
  return py::str(v).cast<std::string>();
}

ExperimentConfig config_from_dict(const py::dict& d) {
  ConfigMap m;
  for (const auto& [k, v] : d) m[k.cast<std::string>()] = to_config_value(v);
  ExperimentConfig cfg;
  apply_config(cfg, m);
  return cfg;
}

py::object optional_float(const std::optional<double>& v) {
  return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict summary_dict(const SchemeSummary& s) {
  py::dict d;
  d["scheme"] = std::string(scheme_name(s.scheme));
  d["snr_db"] = s.snr_db;
  d["trials"] = s.trials;
  d["nmse_mean"] = s.nmse.mean();
  d["nmse_se"] = s.nmse.standard_error();
  d["phase_err_mean"] = s.phase_error.mean();
  d["phase_err_se"] = s.phase_error.standard_error();
  d["ber"] = s.ber();
  d["bit_errors"] = s.bit_errors;
  d["bits"] = s.bits;
  if (s.has_selection) {
    d["reliability_mean"] = s.reliability.mean();
    d["detection_mean"] = s.detection.mean();
    d["selection_mean"] = s.selection.mean();
  } else {
    d["reliability_mean"] = py::none();
    d["detection_mean"] = py::none();
    d["selection_mean"] = py::none();
  }
  d["reliability_undefined"] = s.reliability_undefined;
  d["detection_undefined"] = s.detection_undefined;
  d["gamma_nonpositive"] = s.gamma_nonpositive;
  d["corrector_fallbacks"] = s.corrector_fallbacks;
  d["length_repairs"] = s.length_repairs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semantic-pilot channel estimation simulator";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "SempilotError", PyExc_ValueError);

  m.def("alphabet", [] { return std::string(Alphabet::standard().chars()); }, "The 64-character text alphabet.");
  m.def("encode_text", [](const std::string& t) { return encode_text(t); }, py::arg("text"),
        "6-bit codes, MSB first, as a list of 0/1.");
  m.def("decode_text", [](const BitVector& b) { return decode_text(b); }, py::arg("bits"));
  m.def("qpsk_modulate", [](const BitVector& b) { return qpsk_modulate(b); }, py::arg("bits"));
  m.def(
      "qpsk_decide",
      [](const SymbolVector& y) {
        Decisions d = qpsk_decide(y);
        return py::make_tuple(d.bits, d.symbols);
      },
      py::arg("symbols"), "Hard decisions: (bits, constellation points).");
  m.def("zadoff_chu", [](std::size_t length, std::size_t root) { return zadoff_chu({length, root}); },
        py::arg("length") = 16, py::arg("root") = 1);
  m.def(
      "ls_estimate", [](const SymbolVector& xp, const SymbolVector& yp) { return ls_estimate(xp, yp); },
      py::arg("pilot"), py::arg("received"));
  m.def(
      "zf_equalize", [](const SymbolVector& y, Complex h) { return zf_equalize(y, h); }, py::arg("received"),
      py::arg("h"));
  m.def(
      "refine_phase",
      [](const SymbolVector& xp, const SymbolVector& yp, const std::vector<std::size_t>& indices,
         const SymbolVector& symbols, const SymbolVector& yt) {
        SemanticPilot sp{indices, symbols};
        return refine_phase(xp, yp, sp, yt);
      },
      py::arg("pilot"), py::arg("received_pilot"), py::arg("indices"), py::arg("symbols"),
      py::arg("received_text"));
  m.def(
      "magnitude_scale",
      [](Complex h_r, const SymbolVector& xp, const SymbolVector& yp, const SymbolVector& xt, const SymbolVector& yt) {
        return magnitude_scale(h_r, xp, yp, xt, yt);
      },
      py::arg("h_r"), py::arg("pilot"), py::arg("received_pilot"), py::arg("decided"), py::arg("received_text"));
  m.def(
      "select_semantic_pilot",
      [](const std::string& decoded, const std::string& corrected, const SymbolVector& decided,
         bool exclude_mask_matches) {
        SemanticPilot sp = select_semantic_pilot(decoded, corrected, decided, {exclude_mask_matches});
        return py::make_tuple(sp.indices, sp.symbols);
      },
      py::arg("decoded"), py::arg("corrected"), py::arg("decided_symbols"), py::arg("exclude_mask_matches") = false,
      "Returns (indices, symbols).");
  m.def("nmse", &nmse, py::arg("h"), py::arg("h_hat"));
  m.def("phase_error", &phase_error, py::arg("h"), py::arg("h_hat"));
  m.def("ber", [](const BitVector& a, const BitVector& b) { return ber(a, b); }, py::arg("truth"), py::arg("decoded"));
  m.def(
      "selection_metrics",
      [](const std::vector<std::size_t>& indices, const SymbolVector& transmitted, const SymbolVector& decided,
         const std::string& granularity) {
        SemanticPilot sp;
        sp.indices = indices;
        for (auto i : indices) sp.symbols.push_back(decided.at(i));
        const auto g = granularity == "symbol" ? ErrorGranularity::Symbol : ErrorGranularity::Character;
        const SelectionMetrics s = selection_metrics(sp, transmitted, decided, g);
        py::dict d;
        d["reliability"] = optional_float(s.reliability);
        d["detection_rate"] = optional_float(s.detection_rate);
        d["selection_ratio"] = s.selection_ratio;
        return d;
      },
      py::arg("indices"), py::arg("transmitted"), py::arg("decided"), py::arg("granularity") = "character");
  m.def("table1", [] {
    const Table1Example ex = table1_example();
    py::dict d;
    d["transmitted"] = ex.transmitted;
    d["decoded"] = ex.decoded;
    d["corrected"] = ex.corrected;
    d["matches"] = ex.matches;
    d["pilot_size"] = ex.pilot.size();
    return d;
  });
  m.def(
      "run_experiment",
      [](const py::dict& config, const std::string& output_dir) {
        const ExperimentConfig cfg = config_from_dict(config);
        ExperimentResult res;
        {
          py::gil_scoped_release release;
          res = run_experiment(cfg);
        }
        if (!output_dir.empty()) write_outputs(res, output_dir);
        py::list rows;
        for (const auto& s : res.summaries) rows.append(summary_dict(s));
        return rows;
      },
      py::arg("config") = py::dict(), py::arg("output_dir") = "",
      "Run a Monte Carlo experiment. Keys match the config file; returns one dict per (scheme, SNR).");
}
