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

#include "sempilot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "sempilot/channel.hpp"
#include "sempilot/estimator.hpp"
#include "sempilot/metrics.hpp"
#include "sempilot/modem.hpp"
#include "sempilot/textcodec.hpp"

namespace sempilot {

namespace {

constexpr double kCheckKFactor = 10.0;

SymbolVector random_qpsk(std::size_t n, Rng& rng) {
  BitVector bits(2 * n);
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng);
  return qpsk_modulate(bits);
}

std::string describe(double measured, double expected) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "measured %.6g, expected %.6g, rel. err %.3f%%", measured, expected,
                100.0 * std::fabs(measured - expected) / expected);
  return buf;
}

CheckResult relative_check(std::string name, double measured, double expected, double rel_tol) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.expected = expected;
  r.tolerance = rel_tol;
  r.passed = std::fabs(measured - expected) <= rel_tol * expected;
  r.detail = describe(measured, expected);
  return r;
}

}  // namespace

Table1Example table1_example() {
  Table1Example ex;
  ex.transmitted = "We need to spell out the facts";
  ex.decoded = "Ui Xeef tE kpeVl wut lhW'jaUtM";
  ex.corrected = "We need to spell out XXXXXXXXX";
  ex.matches.resize(ex.decoded.size());
  for (std::size_t i = 0; i < ex.decoded.size(); ++i) ex.matches[i] = ex.decoded[i] == ex.corrected[i];
  const SymbolVector decided = qpsk_modulate(encode_text(ex.decoded));
  ex.pilot = select_semantic_pilot(ex.decoded, ex.corrected, decided);
  return ex;
}

void print_table1(const Table1Example& ex, std::ostream& out) {
  auto row = [&out](const char* label, const std::string& cells) {
    out << label << " |";
    for (char c : cells) out << ' ' << (c == ' ' ? '_' : c);
    out << '\n';
  };
  row("Transmitted      ", ex.transmitted);
  row("Initially decoded", ex.decoded);
  row("Corrected        ", ex.corrected);
  std::string marks;
  for (bool m : ex.matches) marks.push_back(m ? 'v' : '-');
  row("Semantic pilot   ", marks);
  out << "\nmatched characters: " << ex.pilot.size() / kSymbolsPerChar << " of " << ex.decoded.size()
      << ", semantic pilot symbols N = " << ex.pilot.size() << " of K = " << ex.decoded.size() * kSymbolsPerChar
      << "\n('_' marks a space, 'v' a character whose symbols join the semantic pilot)\n";
}

CheckResult check_ls_variance(std::size_t trials, double sigma2, const PilotConfig& pilot_cfg, std::uint64_t seed,
                              double rel_tol) {
  const SymbolVector pilot = zadoff_chu(pilot_cfg);
  MeanAccumulator err;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const Complex h = draw_channel(kCheckKFactor, rng);
    const SymbolVector y = transmit(pilot, h, sigma2, rng);
    err.add(std::norm(ls_estimate(pilot, y) - h));
  }
  return relative_check("ls_variance", err.mean(), sigma2 / static_cast<double>(pilot.size()), rel_tol);
}

CheckResult check_refine_variance(std::size_t trials, double sigma2, const PilotConfig& pilot_cfg,
                                  std::size_t semantic_symbols, std::uint64_t seed, double rel_tol) {
  const SymbolVector pilot = zadoff_chu(pilot_cfg);
  MeanAccumulator err;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const Complex h = draw_channel(kCheckKFactor, rng);
    const SymbolVector text = random_qpsk(semantic_symbols, rng);
    const ReceivedFrame frame = transmit_frame(pilot, text, h, sigma2, rng);
    const Complex h_r = refine_phase(pilot, frame.pilot, SemanticPilot::all(text), frame.text);
    err.add(std::norm(h_r - h));
  }
  const double expected = sigma2 / static_cast<double>(pilot.size() + semantic_symbols);
  return relative_check("refine_variance", err.mean(), expected, rel_tol);
}

CheckResult check_gamma_identity(std::size_t trials, std::uint64_t seed, double abs_tol) {
  const SymbolVector pilot = zadoff_chu({});
  std::uniform_real_distribution<double> snr_db(-5.0, 20.0);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const Complex h = draw_channel(kCheckKFactor, rng);
    const double sigma2 = snr_to_sigma2(snr_db(rng));
    const SymbolVector text = random_qpsk(90, rng);
    const ReceivedFrame frame = transmit_frame(pilot, text, h, sigma2, rng);
    const Decisions d = qpsk_decide(zf_equalize(frame.text, ls_estimate(pilot, frame.pilot)));
    const Complex h_r = refine_phase(pilot, frame.pilot, SemanticPilot::all(d.symbols), frame.text);
    const double gamma = magnitude_scale(h_r, pilot, frame.pilot, d.symbols, frame.text);
    worst = std::max(worst, std::fabs(gamma - 1.0));
  }
  CheckResult r;
  r.name = "gamma_identity";
  r.measured = worst;
  r.expected = 0.0;
  r.tolerance = abs_tol;
  r.passed = worst <= abs_tol;
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |gamma - 1| = %.3g", worst);
  r.detail = buf;
  return r;
}

CheckResult check_closed_form_optimality(std::size_t trials, std::uint64_t seed, double eps) {
  const SymbolVector pilot = zadoff_chu({});
  std::uniform_real_distribution<double> snr_db(0.0, 15.0);
  std::bernoulli_distribution keep(0.7);
  std::size_t violations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const Complex h = draw_channel(kCheckKFactor, rng);
    const double sigma2 = snr_to_sigma2(snr_db(rng));
    const SymbolVector text = random_qpsk(90, rng);
    const ReceivedFrame frame = transmit_frame(pilot, text, h, sigma2, rng);
    const Decisions d = qpsk_decide(zf_equalize(frame.text, ls_estimate(pilot, frame.pilot)));

    SemanticPilot semantic;
    for (std::size_t i = 0; i < d.symbols.size(); ++i) {
      if (!keep(rng)) continue;
      semantic.indices.push_back(i);
      semantic.symbols.push_back(d.symbols[i]);
    }

    const Complex h_r = refine_phase(pilot, frame.pilot, semantic, frame.text);
    const double base = phase_objective(h_r, pilot, frame.pilot, semantic, frame.text);
    for (int k = 0; k < 8; ++k) {
      const Complex step = std::polar(eps, k * std::numbers::pi / 4.0);
      if (phase_objective(h_r + step, pilot, frame.pilot, semantic, frame.text) < base) ++violations;
    }

    const double gamma = magnitude_scale(h_r, pilot, frame.pilot, d.symbols, frame.text);
    const double g_base = scaling_objective(gamma, h_r, pilot, frame.pilot, d.symbols, frame.text);
    for (double step : {eps, -eps}) {
      if (scaling_objective(gamma + step, h_r, pilot, frame.pilot, d.symbols, frame.text) < g_base) ++violations;
    }
  }
  CheckResult r;
  r.name = "closed_form_optimality";
  r.measured = static_cast<double>(violations);
  r.expected = 0.0;
  r.tolerance = 0.0;
  r.passed = violations == 0;
  r.detail = std::to_string(violations) + " objective decreases over " + std::to_string(trials * 10) + " perturbations";
  return r;
}

std::vector<CheckResult> run_verification(const VerifyOptions& o) {
  return {
      check_ls_variance(o.variance_trials, o.sigma2, {}, o.seed),
      check_refine_variance(o.variance_trials, o.sigma2, {}, o.semantic_symbols, derive_seed(o.seed, 1)),
      check_gamma_identity(o.identity_trials, derive_seed(o.seed, 2)),
      check_closed_form_optimality(o.identity_trials, derive_seed(o.seed, 3)),
  };
}

}  // namespace sempilot
