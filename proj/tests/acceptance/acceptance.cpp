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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "sempilot/channel.hpp"
#include "sempilot/error.hpp"
#include "sempilot/estimator.hpp"
#include "sempilot/harness.hpp"
#include "sempilot/llmclient.hpp"
#include "sempilot/modem.hpp"
#include "sempilot/pilot.hpp"
#include "sempilot/report.hpp"
#include "sempilot/semantic_pilot.hpp"
#include "sempilot/verify.hpp"

using namespace sempilot;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0 && secs > budget_s) {
    o.passed = false;
    o.detail += " [over time budget]";
  }
  if (!o.passed) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2fs) %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

SymbolVector random_qpsk(std::size_t n, Rng& rng) {
  BitVector bits(2 * n);
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng);
  return qpsk_modulate(bits);
}

double ls_cost(Complex h, const SymbolVector& x, const SymbolVector& y) {
  double c = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) c += std::norm(y[i] - h * x[i]);
  return c;
}

// Minimal chat-completions endpoint on loopback.
class StubServer {
 public:
  using Handler = std::function<void(int, httplib::Response&)>;
  explicit StubServer(Handler h) : handler_(std::move(h)) {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request&, httplib::Response& res) { handler_(count_.fetch_add(1), res); });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions"; }
  int requests() const { return count_.load(); }

 private:
  Handler handler_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> count_{0};
};

std::string chat_reply(const std::string& content) {
  return nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}}.dump();
}

Outcome noiseless_exactness() {
  ExperimentConfig cfg;
  cfg.snr_db = {std::numeric_limits<double>::infinity()};
  cfg.trials = 200;
  cfg.corrector.kind = CorrectorKind::Oracle;
  cfg.workers = 1;
  const ExperimentResult res = run_experiment(cfg, true);
  double worst = 0.0;
  std::size_t errors = 0;
  for (const auto& rec : res.records) {
    for (const auto& st : rec.schemes) {
      worst = std::max(worst, std::abs(st.estimate.final_estimate() - rec.h) / std::abs(rec.h));
      errors += st.bit_errors;
    }
  }
  return {worst < 1e-10 && errors == 0, fmt("max rel err %.3e, bit errors %.0f", worst, double(errors))};
}

Outcome ls_variance() {
  const double sigma2 = 0.1;
  const SymbolVector xp = zadoff_chu({16, 1});
  Rng rng(101);
  const int trials = 100000;
  double acc = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Complex h = draw_channel(10.0, rng);
    acc += std::norm(ls_estimate(xp, transmit(xp, h, sigma2, rng)) - h);
  }
  const double measured = acc / trials, expected = sigma2 / 16.0;
  const double rel = std::fabs(measured / expected - 1.0);
  return {rel < 0.02, fmt("measured %.6e, expected %.6e, rel err %.4f", measured, expected, rel)};
}

Outcome refine_variance() {
  const double sigma2 = 0.1;
  const SymbolVector xp = zadoff_chu({16, 1});
  Rng rng(102);
  const int trials = 100000;
  double acc = 0.0;
  for (int t = 0; t < trials; ++t) {
    const SymbolVector text = random_qpsk(48, rng);
    const Complex h = draw_channel(10.0, rng);
    const ReceivedFrame rx = transmit_frame(xp, text, h, sigma2, rng);
    acc += std::norm(refine_phase(xp, rx.pilot, SemanticPilot::all(text), rx.text) - h);
  }
  const double measured = acc / trials, expected = sigma2 / 64.0;
  const double rel = std::fabs(measured / expected - 1.0);
  return {rel < 0.02, fmt("measured %.6e, expected %.6e, rel err %.4f", measured, expected, rel)};
}

Outcome gamma_identity() {
  const SymbolVector xp = zadoff_chu({16, 1});
  Rng rng(103);
  std::uniform_real_distribution<double> snr(-5.0, 20.0);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const SymbolVector text = random_qpsk(90, rng);
    const Complex h = draw_channel(10.0, rng);
    const ReceivedFrame rx = transmit_frame(xp, text, h, snr_to_sigma2(snr(rng)), rng);
    const Decisions d = qpsk_decide(zf_equalize(rx.text, ls_estimate(xp, rx.pilot)));
    const Complex h_r = refine_phase(xp, rx.pilot, SemanticPilot::all(d.symbols), rx.text);
    worst = std::max(worst, std::fabs(magnitude_scale(h_r, xp, rx.pilot, d.symbols, rx.text) - 1.0));
  }
  return {worst < 1e-12, fmt("max |gamma - 1| = %.3e", worst)};
}

Outcome closed_form_optimality() {
  const SymbolVector xp = zadoff_chu({16, 1});
  Rng rng(104);
  std::bernoulli_distribution keep(0.7);
  const double eps = 1e-4;
  std::size_t violations = 0, probes = 0;
  for (int t = 0; t < 1000; ++t) {
    const SymbolVector text = random_qpsk(90, rng);
    const Complex h = draw_channel(10.0, rng);
    const ReceivedFrame rx = transmit_frame(xp, text, h, 0.3, rng);
    const Decisions d = qpsk_decide(zf_equalize(rx.text, ls_estimate(xp, rx.pilot)));
    SemanticPilot sp;
    SymbolVector xr = xp, yr = rx.pilot;
    for (std::size_t i = 0; i < d.symbols.size(); ++i) {
      if (!keep(rng)) continue;
      sp.indices.push_back(i);
      sp.symbols.push_back(d.symbols[i]);
      xr.push_back(d.symbols[i]);
      yr.push_back(rx.text[i]);
    }
    const Complex h_r = refine_phase(xp, rx.pilot, sp, rx.text);
    const double base = ls_cost(h_r, xr, yr);
    for (int k = 0; k < 8; ++k) {
      ++probes;
      violations += ls_cost(h_r + std::polar(eps, k * std::numbers::pi / 4.0), xr, yr) < base;
    }
    SymbolVector xs = xp, ys = rx.pilot;
    xs.insert(xs.end(), d.symbols.begin(), d.symbols.end());
    ys.insert(ys.end(), rx.text.begin(), rx.text.end());
    const double g = magnitude_scale(h_r, xp, rx.pilot, d.symbols, rx.text);
    const double gbase = ls_cost(g * h_r, xs, ys);
    for (double dg : {eps, -eps}) {
      ++probes;
      violations += ls_cost((g + dg) * h_r, xs, ys) < gbase;
    }
  }
  return {violations == 0, fmt("%.0f violations in %.0f probes", double(violations), double(probes))};
}

Outcome table1_golden() {
  // Checkmark row of the worked example: '+' where decoded equals corrected.
  const std::string expected = "--+-++-++-+-++-++-+++---------";
  const Table1Example ex = table1_example();
  const SemanticPilot sp = select_semantic_pilot(ex.decoded, ex.corrected, qpsk_modulate(encode_text(ex.decoded)));
  std::string got(ex.decoded.size(), '-');
  for (std::size_t idx : sp.indices) got[idx / kSymbolsPerChar] = '+';
  std::string shipped(ex.matches.size(), '-');
  for (std::size_t i = 0; i < ex.matches.size(); ++i) shipped[i] = ex.matches[i] ? '+' : '-';
  const bool ok = got == expected && shipped == expected && sp.size() == 39 && ex.transmitted.size() == 30;
  return {ok, "mask " + got + ", N = " + std::to_string(sp.size())};
}

Outcome oracle_identities() {
  ExperimentConfig cfg;
  cfg.snr_db = {0.0, 7.0, 10.0};
  cfg.trials = 10000;
  cfg.corrector.kind = CorrectorKind::Oracle;
  cfg.schemes = {SchemeId::Proposed};
  const ExperimentResult res = run_experiment(cfg, true);
  std::size_t defined_rel = 0, defined_det = 0, bad = 0;
  for (const auto& rec : res.records) {
    const auto& sel = rec.find(SchemeId::Proposed)->selection;
    if (sel->reliability) {
      ++defined_rel;
      bad += *sel->reliability != 1.0;
    }
    if (sel->detection_rate) {
      ++defined_det;
      bad += *sel->detection_rate != 1.0;
    }
  }
  return {bad == 0 && defined_rel > 0 && defined_det > 0,
          fmt("%.0f trials, %.0f/%.0f defined, %.0f not equal to 1", double(res.records.size()), double(defined_rel),
              double(defined_det), double(bad))};
}

const ExperimentResult& stochastic_run() {
  static const ExperimentResult res = [] {
    ExperimentConfig cfg;
    cfg.snr_db = {7.0, 8.0, 9.0, 10.0};
    cfg.trials = 20000;
    cfg.k_factor_db = 10.0;
    cfg.text_length = 30;
    cfg.master_seed = 20260101;
    cfg.corrector.kind = CorrectorKind::Stochastic;
    return run_experiment(cfg, true);
  }();
  return res;
}

Outcome ordering() {
  const ExperimentResult& res = stochastic_run();
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t s = 0; s < res.config.snr_db.size(); ++s) {
    const double snr = res.config.snr_db[s];
    const SchemeSummary& pilot = *res.find(SchemeId::Pilot, snr);
    const SchemeSummary& decoded = *res.find(SchemeId::Decoded, snr);
    const SchemeSummary& proposed = *res.find(SchemeId::Proposed, snr);
    // Paired standard error of the per-trial BER difference Decoded - Pilot.
    MeanAccumulator diff;
    for (const auto& rec : res.records) {
      if (rec.snr_index != s) continue;
      diff.add(rec.find(SchemeId::Decoded)->ber() - rec.find(SchemeId::Pilot)->ber());
    }
    const bool c1 = proposed.nmse.mean() < pilot.nmse.mean();
    const bool c2 = proposed.phase_error.mean() < pilot.phase_error.mean();
    const bool c3 = proposed.ber() <= decoded.ber();
    const bool c4 = decoded.ber() <= pilot.ber() + diff.standard_error();
    ok = ok && c1 && c2 && c3 && c4;
    detail << "| " << snr << " dB: nmse " << (c1 ? "ok" : "X") << " phase " << (c2 ? "ok" : "X") << " ber "
           << proposed.ber() << "<=" << decoded.ber() << "<=" << pilot.ber() << "+" << diff.standard_error()
           << (c3 && c4 ? " ok " : " X ");
  }
  return {ok, detail.str()};
}

Outcome selection_trends() {
  const ExperimentResult& res = stochastic_run();
  double prev_rel = -1.0, prev_det = -1.0, prev_sel = -1.0;
  bool ok = true;
  std::ostringstream detail;
  for (double snr : res.config.snr_db) {
    const SchemeSummary& p = *res.find(SchemeId::Proposed, snr);
    const double rel = p.reliability.mean(), det = p.detection.mean(), sel = p.selection.mean();
    ok = ok && rel >= prev_rel && det >= prev_det && sel >= prev_sel;
    prev_rel = rel;
    prev_det = det;
    prev_sel = sel;
    detail << "| " << snr << " dB: " << rel << " " << det << " " << sel << ' ';
  }
  return {ok, detail.str()};
}

Outcome determinism() {
  ExperimentConfig a;
  a.trials = 2000;
  a.master_seed = 77;
  a.workers = 1;
  ExperimentConfig b = a;
  b.workers = 3;
  const auto dir = std::filesystem::temp_directory_path() / "sempilot_acceptance_det";
  std::filesystem::remove_all(dir);
  write_outputs(run_experiment(a), dir / "one");
  write_outputs(run_experiment(b), dir / "three");
  bool same = true;
  for (const char* name : {"summary.csv", "nmse.csv", "phase_error.csv", "ber.csv", "selection.csv"}) {
    std::ifstream f1(dir / "one" / name, std::ios::binary), f2(dir / "three" / name, std::ios::binary);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    same = same && !s1.str().empty() && s1.str() == s2.str();
  }
  std::filesystem::remove_all(dir);
  return {same, same ? "CSVs byte-identical for 1 and 3 workers" : "CSV mismatch"};
}

Outcome remote_robustness() {
  const std::string decoded = "Ui Xeef tE kpeVl wut lhW'jaUtM";
  const auto cache = std::filesystem::temp_directory_path() / "sempilot_acceptance_cache";
  std::filesystem::remove_all(cache);
  std::ostringstream detail;
  bool ok = true;

  {
    StubServer server([](int, httplib::Response& res) {
      res.set_content(chat_reply("We need to spell out XXXXXXXXX"), "application/json");
    });
    RemoteConfig cfg;
    cfg.endpoint = server.endpoint();
    cfg.cache_dir = cache;
    cfg.retry_backoff_ms = 0;
    const std::string first = RemoteCorrector(cfg).correct(decoded, {}).corrected;
    const RemoteCorrector replay(cfg);
    const std::string second = replay.correct(decoded, {}).corrected;
    const std::string third = replay.correct(decoded, {}).corrected;
    const bool c = replay.network_calls() == 0 && server.requests() == 1 && first == second && second == third;
    ok = ok && c;
    detail << "cache replay " << (c ? "ok" : "X");
  }
  {
    StubServer server([](int, httplib::Response& res) {
      res.set_content(chat_reply("We need to spell out"), "application/json");
    });
    RemoteConfig cfg;
    cfg.endpoint = server.endpoint();
    cfg.retry_backoff_ms = 0;
    const CorrectionResult r = RemoteCorrector(cfg).correct(decoded, {});
    const bool c = r.length_repaired && r.corrected.size() == decoded.size();
    ok = ok && c;
    detail << ", length repair " << (c ? "ok" : "X");
  }
  {
    StubServer server([](int, httplib::Response& res) { res.status = 500; });
    RemoteConfig rcfg;
    rcfg.endpoint = server.endpoint();
    rcfg.max_retries = 2;
    rcfg.retry_backoff_ms = 0;
    ExperimentConfig cfg;
    cfg.snr_db = {9.0};
    cfg.trials = 4;
    cfg.workers = 1;
    const auto res = Simulator(cfg, std::make_shared<RemoteCorrector>(rcfg)).run(true);
    bool c = server.requests() == 12;
    for (const auto& rec : res.records) c = c && rec.corrector_fallback && rec.corrected == rec.decoded;
    ok = ok && c;
    detail << ", fallback " << (c ? "ok" : "X");
  }
  std::filesystem::remove_all(cache);
  return {ok, detail.str()};
}

}  // namespace

int main() {
  report(1, "noiseless exactness", noiseless_exactness, 1.0);
  report(2, "LS variance sigma2/16", ls_variance, 30.0);
  report(3, "refinement variance sigma2/64", refine_variance, 0.0);
  report(4, "gamma identity", gamma_identity, 0.0);
  report(5, "closed-form optimality", closed_form_optimality, 0.0);
  report(6, "worked example selection mask", table1_golden, 1.0);
  report(7, "oracle reliability and detection", oracle_identities, 0.0);
  report(8, "paired ordering NMSE, phase, BER", ordering, 600.0);
  report(9, "selection metrics non-decreasing in SNR", selection_trends, 0.0);
  report(10, "determinism across worker counts", determinism, 0.0);
  report(11, "remote corrector robustness (offline)", remote_robustness, 0.0);
  std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
