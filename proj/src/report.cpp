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

#include "sempilot/report.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

#include "sempilot/error.hpp"

namespace sempilot {

namespace {

using Column = std::function<std::string(const SchemeSummary&)>;

std::string format_snr(double snr) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", snr);
  return buf;
}

std::string optional_mean(const SchemeSummary& s, const MeanAccumulator& acc) {
  if (!s.has_selection || acc.count() == 0) return "";
  return format_number(acc.mean());
}

// One row per scheme, one column per SNR point.
void write_wide(const ExperimentResult& result, std::ostream& out, const Column& cell) {
  out << "scheme";
  for (double snr : result.config.snr_db) out << ",snr_" << format_snr(snr);
  out << '\n';
  for (SchemeId id : result.config.schemes) {
    out << scheme_name(id);
    for (double snr : result.config.snr_db) {
      const SchemeSummary* s = result.find(id, snr);
      out << ',' << (s ? cell(*s) : std::string());
    }
    out << '\n';
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

void write_summary_csv(const ExperimentResult& result, std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& s : result.summaries) {
    out << scheme_name(s.scheme) << ',' << format_snr(s.snr_db) << ',' << s.trials << ','
        << format_number(s.nmse.mean()) << ',' << format_number(s.nmse.standard_error()) << ','
        << format_number(s.phase_error.mean()) << ',' << format_number(s.phase_error.standard_error()) << ','
        << format_number(s.ber()) << ',' << optional_mean(s, s.reliability) << ','
        << optional_mean(s, s.detection) << ',' << optional_mean(s, s.selection) << ",rel=" << s.reliability_undefined
        << ";det=" << s.detection_undefined << ',' << s.gamma_nonpositive << '\n';
  }
}

void write_nmse_csv(const ExperimentResult& result, std::ostream& out) {
  write_wide(result, out, [](const SchemeSummary& s) { return format_number(s.nmse.mean()); });
}

void write_phase_error_csv(const ExperimentResult& result, std::ostream& out) {
  write_wide(result, out, [](const SchemeSummary& s) { return format_number(s.phase_error.mean()); });
}

void write_ber_csv(const ExperimentResult& result, std::ostream& out) {
  write_wide(result, out, [](const SchemeSummary& s) { return format_number(s.ber()); });
}

void write_selection_csv(const ExperimentResult& result, std::ostream& out) {
  out << "scheme,metric";
  for (double snr : result.config.snr_db) out << ",snr_" << format_snr(snr);
  out << '\n';
  const std::pair<const char*, const MeanAccumulator SchemeSummary::*> metrics[] = {
      {"reliability", &SchemeSummary::reliability},
      {"detection_rate", &SchemeSummary::detection},
      {"selection_ratio", &SchemeSummary::selection},
  };
  for (SchemeId id : result.config.schemes) {
    const SchemeSummary* probe = result.find(id, result.config.snr_db.front());
    if (probe == nullptr || !probe->has_selection) continue;
    for (const auto& [name, member] : metrics) {
      out << scheme_name(id) << ',' << name;
      for (double snr : result.config.snr_db) {
        const SchemeSummary* s = result.find(id, snr);
        out << ',' << (s ? optional_mean(*s, s->*member) : std::string());
      }
      out << '\n';
    }
  }
}

void write_markdown_summary(const ExperimentResult& result, std::ostream& out) {
  const auto& cfg = result.config;
  out << "# Channel estimation benchmark\n\n";
  out << "- trials per SNR: " << cfg.trials << "\n";
  out << "- master seed: " << cfg.master_seed << "\n";
  out << "- text length: " << cfg.text_length << " characters\n";
  out << "- pilot: Zadoff-Chu, length " << cfg.pilot.length << ", root " << cfg.pilot.root << "\n";
  out << "- Rician K-factor: " << format_snr(cfg.k_factor_db) << " dB\n";
  out << "- corrector: " << corrector_kind_name(cfg.corrector.kind) << "\n";
  out << "- corpus substitutions: " << result.corpus_substitutions << "\n\n";

  auto table = [&](const char* title, const Column& cell) {
    out << "## " << title << "\n\n| scheme |";
    for (double snr : cfg.snr_db) out << ' ' << format_snr(snr) << " dB |";
    out << "\n|---|";
    for (std::size_t i = 0; i < cfg.snr_db.size(); ++i) out << "---|";
    out << '\n';
    for (SchemeId id : cfg.schemes) {
      out << "| " << scheme_name(id) << " |";
      for (double snr : cfg.snr_db) {
        const SchemeSummary* s = result.find(id, snr);
        out << ' ' << (s ? cell(*s) : std::string()) << " |";
      }
      out << '\n';
    }
    out << '\n';
  };
  auto short_number = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return std::string(buf);
  };
  auto percent = [](const SchemeSummary& s, const MeanAccumulator& acc) {
    if (!s.has_selection || acc.count() == 0) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * acc.mean());
    return std::string(buf);
  };

  table("NMSE", [&](const SchemeSummary& s) { return short_number(s.nmse.mean()); });
  table("Phase error (rad)", [&](const SchemeSummary& s) { return short_number(s.phase_error.mean()); });
  table("BER", [&](const SchemeSummary& s) { return short_number(s.ber()); });
  table("Reliability", [&](const SchemeSummary& s) { return percent(s, s.reliability); });
  table("Detection rate", [&](const SchemeSummary& s) { return percent(s, s.detection); });
  table("Selection ratio", [&](const SchemeSummary& s) { return percent(s, s.selection); });
}

std::vector<std::filesystem::path> write_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::pair<const char*, void (*)(const ExperimentResult&, std::ostream&)> files[] = {
      {"summary.csv", &write_summary_csv},   {"nmse.csv", &write_nmse_csv},
      {"phase_error.csv", &write_phase_error_csv}, {"ber.csv", &write_ber_csv},
      {"selection.csv", &write_selection_csv}, {"summary.md", &write_markdown_summary},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, writer] : files) {
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    writer(result, out);
    written.push_back(path);
  }
  return written;
}

}  // namespace sempilot
