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

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "sempilot/harness.hpp"

namespace sempilot {

/// Column order of the per-(scheme, SNR) summary table.
inline constexpr const char* kSummaryCsvHeader =
    "scheme,snr_db,trials,nmse_mean,nmse_se,phase_err_mean,phase_err_se,ber,reliability_mean,detection_mean,"
    "selection_mean,undefined_counts,gamma_nonpositive_count";

void write_summary_csv(const ExperimentResult& result, std::ostream& out);

/// Wide tables, one per metric family: rows are schemes (or selection
/// metrics), columns are SNR points.
void write_nmse_csv(const ExperimentResult& result, std::ostream& out);
void write_phase_error_csv(const ExperimentResult& result, std::ostream& out);
void write_ber_csv(const ExperimentResult& result, std::ostream& out);
void write_selection_csv(const ExperimentResult& result, std::ostream& out);

void write_markdown_summary(const ExperimentResult& result, std::ostream& out);

/// Writes summary.csv, nmse.csv, phase_error.csv, ber.csv, selection.csv and
/// summary.md into `dir`. Returns the files written.
std::vector<std::filesystem::path> write_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

/// Fixed-format number rendering shared by every output file.
std::string format_number(double v);

}  // namespace sempilot
