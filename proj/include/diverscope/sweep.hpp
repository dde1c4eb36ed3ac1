/* Copyright 2026 The Diverscope Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef DIVERSCOPE_SWEEP_HPP_
#define DIVERSCOPE_SWEEP_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diverscope/dataset.hpp"

namespace diverscope {

/// Parameter grid and inputs of a sweep. Loaded from JSON with the keys
/// window_sizes, thresholds, batch_tags, real_dir, synth_dirs (tag -> dir),
/// seed, pairs, and optionally real_probs, synth_probs (tag -> file),
/// is_splits and resize ([w, h]).
struct SweepSpec {
  std::vector<int> window_sizes = {4, 8, 16};
  std::vector<double> thresholds = {0, 5, 10, 20, 50, 100};
  std::vector<std::string> batch_tags = {"BS20", "BS67", "BS134"};
  std::filesystem::path real_dir;
  std::map<std::string, std::filesystem::path> synth_dirs;
  std::uint64_t seed = 0;
  std::size_t pairs = 670;
  std::optional<std::filesystem::path> real_probs;
  std::map<std::string, std::filesystem::path> synth_probs;
  int is_splits = 10;
  std::optional<ImageSize> resize;
};

/// Parses a sweep config. Unknown keys are rejected by name; relative paths
/// are resolved against `base_dir`.
SweepSpec ParseSweepConfig(std::string_view json_text,
                           const std::filesystem::path& base_dir = {});
SweepSpec LoadSweepConfig(const std::filesystem::path& path);

/// One line of the report. Baseline rows (un-normalized inputs) have no
/// window or threshold. IS columns are present only when probability files
/// were configured.
struct ReportRow {
  std::optional<int> window;
  std::optional<double> threshold;
  std::string batch_tag;
  double msssim_real = 0.0;
  double msssim_synth = 0.0;
  double msssim_delta = 0.0;
  bool msssim_collapsed = false;
  double fid = 0.0;
  std::optional<double> is_real;
  std::optional<double> is_synth;
  std::optional<double> is_delta;
  std::optional<bool> is_collapsed;
};

inline constexpr std::string_view kReportCsvHeader =
    "window,threshold,batch_tag,msssim_real,msssim_synth,msssim_delta,"
    "msssim_collapsed,fid,is_real,is_synth,is_delta,is_collapsed";

inline constexpr std::string_view kPlotCsvHeader =
    "metric,batch_tag,window,threshold,value";

/// Checks every referenced path and loads every input before any metric is
/// computed, then evaluates baseline rows followed by one row per
/// (window, threshold, tag) in config order. `threads` <= 0 uses
/// DefaultThreadCount(); the rows do not depend on it.
std::vector<ReportRow> RunSweep(const SweepSpec& spec, int threads = 0);

std::string FormatReportCsv(const std::vector<ReportRow>& rows);
std::string FormatPlotCsv(const std::vector<ReportRow>& rows);
std::string FormatReportJson(const SweepSpec& spec,
                             const std::vector<ReportRow>& rows);

/// RunSweep plus report.csv, report.json and plotdata.csv in `out_dir`.
std::vector<ReportRow> RunSweepToDirectory(const SweepSpec& spec,
                                           const std::filesystem::path& out_dir,
                                           int threads = 0);

}  // namespace diverscope

#endif  // DIVERSCOPE_SWEEP_HPP_
