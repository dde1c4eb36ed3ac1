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

#include "diverscope/sweep.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "diverscope/aiin.hpp"
#include "diverscope/collapse.hpp"
#include "diverscope/error.hpp"
#include "diverscope/fid.hpp"
#include "diverscope/inception.hpp"
#include "diverscope/msssim.hpp"
#include "diverscope/parallel.hpp"

namespace diverscope {

namespace {

using Json = nlohmann::json;

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> keys = {
      "window_sizes", "thresholds", "batch_tags", "real_dir",
      "synth_dirs",   "seed",       "pairs",      "real_probs",
      "synth_probs",  "is_splits",  "resize"};
  return keys;
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path path(value);
  if (path.is_relative() && !base.empty()) path = base / path;
  return path;
}

template <typename T>
T Get(const Json& config, const char* key) {
  try {
    return config.at(key).get<T>();
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kFormat, std::string("config key \"") + key +
                                 "\" has the wrong type: " + e.what());
  }
}

std::map<std::string, std::filesystem::path> GetPathMap(
    const Json& config, const char* key, const std::filesystem::path& base) {
  std::map<std::string, std::filesystem::path> out;
  for (const auto& [tag, value] :
       Get<std::map<std::string, std::string>>(config, key)) {
    out[tag] = Resolve(base, value);
  }
  return out;
}

// One grid cell: the baseline (no normalization) or a single config.
struct Cell {
  std::optional<AiinConfig> config;
};

std::string FormatNumber(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10f", value);
  return buffer;
}

std::string FormatThreshold(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

void WriteText(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) Fail(ErrorCode::kIo, "write failed: " + path.string());
}

void ValidateSpec(const SweepSpec& spec) {
  if (spec.window_sizes.empty() || spec.thresholds.empty() ||
      spec.batch_tags.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "window_sizes, thresholds and batch_tags must be non-empty");
  }
  for (int w : spec.window_sizes) {
    if (w < 1) Fail(ErrorCode::kInvalidArgument, "window size must be >= 1");
  }
  for (double t : spec.thresholds) {
    if (!std::isfinite(t) || t < 0) {
      Fail(ErrorCode::kInvalidArgument, "thresholds must be finite and >= 0");
    }
  }
  if (spec.pairs < 1) Fail(ErrorCode::kInvalidArgument, "pairs must be >= 1");
  if (spec.real_dir.empty()) Fail(ErrorCode::kInvalidArgument, "real_dir is required");

  std::vector<std::string> missing;
  auto need_dir = [&](const std::filesystem::path& p) {
    if (!std::filesystem::is_directory(p)) missing.push_back(p.string());
  };
  auto need_file = [&](const std::filesystem::path& p) {
    if (!std::filesystem::is_regular_file(p)) missing.push_back(p.string());
  };
  need_dir(spec.real_dir);
  for (const auto& tag : spec.batch_tags) {
    const auto it = spec.synth_dirs.find(tag);
    if (it == spec.synth_dirs.end()) {
      Fail(ErrorCode::kInvalidArgument, "synth_dirs has no entry for tag " + tag);
    }
    need_dir(it->second);
  }
  const bool with_is = spec.real_probs.has_value() || !spec.synth_probs.empty();
  if (with_is) {
    if (!spec.real_probs) {
      Fail(ErrorCode::kInvalidArgument, "synth_probs given without real_probs");
    }
    need_file(*spec.real_probs);
    for (const auto& tag : spec.batch_tags) {
      const auto it = spec.synth_probs.find(tag);
      if (it == spec.synth_probs.end()) {
        Fail(ErrorCode::kInvalidArgument, "synth_probs has no entry for tag " + tag);
      }
      need_file(it->second);
    }
  }
  if (!missing.empty()) {
    std::string message = "missing sweep inputs:";
    for (const auto& m : missing) message += " " + m;
    Fail(ErrorCode::kIo, message);
  }
}

void CheckDatasetFits(const Dataset& dataset, const SweepSpec& spec) {
  if (dataset.size() < 2) {
    Fail(ErrorCode::kInvalidArgument,
         dataset.label + ": MS-SSIM sampling needs at least 2 images");
  }
  const GrayImage& first = dataset.image(0);
  for (int w : spec.window_sizes) {
    if (first.width() < w || first.height() < w) {
      Fail(ErrorCode::kInvalidArgument,
           dataset.label + ": images are smaller than a " + std::to_string(w) +
               "x" + std::to_string(w) + " window grid");
    }
  }
  const MsSsimParams params;
  if (first.width() < params.window_side || first.height() < params.window_side) {
    Fail(ErrorCode::kInvalidArgument,
         dataset.label + ": images are smaller than the MS-SSIM window");
  }
}

}  // namespace

SweepSpec ParseSweepConfig(std::string_view json_text,
                           const std::filesystem::path& base_dir) {
  Json config;
  try {
    config = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kFormat, std::string("invalid sweep config JSON: ") + e.what());
  }
  if (!config.is_object()) {
    Fail(ErrorCode::kFormat, "sweep config must be a JSON object");
  }
  for (const auto& item : config.items()) {
    if (KnownKeys().count(item.key()) == 0) {
      Fail(ErrorCode::kFormat, "unknown sweep config key \"" + item.key() + "\"");
    }
  }
  SweepSpec spec;
  if (config.contains("window_sizes")) {
    spec.window_sizes = Get<std::vector<int>>(config, "window_sizes");
  }
  if (config.contains("thresholds")) {
    spec.thresholds = Get<std::vector<double>>(config, "thresholds");
  }
  if (config.contains("batch_tags")) {
    spec.batch_tags = Get<std::vector<std::string>>(config, "batch_tags");
  }
  if (!config.contains("real_dir")) {
    Fail(ErrorCode::kFormat, "sweep config is missing \"real_dir\"");
  }
  if (!config.contains("synth_dirs")) {
    Fail(ErrorCode::kFormat, "sweep config is missing \"synth_dirs\"");
  }
  spec.real_dir = Resolve(base_dir, Get<std::string>(config, "real_dir"));
  spec.synth_dirs = GetPathMap(config, "synth_dirs", base_dir);
  if (config.contains("seed")) spec.seed = Get<std::uint64_t>(config, "seed");
  if (config.contains("pairs")) spec.pairs = Get<std::size_t>(config, "pairs");
  if (config.contains("real_probs")) {
    spec.real_probs = Resolve(base_dir, Get<std::string>(config, "real_probs"));
  }
  if (config.contains("synth_probs")) {
    spec.synth_probs = GetPathMap(config, "synth_probs", base_dir);
  }
  if (config.contains("is_splits")) spec.is_splits = Get<int>(config, "is_splits");
  if (config.contains("resize")) {
    const auto dims = Get<std::vector<int>>(config, "resize");
    if (dims.size() != 2) Fail(ErrorCode::kFormat, "\"resize\" must be [width, height]");
    spec.resize = ImageSize{dims[0], dims[1]};
  }
  return spec;
}

SweepSpec LoadSweepConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open sweep config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseSweepConfig(text.str(), path.parent_path());
}

std::vector<ReportRow> RunSweep(const SweepSpec& spec, int threads) {
  ValidateSpec(spec);

  // Load everything up front so bad inputs abort before any metric runs.
  const Dataset real = LoadDataset(spec.real_dir, spec.resize);
  CheckDatasetFits(real, spec);
  std::vector<Dataset> synth;
  for (const auto& tag : spec.batch_tags) {
    synth.push_back(LoadDataset(spec.synth_dirs.at(tag), spec.resize));
    CheckDatasetFits(synth.back(), spec);
    if (synth.back().image(0).width() != real.image(0).width() ||
        synth.back().image(0).height() != real.image(0).height()) {
      Fail(ErrorCode::kInvalidArgument,
           "synthetic set " + tag + " differs in image size from the real set");
    }
  }
  std::optional<IsResult> real_is;
  std::vector<IsResult> synth_is;
  if (spec.real_probs) {
    real_is = InceptionScore(LoadProbs(*spec.real_probs), spec.is_splits);
    for (const auto& tag : spec.batch_tags) {
      synth_is.push_back(
          InceptionScore(LoadProbs(spec.synth_probs.at(tag)), spec.is_splits));
    }
  }

  std::vector<Cell> cells = {Cell{}};
  for (int w : spec.window_sizes) {
    for (double t : spec.thresholds) {
      cells.push_back(Cell{AiinConfig{w, t, Stitch::kBilinear}});
    }
  }

  const std::size_t tags = spec.batch_tags.size();
  std::vector<ReportRow> rows(cells.size() * tags);
  const PairSamplingSpec sampling{spec.pairs, spec.seed};
  ParallelFor(cells.size(), threads, [&](std::size_t c) {
    const Cell& cell = cells[c];
    auto prepare = [&](const Dataset& ds) {
      return cell.config ? NormalizeDatasetInMemory(ds, *cell.config, 1) : ds;
    };
    const Dataset real_cell = prepare(real);
    const double real_msssim =
        DatasetMsSsimScore(real_cell, sampling, {}, 1).mean;
    const FeatureMatrix real_features = PixelFeatures(real_cell);
    for (std::size_t t = 0; t < tags; ++t) {
      const Dataset synth_cell = prepare(synth[t]);
      const double synth_msssim =
          DatasetMsSsimScore(synth_cell, sampling, {}, 1).mean;
      const CollapseReport intra = DetectIntraCollapse(real_msssim, synth_msssim);
      ReportRow& row = rows[c * tags + t];
      if (cell.config) {
        row.window = cell.config->grid_n;
        row.threshold = cell.config->contrast_threshold;
      }
      row.batch_tag = spec.batch_tags[t];
      row.msssim_real = intra.real_score;
      row.msssim_synth = intra.synthetic_score;
      row.msssim_delta = intra.delta;
      row.msssim_collapsed = intra.collapsed;
      row.fid = FidScore(real_features, PixelFeatures(synth_cell));
      if (real_is) {
        const CollapseReport inter =
            DetectInterCollapse(real_is->mean, synth_is[t].mean);
        row.is_real = inter.real_score;
        row.is_synth = inter.synthetic_score;
        row.is_delta = inter.delta;
        row.is_collapsed = inter.collapsed;
      }
    }
  });
  return rows;
}

std::string FormatReportCsv(const std::vector<ReportRow>& rows) {
  std::string csv(kReportCsvHeader);
  csv += "\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatNumber(*v) : std::string();
  };
  for (const auto& row : rows) {
    csv += row.window ? std::to_string(*row.window) : std::string("none");
    csv += ",";
    csv += row.threshold ? FormatThreshold(*row.threshold) : std::string("none");
    csv += "," + row.batch_tag;
    csv += "," + FormatNumber(row.msssim_real);
    csv += "," + FormatNumber(row.msssim_synth);
    csv += "," + FormatNumber(row.msssim_delta);
    csv += row.msssim_collapsed ? ",true" : ",false";
    csv += "," + FormatNumber(row.fid);
    csv += "," + opt(row.is_real);
    csv += "," + opt(row.is_synth);
    csv += "," + opt(row.is_delta);
    csv += ",";
    if (row.is_collapsed) csv += *row.is_collapsed ? "true" : "false";
    csv += "\n";
  }
  return csv;
}

std::string FormatPlotCsv(const std::vector<ReportRow>& rows) {
  std::string csv(kPlotCsvHeader);
  csv += "\n";
  auto emit = [&](const char* metric, const ReportRow& row, double value) {
    csv += std::string(metric) + "," + row.batch_tag + "," +
           std::to_string(*row.window) + "," + FormatThreshold(*row.threshold) +
           "," + FormatNumber(value) + "\n";
  };
  for (const auto& row : rows) {
    if (!row.window) continue;
    emit("msssim_real", row, row.msssim_real);
    emit("msssim_synth", row, row.msssim_synth);
    emit("msssim_delta", row, row.msssim_delta);
    emit("fid", row, row.fid);
    if (row.is_synth) emit("is_synth", row, *row.is_synth);
  }
  return csv;
}

std::string FormatReportJson(const SweepSpec& spec,
                             const std::vector<ReportRow>& rows) {
  Json out;
  out["window_sizes"] = spec.window_sizes;
  out["thresholds"] = spec.thresholds;
  out["batch_tags"] = spec.batch_tags;
  out["seed"] = spec.seed;
  out["pairs"] = spec.pairs;
  out["rows"] = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["window"] = row.window ? Json(*row.window) : Json(nullptr);
    r["threshold"] = row.threshold ? Json(*row.threshold) : Json(nullptr);
    r["batch_tag"] = row.batch_tag;
    r["msssim_real"] = row.msssim_real;
    r["msssim_synth"] = row.msssim_synth;
    r["msssim_delta"] = row.msssim_delta;
    r["msssim_collapsed"] = row.msssim_collapsed;
    r["fid"] = row.fid;
    r["is_real"] = row.is_real ? Json(*row.is_real) : Json(nullptr);
    r["is_synth"] = row.is_synth ? Json(*row.is_synth) : Json(nullptr);
    r["is_delta"] = row.is_delta ? Json(*row.is_delta) : Json(nullptr);
    r["is_collapsed"] = row.is_collapsed ? Json(*row.is_collapsed) : Json(nullptr);
    out["rows"].push_back(std::move(r));
  }
  return out.dump(2) + "\n";
}

std::vector<ReportRow> RunSweepToDirectory(const SweepSpec& spec,
                                           const std::filesystem::path& out_dir,
                                           int threads) {
  std::vector<ReportRow> rows = RunSweep(spec, threads);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot create " + out_dir.string() + ": " + ec.message());
  WriteText(FormatReportCsv(rows), out_dir / "report.csv");
  WriteText(FormatReportJson(spec, rows), out_dir / "report.json");
  WriteText(FormatPlotCsv(rows), out_dir / "plotdata.csv");
  return rows;
}

}  // namespace diverscope
