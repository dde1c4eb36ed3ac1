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

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include "diverscope/diverscope.h"

namespace {

using Json = nlohmann::json;

// Thrown when a C call fails; carries the library's diagnostic.
class CallError : public std::runtime_error {
 public:
  CallError(ds_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  ds_status status() const { return status_; }

 private:
  ds_status status_;
};

void Check(ds_status status) {
  if (status != DS_OK) {
    throw CallError(status, std::string(ds_status_name(status)) + ": " +
                                ds_last_error());
  }
}

struct DatasetDeleter {
  void operator()(ds_dataset* d) const { ds_dataset_free(d); }
};
struct MatrixDeleter {
  void operator()(ds_matrix* m) const { ds_matrix_free(m); }
};
using DatasetPtr = std::unique_ptr<ds_dataset, DatasetDeleter>;
using MatrixPtr = std::unique_ptr<ds_matrix, MatrixDeleter>;

struct Resize {
  std::string spec;  // "WxH" or empty
  uint32_t width = 0;
  uint32_t height = 0;

  void Parse() {
    if (spec.empty()) return;
    unsigned w = 0, h = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%ux%u%c", &w, &h, &extra) != 2 || w == 0 ||
        h == 0) {
      throw CallError(DS_ERR_INVALID_ARGUMENT,
                      "invalid --resize \"" + spec + "\", expected WxH");
    }
    width = w;
    height = h;
  }
};

DatasetPtr LoadDataset(const std::string& dir, const Resize& resize) {
  ds_dataset* raw = nullptr;
  Check(ds_dataset_load(dir.c_str(), resize.width, resize.height, &raw));
  DatasetPtr dataset(raw);
  for (size_t i = 0; i < ds_dataset_diagnostic_count(raw); ++i) {
    std::cerr << "warning: skipped " << ds_dataset_diagnostic(raw, i) << "\n";
  }
  return dataset;
}

void Print(const Json& value) { std::cout << value.dump(2) << std::endl; }

Json ReportJson(const char* metric, const ds_collapse_report& r) {
  return {{"metric", metric},
          {"real_score", r.real_score},
          {"synthetic_score", r.synthetic_score},
          {"delta", r.delta},
          {"collapsed", r.collapsed != 0}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Image normalization and generative-diversity metrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ds_version()));

  // normalize
  std::string norm_in, norm_out, norm_stitch = "bilinear";
  int norm_grid = 8, norm_threads = 0;
  double norm_threshold = 0.0;
  Resize norm_resize;
  auto* normalize = app.add_subcommand("normalize", "Normalize every image in a directory");
  normalize->add_option("in_dir", norm_in, "Input image directory")->required();
  normalize->add_option("out_dir", norm_out, "Output directory")->required();
  normalize->add_option("--grid", norm_grid, "Windows per axis")->capture_default_str();
  normalize->add_option("--threshold", norm_threshold, "Contrast threshold (0 = no clipping)")
      ->capture_default_str();
  normalize->add_option("--stitch", norm_stitch, "bilinear or per-tile")
      ->check(CLI::IsMember({"bilinear", "per-tile"}))
      ->capture_default_str();
  normalize->add_option("--resize", norm_resize.spec, "Resize inputs to WxH first");
  normalize->add_option("--threads", norm_threads, "Worker threads (0 = auto)");

  // msssim
  std::string ms_a, ms_b, ms_csv;
  std::size_t ms_pairs = 670;
  std::uint64_t ms_seed = 0;
  int ms_threads = 0;
  Resize ms_resize;
  auto* msssim = app.add_subcommand("msssim", "Mean MS-SSIM over random image pairs");
  msssim->add_option("dir", ms_a, "Image directory (the real set when comparing)")->required();
  msssim->add_option("synth_dir", ms_b, "Optional synthetic directory to compare against");
  msssim->add_option("--pairs", ms_pairs, "Number of sampled pairs")->capture_default_str();
  msssim->add_option("--seed", ms_seed, "Pair sampling seed")->capture_default_str();
  msssim->add_option("--pairs-csv", ms_csv, "Write per-pair scores of the first directory");
  msssim->add_option("--resize", ms_resize.spec, "Resize inputs to WxH first");
  msssim->add_option("--threads", ms_threads, "Worker threads (0 = auto)");

  // fid
  std::string fid_real, fid_synth, fid_features = "pixel";
  Resize fid_resize;
  auto* fid = app.add_subcommand("fid", "Frechet distance between feature distributions");
  fid->add_option("real", fid_real, "Real image directory or feature file")->required();
  fid->add_option("synth", fid_synth, "Synthetic image directory or feature file")->required();
  fid->add_option("--features", fid_features, "pixel (directories) or file (FVEC1/CSV)")
      ->check(CLI::IsMember({"pixel", "file"}))
      ->capture_default_str();
  fid->add_option("--resize", fid_resize.spec, "Resize images to WxH first");

  // is
  std::string is_probs, is_real;
  int is_splits = 10;
  double is_epsilon = 1e-12;
  auto* is = app.add_subcommand("is", "Inception Score of a probability file");
  is->add_option("probs", is_probs, "FVEC1/CSV class probabilities")->required();
  is->add_option("--splits", is_splits, "Number of splits")->capture_default_str();
  is->add_option("--epsilon", is_epsilon, "Log smoothing constant")->capture_default_str();
  is->add_option("--real", is_real, "Real-set probabilities; adds an inter-class collapse report");

  // sweep
  std::string sweep_config, sweep_out = ".";
  int sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run the window x threshold x batch grid");
  sweep->add_option("config", sweep_config, "Sweep config JSON")->required();
  sweep->add_option("--out", sweep_out, "Output directory for reports")->capture_default_str();
  sweep->add_option("--threads", sweep_threads, "Worker threads (0 = auto)");

  // simulate
  std::string sim_out, sim_probs, sim_probs_format = "fvec1";
  ds_sim_spec sim{1, 10, 128, 0, 0};
  auto* simulate = app.add_subcommand("simulate", "Write a synthetic dataset with k modes");
  simulate->add_option("out_dir", sim_out, "Output directory")->required();
  simulate->add_option("--k", sim.k_modes, "Number of modes")->capture_default_str();
  simulate->add_option("--n", sim.n_images, "Number of images")->capture_default_str();
  simulate->add_option("--side", sim.side, "Image side in pixels")->capture_default_str();
  simulate->add_option("--noise", sim.noise_amp, "Uniform noise amplitude (0-64)")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Generator seed")->capture_default_str();
  simulate->add_option("--probs", sim_probs, "Also write oracle class probabilities here");
  simulate->add_option("--probs-format", sim_probs_format, "fvec1 or csv")
      ->check(CLI::IsMember({"fvec1", "csv"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) {
      norm_resize.Parse();
      DatasetPtr input = LoadDataset(norm_in, norm_resize);
      const ds_aiin_config config{
          norm_grid, norm_threshold,
          norm_stitch == "per-tile" ? DS_STITCH_PER_TILE : DS_STITCH_BILINEAR};
      std::cerr << "normalizing " << ds_dataset_size(input.get()) << " images\n";
      ds_dataset* raw = nullptr;
      Check(ds_dataset_normalize(input.get(), &config, norm_out.c_str(),
                                 norm_threads, &raw));
      DatasetPtr output(raw);
      Print({{"count", ds_dataset_size(output.get())},
             {"skipped", ds_dataset_diagnostic_count(input.get())},
             {"out_dir", norm_out},
             {"grid", norm_grid},
             {"threshold", norm_threshold},
             {"stitch", norm_stitch}});
    } else if (*msssim) {
      ms_resize.Parse();
      DatasetPtr a = LoadDataset(ms_a, ms_resize);
      double mean_a = 0.0;
      Check(ds_dataset_msssim(a.get(), ms_pairs, ms_seed, ms_threads,
                              ms_csv.empty() ? nullptr : ms_csv.c_str(), &mean_a));
      if (ms_b.empty()) {
        Print({{"mean", mean_a}, {"n_pairs", ms_pairs}, {"seed", ms_seed}});
      } else {
        DatasetPtr b = LoadDataset(ms_b, ms_resize);
        double mean_b = 0.0;
        Check(ds_dataset_msssim(b.get(), ms_pairs, ms_seed, ms_threads, nullptr,
                                &mean_b));
        ds_collapse_report report{};
        Check(ds_detect_intra_collapse(mean_a, mean_b, &report));
        Json out = ReportJson("msssim", report);
        out["n_pairs"] = ms_pairs;
        out["seed"] = ms_seed;
        Print(out);
      }
    } else if (*fid) {
      MatrixPtr real, synth;
      ds_matrix* raw = nullptr;
      if (fid_features == "file") {
        Check(ds_features_load(fid_real.c_str(), &raw));
        real.reset(raw);
        Check(ds_features_load(fid_synth.c_str(), &raw));
        synth.reset(raw);
      } else {
        fid_resize.Parse();
        DatasetPtr a = LoadDataset(fid_real, fid_resize);
        DatasetPtr b = LoadDataset(fid_synth, fid_resize);
        Check(ds_pixel_features(a.get(), &raw));
        real.reset(raw);
        Check(ds_pixel_features(b.get(), &raw));
        synth.reset(raw);
      }
      double score = 0.0;
      Check(ds_fid(real.get(), synth.get(), &score));
      Print({{"fid", score},
             {"features", fid_features},
             {"n_real", ds_matrix_rows(real.get())},
             {"n_synth", ds_matrix_rows(synth.get())},
             {"dim", ds_matrix_cols(real.get())}});
    } else if (*is) {
      ds_matrix* raw = nullptr;
      Check(ds_probs_load(is_probs.c_str(), &raw));
      MatrixPtr probs(raw);
      double mean = 0.0, std = 0.0;
      Check(ds_inception_score(probs.get(), is_splits, is_epsilon, &mean, &std));
      Json out = {{"mean", mean},
                  {"std", std},
                  {"n_splits", is_splits},
                  {"n", ds_matrix_rows(probs.get())},
                  {"classes", ds_matrix_cols(probs.get())}};
      if (!is_real.empty()) {
        Check(ds_probs_load(is_real.c_str(), &raw));
        MatrixPtr real(raw);
        double real_mean = 0.0;
        Check(ds_inception_score(real.get(), is_splits, is_epsilon, &real_mean, nullptr));
        ds_collapse_report report{};
        Check(ds_detect_inter_collapse(real_mean, mean, &report));
        out["collapse"] = ReportJson("is", report);
      }
      Print(out);
    } else if (*sweep) {
      size_t rows = 0;
      std::cerr << "running sweep " << sweep_config << "\n";
      Check(ds_sweep_run(sweep_config.c_str(), sweep_out.c_str(), sweep_threads, &rows));
      Print({{"rows", rows},
             {"report_csv", sweep_out + "/report.csv"},
             {"report_json", sweep_out + "/report.json"},
             {"plotdata_csv", sweep_out + "/plotdata.csv"}});
    } else if (*simulate) {
      ds_dataset* raw = nullptr;
      Check(ds_simulate(&sim, &raw));
      DatasetPtr dataset(raw);
      Check(ds_dataset_save(dataset.get(), sim_out.c_str()));
      Json out = {{"count", ds_dataset_size(dataset.get())},
                  {"out_dir", sim_out},
                  {"k", sim.k_modes},
                  {"side", sim.side},
                  {"noise", sim.noise_amp},
                  {"seed", sim.seed}};
      if (!sim_probs.empty()) {
        ds_matrix* probs_raw = nullptr;
        Check(ds_oracle_probs(dataset.get(), &sim, &probs_raw));
        MatrixPtr probs(probs_raw);
        Check(sim_probs_format == "csv"
                  ? ds_matrix_save_csv(probs.get(), sim_probs.c_str())
                  : ds_matrix_save_fvec1(probs.get(), sim_probs.c_str()));
        out["probs"] = sim_probs;
      }
      Print(out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
