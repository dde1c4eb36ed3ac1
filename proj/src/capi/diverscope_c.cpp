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

#include "diverscope/diverscope.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "diverscope/aiin.hpp"
#include "diverscope/collapse.hpp"
#include "diverscope/dataset.hpp"
#include "diverscope/error.hpp"
#include "diverscope/fid.hpp"
#include "diverscope/image.hpp"
#include "diverscope/inception.hpp"
#include "diverscope/matrix_io.hpp"
#include "diverscope/msssim.hpp"
#include "diverscope/simulate.hpp"
#include "diverscope/sweep.hpp"

struct ds_image {
  diverscope::GrayImage image;
};

struct ds_dataset {
  diverscope::Dataset dataset;
  std::vector<ds_image> images;  // mirrors dataset.items for borrowed access
  std::vector<std::string> paths;
  std::vector<std::string> diagnostics;

  explicit ds_dataset(diverscope::Dataset ds) : dataset(std::move(ds)) {
    for (const auto& item : dataset.items) {
      images.push_back({item.image});
      paths.push_back(item.path.string());
    }
    for (const auto& d : dataset.diagnostics) {
      diagnostics.push_back(d.path.string() + ": " + d.message);
    }
  }
};

struct ds_matrix {
  Eigen::MatrixXd values;
};

namespace {

thread_local std::string g_last_error;

ds_status ToStatus(diverscope::ErrorCode code) {
  switch (code) {
    case diverscope::ErrorCode::kInvalidArgument: return DS_ERR_INVALID_ARGUMENT;
    case diverscope::ErrorCode::kIo: return DS_ERR_IO;
    case diverscope::ErrorCode::kFormat: return DS_ERR_FORMAT;
    case diverscope::ErrorCode::kNumeric: return DS_ERR_NUMERIC;
  }
  return DS_ERR_INTERNAL;
}

template <typename Fn>
ds_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DS_OK;
  } catch (const diverscope::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DS_ERR_INTERNAL;
  }
}

void Require(bool condition, const char* what) {
  if (!condition) {
    diverscope::Fail(diverscope::ErrorCode::kInvalidArgument,
                     std::string("null argument: ") + what);
  }
}

diverscope::AiinConfig ToConfig(const ds_aiin_config* config) {
  Require(config != nullptr, "config");
  if (config->stitch != DS_STITCH_BILINEAR && config->stitch != DS_STITCH_PER_TILE) {
    diverscope::Fail(diverscope::ErrorCode::kInvalidArgument, "unknown stitch mode");
  }
  return {config->grid_n, config->contrast_threshold,
          config->stitch == DS_STITCH_PER_TILE ? diverscope::Stitch::kPerTile
                                               : diverscope::Stitch::kBilinear};
}

diverscope::SimSpec ToSpec(const ds_sim_spec* spec) {
  Require(spec != nullptr, "spec");
  return {spec->k_modes, spec->n_images, spec->side, spec->noise_amp, spec->seed};
}

void Fill(const diverscope::CollapseReport& report, ds_collapse_report* out) {
  out->real_score = report.real_score;
  out->synthetic_score = report.synthetic_score;
  out->delta = report.delta;
  out->collapsed = report.collapsed ? 1 : 0;
}

}  // namespace

extern "C" {

const char* ds_version(void) { return "1.0.0"; }

const char* ds_last_error(void) { return g_last_error.c_str(); }

const char* ds_status_name(ds_status status) {
  switch (status) {
    case DS_OK: return "ok";
    case DS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DS_ERR_IO: return "i/o error";
    case DS_ERR_FORMAT: return "format error";
    case DS_ERR_NUMERIC: return "numeric error";
    case DS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ds_status ds_image_create(uint32_t width, uint32_t height, const uint8_t* pixels,
                          ds_image** out) {
  return Guard([&] {
    Require(pixels != nullptr, "pixels");
    Require(out != nullptr, "out");
    std::vector<std::uint8_t> buffer(pixels, pixels + static_cast<std::size_t>(width) * height);
    *out = new ds_image{diverscope::GrayImage(static_cast<int>(width),
                                              static_cast<int>(height),
                                              std::move(buffer))};
  });
}

ds_status ds_image_load(const char* path, ds_image** out) {
  return Guard([&] {
    Require(path != nullptr, "path");
    Require(out != nullptr, "out");
    *out = new ds_image{diverscope::LoadImage(path)};
  });
}

ds_status ds_image_save_png(const ds_image* image, const char* path) {
  return Guard([&] {
    Require(image != nullptr, "image");
    Require(path != nullptr, "path");
    diverscope::SavePng(image->image, path);
  });
}

void ds_image_free(ds_image* image) { delete image; }

uint32_t ds_image_width(const ds_image* image) {
  return image ? static_cast<uint32_t>(image->image.width()) : 0;
}

uint32_t ds_image_height(const ds_image* image) {
  return image ? static_cast<uint32_t>(image->image.height()) : 0;
}

const uint8_t* ds_image_pixels(const ds_image* image) {
  return image ? image->image.pixels().data() : nullptr;
}

ds_status ds_image_resize(const ds_image* image, uint32_t width, uint32_t height,
                          ds_image** out) {
  return Guard([&] {
    Require(image != nullptr, "image");
    Require(out != nullptr, "out");
    *out = new ds_image{diverscope::ResizeBilinear(
        image->image, static_cast<int>(width), static_cast<int>(height))};
  });
}

ds_aiin_config ds_aiin_default_config(void) {
  const diverscope::AiinConfig config;
  return {config.grid_n, config.contrast_threshold, DS_STITCH_BILINEAR};
}

ds_status ds_aiin_normalize(const ds_image* image, const ds_aiin_config* config,
                            ds_image** out) {
  return Guard([&] {
    Require(image != nullptr, "image");
    Require(out != nullptr, "out");
    *out = new ds_image{diverscope::AiinNormalize(image->image, ToConfig(config))};
  });
}

ds_status ds_dataset_load(const char* dir, uint32_t resize_width,
                          uint32_t resize_height, ds_dataset** out) {
  return Guard([&] {
    Require(dir != nullptr, "dir");
    Require(out != nullptr, "out");
    std::optional<diverscope::ImageSize> resize;
    if (resize_width != 0 || resize_height != 0) {
      resize = diverscope::ImageSize{static_cast<int>(resize_width),
                                     static_cast<int>(resize_height)};
    }
    *out = new ds_dataset(diverscope::LoadDataset(dir, resize));
  });
}

void ds_dataset_free(ds_dataset* dataset) { delete dataset; }

size_t ds_dataset_size(const ds_dataset* dataset) {
  return dataset ? dataset->dataset.size() : 0;
}

const ds_image* ds_dataset_image(const ds_dataset* dataset, size_t index) {
  if (dataset == nullptr || index >= dataset->images.size()) return nullptr;
  return &dataset->images[index];
}

const char* ds_dataset_path(const ds_dataset* dataset, size_t index) {
  if (dataset == nullptr || index >= dataset->paths.size()) return nullptr;
  return dataset->paths[index].c_str();
}

size_t ds_dataset_diagnostic_count(const ds_dataset* dataset) {
  return dataset ? dataset->diagnostics.size() : 0;
}

const char* ds_dataset_diagnostic(const ds_dataset* dataset, size_t index) {
  if (dataset == nullptr || index >= dataset->diagnostics.size()) return nullptr;
  return dataset->diagnostics[index].c_str();
}

ds_status ds_dataset_save(const ds_dataset* dataset, const char* dir) {
  return Guard([&] {
    Require(dataset != nullptr, "dataset");
    Require(dir != nullptr, "dir");
    diverscope::SaveDataset(dataset->dataset, dir);
  });
}

ds_status ds_dataset_normalize(const ds_dataset* dataset,
                               const ds_aiin_config* config, const char* out_dir,
                               int32_t threads, ds_dataset** out) {
  return Guard([&] {
    Require(dataset != nullptr, "dataset");
    Require(out_dir != nullptr, "out_dir");
    Require(out != nullptr, "out");
    *out = new ds_dataset(diverscope::NormalizeDataset(
        dataset->dataset, ToConfig(config), out_dir, threads));
  });
}

ds_status ds_msssim(const ds_image* x, const ds_image* y, double* out) {
  return Guard([&] {
    Require(x != nullptr && y != nullptr, "image");
    Require(out != nullptr, "out");
    *out = diverscope::MsSsim(x->image, y->image);
  });
}

ds_status ds_dataset_msssim(const ds_dataset* dataset, size_t n_pairs,
                            uint64_t seed, int32_t threads,
                            const char* pairs_csv, double* mean) {
  return Guard([&] {
    Require(dataset != nullptr, "dataset");
    Require(mean != nullptr, "mean");
    const auto result = diverscope::DatasetMsSsimScore(
        dataset->dataset, {n_pairs, seed}, {}, threads);
    if (pairs_csv != nullptr) {
      diverscope::WritePairCsv(dataset->dataset, result, pairs_csv);
    }
    *mean = result.mean;
  });
}

ds_status ds_detect_intra_collapse(double real_msssim, double synth_msssim,
                                   ds_collapse_report* out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    Fill(diverscope::DetectIntraCollapse(real_msssim, synth_msssim), out);
  });
}

ds_status ds_detect_inter_collapse(double real_is, double synth_is,
                                   ds_collapse_report* out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    Fill(diverscope::DetectInterCollapse(real_is, synth_is), out);
  });
}

ds_status ds_matrix_create(size_t rows, size_t cols, const double* row_major,
                           ds_matrix** out) {
  return Guard([&] {
    Require(row_major != nullptr, "row_major");
    Require(out != nullptr, "out");
    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows),
                           static_cast<Eigen::Index>(cols));
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            row_major[r * cols + c];
      }
    }
    *out = new ds_matrix{std::move(values)};
  });
}

ds_status ds_features_load(const char* path, ds_matrix** out) {
  return Guard([&] {
    Require(path != nullptr, "path");
    Require(out != nullptr, "out");
    *out = new ds_matrix{diverscope::LoadFeatures(path).values()};
  });
}

ds_status ds_probs_load(const char* path, ds_matrix** out) {
  return Guard([&] {
    Require(path != nullptr, "path");
    Require(out != nullptr, "out");
    *out = new ds_matrix{diverscope::LoadProbs(path).values()};
  });
}

void ds_matrix_free(ds_matrix* matrix) { delete matrix; }

size_t ds_matrix_rows(const ds_matrix* matrix) {
  return matrix ? static_cast<size_t>(matrix->values.rows()) : 0;
}

size_t ds_matrix_cols(const ds_matrix* matrix) {
  return matrix ? static_cast<size_t>(matrix->values.cols()) : 0;
}

double ds_matrix_get(const ds_matrix* matrix, size_t row, size_t col) {
  return matrix->values(static_cast<Eigen::Index>(row),
                        static_cast<Eigen::Index>(col));
}

ds_status ds_matrix_save_fvec1(const ds_matrix* matrix, const char* path) {
  return Guard([&] {
    Require(matrix != nullptr, "matrix");
    Require(path != nullptr, "path");
    diverscope::SaveFvec1(matrix->values, path);
  });
}

ds_status ds_matrix_save_csv(const ds_matrix* matrix, const char* path) {
  return Guard([&] {
    Require(matrix != nullptr, "matrix");
    Require(path != nullptr, "path");
    diverscope::SaveCsv(matrix->values, path);
  });
}

ds_status ds_pixel_features(const ds_dataset* dataset, ds_matrix** out) {
  return Guard([&] {
    Require(dataset != nullptr, "dataset");
    Require(out != nullptr, "out");
    *out = new ds_matrix{diverscope::PixelFeatures(dataset->dataset).values()};
  });
}

ds_status ds_fid(const ds_matrix* real, const ds_matrix* synth, double* out) {
  return Guard([&] {
    Require(real != nullptr && synth != nullptr, "matrix");
    Require(out != nullptr, "out");
    *out = diverscope::FidScore(diverscope::FeatureMatrix(real->values),
                                diverscope::FeatureMatrix(synth->values));
  });
}

ds_status ds_inception_score(const ds_matrix* probs, int32_t n_splits,
                             double epsilon, double* mean, double* std) {
  return Guard([&] {
    Require(probs != nullptr, "probs");
    Require(mean != nullptr, "mean");
    const auto result = diverscope::InceptionScore(
        diverscope::ProbMatrix(probs->values), n_splits, epsilon);
    *mean = result.mean;
    if (std != nullptr) *std = result.std;
  });
}

ds_status ds_simulate(const ds_sim_spec* spec, ds_dataset** out) {
  return Guard([&] {
    Require(out != nullptr, "out");
    *out = new ds_dataset(diverscope::GenerateModes(ToSpec(spec)));
  });
}

ds_status ds_oracle_probs(const ds_dataset* dataset, const ds_sim_spec* spec,
                          ds_matrix** out) {
  return Guard([&] {
    Require(dataset != nullptr, "dataset");
    Require(out != nullptr, "out");
    *out = new ds_matrix{
        diverscope::OracleProbs(dataset->dataset, ToSpec(spec)).values()};
  });
}

ds_status ds_sweep_run(const char* config_path, const char* out_dir,
                       int32_t threads, size_t* rows_out) {
  return Guard([&] {
    Require(config_path != nullptr, "config_path");
    Require(out_dir != nullptr, "out_dir");
    const auto rows = diverscope::RunSweepToDirectory(
        diverscope::LoadSweepConfig(config_path), out_dir, threads);
    if (rows_out != nullptr) *rows_out = rows.size();
  });
}

}  // extern "C"
