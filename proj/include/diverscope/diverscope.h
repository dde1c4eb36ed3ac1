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

#ifndef DIVERSCOPE_DIVERSCOPE_H_
#define DIVERSCOPE_DIVERSCOPE_H_

/* C interface of the diverscope library.
 *
 * Objects are opaque handles created by ds_*_create/load/... functions and
 * released with the matching ds_*_free. Every fallible call returns a
 * ds_status; on failure ds_last_error() describes the most recent error on
 * the calling thread. Output pointers are written only on DS_OK. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DS_API __declspec(dllexport)
#else
#define DS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
  DS_OK = 0,
  DS_ERR_INVALID_ARGUMENT = 1,
  DS_ERR_IO = 2,
  DS_ERR_FORMAT = 3,
  DS_ERR_NUMERIC = 4,
  DS_ERR_INTERNAL = 5
} ds_status;

typedef struct ds_image ds_image;
typedef struct ds_dataset ds_dataset;
typedef struct ds_matrix ds_matrix;

typedef enum ds_stitch {
  DS_STITCH_BILINEAR = 0,
  DS_STITCH_PER_TILE = 1
} ds_stitch;

typedef struct ds_aiin_config {
  int32_t grid_n;
  double contrast_threshold;
  ds_stitch stitch;
} ds_aiin_config;

typedef struct ds_collapse_report {
  double real_score;
  double synthetic_score;
  double delta;
  int32_t collapsed;
} ds_collapse_report;

typedef struct ds_sim_spec {
  int32_t k_modes;
  int32_t n_images;
  int32_t side;
  int32_t noise_amp;
  uint64_t seed;
} ds_sim_spec;

DS_API const char* ds_version(void);
DS_API const char* ds_last_error(void);
DS_API const char* ds_status_name(ds_status status);

/* Images */
DS_API ds_status ds_image_create(uint32_t width, uint32_t height,
                                 const uint8_t* pixels, ds_image** out);
DS_API ds_status ds_image_load(const char* path, ds_image** out);
DS_API ds_status ds_image_save_png(const ds_image* image, const char* path);
DS_API void ds_image_free(ds_image* image);
DS_API uint32_t ds_image_width(const ds_image* image);
DS_API uint32_t ds_image_height(const ds_image* image);
/* Row-major pixels, width * height bytes, owned by the image. */
DS_API const uint8_t* ds_image_pixels(const ds_image* image);
DS_API ds_status ds_image_resize(const ds_image* image, uint32_t width,
                                 uint32_t height, ds_image** out);

/* Adaptive input-image normalization */
DS_API ds_aiin_config ds_aiin_default_config(void);
DS_API ds_status ds_aiin_normalize(const ds_image* image,
                                   const ds_aiin_config* config,
                                   ds_image** out);

/* Datasets. resize_width/resize_height of 0 keep the native size. */
DS_API ds_status ds_dataset_load(const char* dir, uint32_t resize_width,
                                 uint32_t resize_height, ds_dataset** out);
DS_API void ds_dataset_free(ds_dataset* dataset);
DS_API size_t ds_dataset_size(const ds_dataset* dataset);
/* Borrowed; valid until the dataset is freed. NULL when out of range. */
DS_API const ds_image* ds_dataset_image(const ds_dataset* dataset, size_t index);
DS_API const char* ds_dataset_path(const ds_dataset* dataset, size_t index);
DS_API size_t ds_dataset_diagnostic_count(const ds_dataset* dataset);
DS_API const char* ds_dataset_diagnostic(const ds_dataset* dataset, size_t index);
DS_API ds_status ds_dataset_save(const ds_dataset* dataset, const char* dir);
/* threads <= 0 uses DIVERSCOPE_THREADS or the hardware concurrency. */
DS_API ds_status ds_dataset_normalize(const ds_dataset* dataset,
                                      const ds_aiin_config* config,
                                      const char* out_dir, int32_t threads,
                                      ds_dataset** out);

/* MS-SSIM with the default parameters (5 scales, 11x11 Gaussian window). */
DS_API ds_status ds_msssim(const ds_image* x, const ds_image* y, double* out);
/* pairs_csv may be NULL; otherwise per-pair scores are written there. */
DS_API ds_status ds_dataset_msssim(const ds_dataset* dataset, size_t n_pairs,
                                   uint64_t seed, int32_t threads,
                                   const char* pairs_csv, double* mean);

DS_API ds_status ds_detect_intra_collapse(double real_msssim,
                                          double synth_msssim,
                                          ds_collapse_report* out);
DS_API ds_status ds_detect_inter_collapse(double real_is, double synth_is,
                                          ds_collapse_report* out);

/* Matrices: feature activations or class probabilities (FVEC1 or CSV). */
DS_API ds_status ds_matrix_create(size_t rows, size_t cols,
                                  const double* row_major, ds_matrix** out);
DS_API ds_status ds_features_load(const char* path, ds_matrix** out);
/* Also validates entries in [0, 1] and rows summing to 1. */
DS_API ds_status ds_probs_load(const char* path, ds_matrix** out);
DS_API void ds_matrix_free(ds_matrix* matrix);
DS_API size_t ds_matrix_rows(const ds_matrix* matrix);
DS_API size_t ds_matrix_cols(const ds_matrix* matrix);
DS_API double ds_matrix_get(const ds_matrix* matrix, size_t row, size_t col);
DS_API ds_status ds_matrix_save_fvec1(const ds_matrix* matrix, const char* path);
DS_API ds_status ds_matrix_save_csv(const ds_matrix* matrix, const char* path);

DS_API ds_status ds_pixel_features(const ds_dataset* dataset, ds_matrix** out);
DS_API ds_status ds_fid(const ds_matrix* real, const ds_matrix* synth,
                        double* out);
DS_API ds_status ds_inception_score(const ds_matrix* probs, int32_t n_splits,
                                    double epsilon, double* mean, double* std);

/* Mode-collapse simulator */
DS_API ds_status ds_simulate(const ds_sim_spec* spec, ds_dataset** out);
DS_API ds_status ds_oracle_probs(const ds_dataset* dataset,
                                 const ds_sim_spec* spec, ds_matrix** out);

/* Parameter sweep: writes report.csv, report.json and plotdata.csv into
 * out_dir. rows_out may be NULL. */
DS_API ds_status ds_sweep_run(const char* config_path, const char* out_dir,
                              int32_t threads, size_t* rows_out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* DIVERSCOPE_DIVERSCOPE_H_ */
