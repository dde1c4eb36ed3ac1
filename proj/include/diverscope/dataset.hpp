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

#ifndef DIVERSCOPE_DATASET_HPP_
#define DIVERSCOPE_DATASET_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "diverscope/image.hpp"

namespace diverscope {

struct ImageSize {
  int width = 0;
  int height = 0;
};

struct DatasetItem {
  std::filesystem::path path;
  GrayImage image;
};

/// Files that were present but could not be decoded during ingestion.
struct LoadDiagnostic {
  std::filesystem::path path;
  std::string message;
};

/// An ordered, uniformly sized set of grayscale images belonging to one
/// class. Items are sorted lexicographically by path.
struct Dataset {
  std::string label;
  std::vector<DatasetItem> items;
  std::vector<LoadDiagnostic> diagnostics;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
  const GrayImage& image(std::size_t i) const { return items[i].image; }
};

/// Loads every regular file in `dir` (non-recursive). Undecodable files are
/// skipped and recorded in `diagnostics`. Fails when nothing decodes, or
/// when the decoded images disagree in size and no `resize_to` was given.
Dataset LoadDataset(const std::filesystem::path& dir,
                    std::optional<ImageSize> resize_to = std::nullopt);

/// Builds a dataset from in-memory images, checking the shared-size and
/// unique-path invariants. Items are re-sorted by path.
Dataset MakeDataset(std::string label, std::vector<DatasetItem> items);

/// Writes every item as PNG into `dir` under its file name and returns a
/// dataset whose paths point at the written files.
Dataset SaveDataset(const Dataset& dataset, const std::filesystem::path& dir);

}  // namespace diverscope

#endif  // DIVERSCOPE_DATASET_HPP_
