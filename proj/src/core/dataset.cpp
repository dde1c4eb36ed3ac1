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

#include "diverscope/dataset.hpp"

#include <algorithm>
#include <set>
#include <system_error>

#include "diverscope/error.hpp"
#include "diverscope/parallel.hpp"

namespace diverscope {

namespace {

void SortByPath(std::vector<DatasetItem>& items) {
  std::sort(items.begin(), items.end(),
            [](const DatasetItem& a, const DatasetItem& b) {
              return a.path.native() < b.path.native();
            });
}

void CheckInvariants(const std::vector<DatasetItem>& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].path == items[i - 1].path) {
      Fail(ErrorCode::kInvalidArgument,
           "duplicate dataset path " + items[i].path.string());
    }
  }
  for (const auto& item : items) {
    if (item.image.empty()) {
      Fail(ErrorCode::kInvalidArgument, "empty image " + item.path.string());
    }
    if (item.image.width() != items.front().image.width() ||
        item.image.height() != items.front().image.height()) {
      Fail(ErrorCode::kInvalidArgument,
           "image " + item.path.string() + " is " +
               std::to_string(item.image.width()) + "x" +
               std::to_string(item.image.height()) + " but " +
               items.front().path.string() + " is " +
               std::to_string(items.front().image.width()) + "x" +
               std::to_string(items.front().image.height()));
    }
  }
}

std::filesystem::path OutputName(const std::filesystem::path& source) {
  std::filesystem::path name = source.filename();
  std::string ext = name.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext != ".png") name.replace_extension(".png");
  return name;
}

}  // namespace

Dataset LoadDataset(const std::filesystem::path& dir,
                    std::optional<ImageSize> resize_to) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    Fail(ErrorCode::kIo, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) Fail(ErrorCode::kIo, "empty directory: " + dir.string());
  if (resize_to && (resize_to->width < 1 || resize_to->height < 1)) {
    Fail(ErrorCode::kInvalidArgument, "resize target must be >= 1x1");
  }

  std::vector<GrayImage> images(paths.size());
  std::vector<std::string> errors(paths.size());
  ParallelFor(paths.size(), 0, [&](std::size_t i) {
    try {
      GrayImage image = LoadImage(paths[i]);
      if (resize_to) {
        image = ResizeBilinear(image, resize_to->width, resize_to->height);
      }
      images[i] = std::move(image);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  Dataset dataset;
  const auto normal = std::filesystem::absolute(dir).lexically_normal();
  dataset.label = normal.has_filename() ? normal.filename().string()
                                        : normal.parent_path().filename().string();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (errors[i].empty()) {
      dataset.items.push_back({paths[i], std::move(images[i])});
    } else {
      dataset.diagnostics.push_back({paths[i], errors[i]});
    }
  }
  if (dataset.items.empty()) {
    Fail(ErrorCode::kFormat,
         "no decodable images in " + dir.string() + " (" +
             std::to_string(dataset.diagnostics.size()) + " files rejected)");
  }
  CheckInvariants(dataset.items);
  return dataset;
}

Dataset MakeDataset(std::string label, std::vector<DatasetItem> items) {
  if (items.empty()) Fail(ErrorCode::kInvalidArgument, "dataset has no items");
  SortByPath(items);
  CheckInvariants(items);
  Dataset dataset;
  dataset.label = std::move(label);
  dataset.items = std::move(items);
  return dataset;
}

Dataset SaveDataset(const Dataset& dataset, const std::filesystem::path& dir) {
  if (dataset.empty()) Fail(ErrorCode::kInvalidArgument, "dataset has no items");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) Fail(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());

  std::set<std::filesystem::path> names;
  for (const auto& item : dataset.items) {
    if (!names.insert(OutputName(item.path)).second) {
      Fail(ErrorCode::kInvalidArgument,
           "output name collision for " + item.path.string());
    }
  }

  Dataset out;
  out.label = dataset.label;
  out.items.reserve(dataset.size());
  for (const auto& item : dataset.items) {
    const auto target = dir / OutputName(item.path);
    try {
      SavePng(item.image, target);
    } catch (const Error&) {
      // Leave no partial dataset behind.
      for (const auto& written : out.items) {
        std::filesystem::remove(written.path, ec);
      }
      std::filesystem::remove(target, ec);
      throw;
    }
    out.items.push_back({target, item.image});
  }
  SortByPath(out.items);
  return out;
}

}  // namespace diverscope
