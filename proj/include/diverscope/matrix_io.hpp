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

#ifndef DIVERSCOPE_MATRIX_IO_HPP_
#define DIVERSCOPE_MATRIX_IO_HPP_

#include <Eigen/Core>

#include <filesystem>
#include <string>
#include <string_view>

namespace diverscope {

// FVEC1 layout: the 5 ASCII bytes "FVEC1", little-endian u32 rows, u32 cols,
// then rows * cols little-endian IEEE-754 binary32 values, row-major.
inline constexpr std::string_view kFvec1Magic = "FVEC1";
inline constexpr std::size_t kFvec1HeaderBytes = 13;

std::string EncodeFvec1(const Eigen::MatrixXd& matrix);
Eigen::MatrixXd DecodeFvec1(std::string_view bytes,
                            std::string_view source = "<memory>");

/// Comma-separated rows; an optional non-numeric header line is skipped.
Eigen::MatrixXd ParseCsvMatrix(std::string_view text,
                               std::string_view source = "<memory>");
std::string FormatCsvMatrix(const Eigen::MatrixXd& matrix);

/// Reads FVEC1 when the file starts with the magic, CSV otherwise. A file
/// that starts with "FVEC" but not the full magic is rejected as bad magic.
Eigen::MatrixXd LoadMatrix(const std::filesystem::path& path);

void SaveFvec1(const Eigen::MatrixXd& matrix, const std::filesystem::path& path);
void SaveCsv(const Eigen::MatrixXd& matrix, const std::filesystem::path& path);

}  // namespace diverscope

#endif  // DIVERSCOPE_MATRIX_IO_HPP_
