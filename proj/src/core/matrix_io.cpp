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

#include "diverscope/matrix_io.hpp"

#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "diverscope/error.hpp"

namespace diverscope {

namespace {

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t GetU32(std::string_view bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[offset + i]))
         << (8 * i);
  }
  return v;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) Fail(ErrorCode::kIo, "write failed: " + path.string());
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool ParseNumber(std::string_view field, double* value) {
  const std::string text(Trim(field));
  if (text.empty()) return false;
  char* end = nullptr;
  errno = 0;
  *value = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size();
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::string EncodeFvec1(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() > std::numeric_limits<std::uint32_t>::max() ||
      matrix.cols() > std::numeric_limits<std::uint32_t>::max()) {
    Fail(ErrorCode::kInvalidArgument, "matrix too large for FVEC1");
  }
  std::string out(kFvec1Magic);
  PutU32(out, static_cast<std::uint32_t>(matrix.rows()));
  PutU32(out, static_cast<std::uint32_t>(matrix.cols()));
  out.reserve(out.size() + 4 * matrix.size());
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(matrix(r, c))));
    }
  }
  return out;
}

Eigen::MatrixXd DecodeFvec1(std::string_view bytes, std::string_view source) {
  const std::string where(source);
  if (bytes.size() < kFvec1Magic.size() ||
      bytes.substr(0, kFvec1Magic.size()) != kFvec1Magic) {
    Fail(ErrorCode::kFormat, where + ": bad magic (expected \"FVEC1\")");
  }
  if (bytes.size() < kFvec1HeaderBytes) {
    Fail(ErrorCode::kFormat, where + ": truncated header: expected " +
                                 std::to_string(kFvec1HeaderBytes) +
                                 " bytes, got " + std::to_string(bytes.size()));
  }
  const std::uint32_t rows = GetU32(bytes, 5);
  const std::uint32_t cols = GetU32(bytes, 9);
  const std::uint64_t expected =
      kFvec1HeaderBytes + 4ull * static_cast<std::uint64_t>(rows) * cols;
  if (bytes.size() != expected) {
    Fail(ErrorCode::kFormat,
         where + (bytes.size() < expected ? ": truncated payload" : ": trailing bytes") +
             " for " + std::to_string(rows) + "x" + std::to_string(cols) +
             ": expected " + std::to_string(expected) + " bytes, got " +
             std::to_string(bytes.size()));
  }
  if (rows == 0 || cols == 0) {
    Fail(ErrorCode::kFormat, where + ": empty matrix " + std::to_string(rows) +
                                 "x" + std::to_string(cols));
  }
  Eigen::MatrixXd matrix(rows, cols);
  std::size_t offset = kFvec1HeaderBytes;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c, offset += 4) {
      const float v = std::bit_cast<float>(GetU32(bytes, offset));
      if (!std::isfinite(v)) {
        Fail(ErrorCode::kFormat, where + ": non-finite value at row " +
                                     std::to_string(r) + ", column " +
                                     std::to_string(c));
      }
      matrix(r, c) = v;
    }
  }
  return matrix;
}

Eigen::MatrixXd ParseCsvMatrix(std::string_view text, std::string_view source) {
  const std::string where(source);
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool first_content_line = true;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto fields = SplitFields(line);
    std::vector<double> values(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size() && numeric; ++i) {
      numeric = ParseNumber(fields[i], &values[i]);
    }
    if (!numeric) {
      if (first_content_line) {
        first_content_line = false;
        continue;  // header
      }
      Fail(ErrorCode::kFormat,
           where + ":" + std::to_string(line_no) + ": non-numeric field");
    }
    first_content_line = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::isfinite(values[i])) {
        Fail(ErrorCode::kFormat, where + ":" + std::to_string(line_no) +
                                     ": non-finite value in column " +
                                     std::to_string(i));
      }
    }
    if (!rows.empty() && values.size() != rows.front().size()) {
      Fail(ErrorCode::kFormat, where + ":" + std::to_string(line_no) +
                                   ": expected " +
                                   std::to_string(rows.front().size()) +
                                   " columns, got " +
                                   std::to_string(values.size()));
    }
    rows.push_back(std::move(values));
    if (end == text.size()) break;
  }
  if (rows.empty()) Fail(ErrorCode::kFormat, where + ": no data rows");
  Eigen::MatrixXd matrix(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return matrix;
}

std::string FormatCsvMatrix(const Eigen::MatrixXd& matrix) {
  std::string out;
  char buffer[40];
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", matrix(r, c));
      if (c > 0) out.push_back(',');
      out += buffer;
    }
    out.push_back('\n');
  }
  return out;
}

Eigen::MatrixXd LoadMatrix(const std::filesystem::path& path) {
  const std::string bytes = ReadFile(path);
  if (bytes.compare(0, 4, "FVEC") == 0) return DecodeFvec1(bytes, path.string());
  return ParseCsvMatrix(bytes, path.string());
}

void SaveFvec1(const Eigen::MatrixXd& matrix, const std::filesystem::path& path) {
  WriteFile(EncodeFvec1(matrix), path);
}

void SaveCsv(const Eigen::MatrixXd& matrix, const std::filesystem::path& path) {
  WriteFile(FormatCsvMatrix(matrix), path);
}

}  // namespace diverscope
