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

#include "diverscope/image.hpp"

#include <png.h>
#include <jpeglib.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "diverscope/error.hpp"

namespace diverscope {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr OpenFile(const std::filesystem::path& path, const char* mode) {
  FilePtr file(std::fopen(path.c_str(), mode));
  if (!file) Fail(ErrorCode::kIo, "cannot open " + path.string());
  return file;
}

enum class Codec { kPng, kJpeg, kUnknown };

Codec Sniff(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot read " + path.string());
  std::array<unsigned char, 8> sig{};
  in.read(reinterpret_cast<char*>(sig.data()), sig.size());
  const auto got = in.gcount();
  if (got >= 8 && png_sig_cmp(sig.data(), 0, 8) == 0) return Codec::kPng;
  if (got >= 3 && sig[0] == 0xFF && sig[1] == 0xD8 && sig[2] == 0xFF) {
    return Codec::kJpeg;
  }
  return Codec::kUnknown;
}

// Decoded interleaved samples, 1 (gray) or 3 (RGB) channels.
struct RawRaster {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;
};

GrayImage ToGray(const RawRaster& raw, const std::filesystem::path& path) {
  if (raw.width <= 0 || raw.height <= 0) {
    Fail(ErrorCode::kFormat, "zero-dimension image " + path.string());
  }
  if (raw.channels == 1) return GrayImage(raw.width, raw.height, raw.data);
  std::vector<std::uint8_t> gray(static_cast<std::size_t>(raw.width) *
                                 raw.height);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    gray[i] = Luminance(raw.data[3 * i], raw.data[3 * i + 1],
                        raw.data[3 * i + 2]);
  }
  return GrayImage(raw.width, raw.height, std::move(gray));
}

void PngErrorFn(png_structp png, png_const_charp message) {
  auto* buffer = static_cast<std::string*>(png_get_error_ptr(png));
  if (buffer != nullptr) *buffer = message;
  png_longjmp(png, 1);
}

void PngWarningFn(png_structp, png_const_charp) {}

// Kept free of non-trivial locals that would be skipped by longjmp.
bool DecodePngRaw(std::FILE* file, RawRaster* raw, std::string* error) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, error,
                                           PngErrorFn, PngWarningFn);
  if (png == nullptr) {
    *error = "png_create_read_struct failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  png_bytep* rows = nullptr;
  if (setjmp(png_jmpbuf(png))) {
    std::free(rows);
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_init_io(png, file);
  png_read_info(png, info);
  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);

  const int channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    *error = "unsupported PNG channel layout";
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  raw->width = static_cast<int>(width);
  raw->height = static_cast<int>(height);
  raw->channels = channels;
  raw->data.resize(static_cast<std::size_t>(width) * height * channels);
  rows = static_cast<png_bytep*>(std::malloc(sizeof(png_bytep) * height));
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = raw->data.data() + static_cast<std::size_t>(y) * width * channels;
  }
  png_read_image(png, rows);
  png_read_end(png, nullptr);
  std::free(rows);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void JpegErrorExit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

bool DecodeJpegRaw(std::FILE* file, RawRaster* raw, std::string* error) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager jerr;
  cinfo.err = jpeg_std_error(&jerr.base);
  jerr.base.error_exit = JpegErrorExit;
  if (setjmp(jerr.jump)) {
    *error = jerr.message;
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, file);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space =
      cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);
  raw->width = static_cast<int>(cinfo.output_width);
  raw->height = static_cast<int>(cinfo.output_height);
  raw->channels = cinfo.output_components;
  raw->data.resize(static_cast<std::size_t>(raw->width) * raw->height *
                   raw->channels);
  const std::size_t stride =
      static_cast<std::size_t>(raw->width) * raw->channels;
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = raw->data.data() + cinfo.output_scanline * stride;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return true;
}

std::uint8_t RoundClamp(double v) {
  // std::round rounds half away from zero.
  return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    Fail(ErrorCode::kInvalidArgument, "image dimensions must be >= 1");
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    Fail(ErrorCode::kInvalidArgument, "image dimensions must be >= 1");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    Fail(ErrorCode::kInvalidArgument,
         "pixel buffer length " + std::to_string(pixels_.size()) +
             " does not match " + std::to_string(width) + "x" +
             std::to_string(height));
  }
}

std::uint8_t Luminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  // Weights scaled by 1000; +500 rounds the non-negative quotient half up.
  const unsigned weighted = 299u * r + 587u * g + 114u * b;
  return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

GrayImage LoadImage(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    Fail(ErrorCode::kIo, "not a readable file: " + path.string());
  }
  const Codec codec = Sniff(path);
  if (codec == Codec::kUnknown) {
    Fail(ErrorCode::kFormat, "unsupported codec (expected PNG or JPEG): " +
                                 path.string());
  }
  FilePtr file = OpenFile(path, "rb");
  RawRaster raw;
  std::string error;
  const bool ok = codec == Codec::kPng
                      ? DecodePngRaw(file.get(), &raw, &error)
                      : DecodeJpegRaw(file.get(), &raw, &error);
  if (!ok) {
    Fail(ErrorCode::kFormat, "cannot decode " + path.string() + ": " + error);
  }
  return ToGray(raw, path);
}

void SavePng(const GrayImage& image, const std::filesystem::path& path) {
  if (image.empty()) Fail(ErrorCode::kInvalidArgument, "cannot save empty image");
  png_image out{};
  out.version = PNG_IMAGE_VERSION;
  out.width = static_cast<png_uint_32>(image.width());
  out.height = static_cast<png_uint_32>(image.height());
  out.format = PNG_FORMAT_GRAY;
  const int ok = png_image_write_to_file(&out, path.c_str(), 0,
                                         image.pixels().data(), 0, nullptr);
  if (ok == 0) {
    std::string message = out.message;
    png_image_free(&out);
    Fail(ErrorCode::kIo, "cannot write " + path.string() + ": " + message);
  }
}

GrayImage ResizeBilinear(const GrayImage& image, int out_width,
                         int out_height) {
  if (image.empty()) Fail(ErrorCode::kInvalidArgument, "resize of empty image");
  if (out_width < 1 || out_height < 1) {
    Fail(ErrorCode::kInvalidArgument, "resize target must be >= 1x1");
  }
  const int in_w = image.width();
  const int in_h = image.height();

  struct Tap {
    int lo;
    int hi;
    double frac;
  };
  auto taps = [](int in, int out) {
    std::vector<Tap> result(static_cast<std::size_t>(out));
    const double scale = static_cast<double>(in) / out;
    for (int i = 0; i < out; ++i) {
      double src = (i + 0.5) * scale - 0.5;
      src = std::clamp(src, 0.0, static_cast<double>(in - 1));
      const int lo = static_cast<int>(std::floor(src));
      const int hi = std::min(lo + 1, in - 1);
      result[i] = {lo, hi, src - lo};
    }
    return result;
  };
  const std::vector<Tap> xs = taps(in_w, out_width);
  const std::vector<Tap> ys = taps(in_h, out_height);

  GrayImage out(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    const Tap& ty = ys[y];
    for (int x = 0; x < out_width; ++x) {
      const Tap& tx = xs[x];
      const double top = (1.0 - tx.frac) * image.at(tx.lo, ty.lo) +
                         tx.frac * image.at(tx.hi, ty.lo);
      const double bottom = (1.0 - tx.frac) * image.at(tx.lo, ty.hi) +
                            tx.frac * image.at(tx.hi, ty.hi);
      out.at(x, y) = RoundClamp((1.0 - ty.frac) * top + ty.frac * bottom);
    }
  }
  return out;
}

}  // namespace diverscope
