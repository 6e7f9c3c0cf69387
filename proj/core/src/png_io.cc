// Copyright 2026 The splkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "splkit/png_io.h"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "splkit/errors.h"

namespace splkit {

unsigned char QuantizeSample(double v) {
  if (std::isnan(v)) return 0;
  return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

ImageBuffer LoadImage(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(probe)),
                                   std::istreambuf_iterator<char>());
  if (bytes.empty()) throw DecodeError(path.string() + ": empty file");

  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw DecodeError(path.string() + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  const bool alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  // Keep the file's own layout so libpng does no colour-space conversion;
  // alpha is discarded afterwards instead of composited.
  if (color) {
    image.format = alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
  } else {
    image.format = alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY;
  }
  const int stride_channels = PNG_IMAGE_SAMPLE_CHANNELS(image.format);
  std::vector<png_byte> pixels(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw DecodeError(path.string() + ": " + msg);
  }

  const int w = static_cast<int>(image.width);
  const int h = static_cast<int>(image.height);
  const int channels = color ? 3 : 1;
  ImageBuffer out(w, h, channels);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const png_byte* px =
          &pixels[(static_cast<std::size_t>(y) * w + x) * stride_channels];
      for (int c = 0; c < channels; ++c) out.at(c, y, x) = px[c] / 255.0;
    }
  }
  return out;
}

void SaveImage(const ImageBuffer& img, const std::filesystem::path& path) {
  Require(img.channels() == 1 || img.channels() == 3,
          "only 1- or 3-channel images can be saved");
  const int channels = img.channels();
  std::vector<png_byte> pixels(img.pixel_count() * channels);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < channels; ++c) {
        pixels[(static_cast<std::size_t>(y) * img.width() + x) * channels + c] =
            QuantizeSample(img.at(c, y, x));
      }
    }
  }

  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  FILE* file = std::fopen(path.string().c_str(), "wb");
  if (file == nullptr) throw IoError("cannot write " + path.string());
  const int ok = png_image_write_to_stdio(&image, file, 0, pixels.data(), 0,
                                          nullptr);
  const bool closed = std::fclose(file) == 0;
  if (!ok || !closed) {
    std::string msg = ok ? "close failed" : image.message;
    throw IoError("cannot write " + path.string() + ": " + msg);
  }
}

}  // namespace splkit
