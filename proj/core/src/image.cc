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


#include "splkit/image.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "splkit/errors.h"

namespace splkit {
namespace {

void CheckDims(int width, int height) {
  Require(width >= 1 && height >= 1,
          "image dimensions must be positive, got " + std::to_string(width) +
              "x" + std::to_string(height));
}

}  // namespace

ImageBuffer::ImageBuffer(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  CheckDims(width, height);
  Require(channels >= 1, "image needs at least one channel");
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

ImageBuffer::ImageBuffer(int width, int height, int channels,
                         std::vector<double> data)
    : width_(width), height_(height), channels_(channels),
      data_(std::move(data)) {
  CheckDims(width, height);
  Require(channels >= 1, "image needs at least one channel");
  Require(data_.size() == static_cast<std::size_t>(width) * height * channels,
          "sample count does not match width*height*channels");
}

std::span<double> ImageBuffer::plane(int c) {
  return std::span<double>(data_).subspan(c * pixel_count(), pixel_count());
}

std::span<const double> ImageBuffer::plane(int c) const {
  return std::span<const double>(data_).subspan(c * pixel_count(),
                                                pixel_count());
}

ImageBuffer ImageBuffer::Channel(int c) const {
  Require(c >= 0 && c < channels_, "channel index out of range");
  auto p = plane(c);
  return ImageBuffer(width_, height_, 1, std::vector<double>(p.begin(), p.end()));
}

MaskMap::MaskMap(int width, int height, double fill)
    : MaskMap(width, height,
              std::vector<double>(static_cast<std::size_t>(std::max(width, 0)) *
                                      std::max(height, 0),
                                  fill)) {}

MaskMap::MaskMap(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  CheckDims(width, height);
  Require(data_.size() == static_cast<std::size_t>(width) * height,
          "mask sample count does not match width*height");
  for (double& v : data_) v = std::clamp(v, 0.0, 1.0);
}

MaskMap MaskMap::FromPlane(const ImageBuffer& plane) {
  Require(plane.channels() == 1, "mask must be built from a 1-channel plane");
  auto p = plane.plane(0);
  return MaskMap(plane.width(), plane.height(),
                 std::vector<double>(p.begin(), p.end()));
}

void MaskMap::set(int y, int x, double v) {
  data_[static_cast<std::size_t>(y) * width_ + x] = std::clamp(v, 0.0, 1.0);
}

double MaskMap::Mass() const {
  return std::accumulate(data_.begin(), data_.end(), 0.0);
}

ImageBuffer MaskMap::ToPlane() const {
  return ImageBuffer(width_, height_, 1, data_);
}

}  // namespace splkit
