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


#ifndef SPLKIT_IMAGE_H_
#define SPLKIT_IMAGE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace splkit {

// Planar H x W x C image of real samples. Values read from files lie in
// [0,1]; intermediate results may leave that range.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  ImageBuffer(int width, int height, int channels, double fill = 0.0);
  ImageBuffer(int width, int height, int channels, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }
  bool empty() const { return data_.empty(); }

  std::span<double> plane(int c);
  std::span<const double> plane(int c) const;
  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  double& at(int c, int y, int x) { return data_[index(c, y, x)]; }
  double at(int c, int y, int x) const { return data_[index(c, y, x)]; }
  // Single-channel shorthand.
  double& operator()(int y, int x) { return data_[index(0, y, x)]; }
  double operator()(int y, int x) const { return data_[index(0, y, x)]; }

  // Copy of channel `c` as a one-channel buffer.
  ImageBuffer Channel(int c) const;

  bool SameShape(const ImageBuffer& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }
  bool SameSize(const ImageBuffer& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  std::size_t index(int c, int y, int x) const {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// H x W soft weights in [0,1]. Construction clamps out-of-range input.
class MaskMap {
 public:
  MaskMap() = default;
  MaskMap(int width, int height, double fill = 0.0);
  MaskMap(int width, int height, std::vector<double> data);
  // Takes channel 0 of a one-channel buffer.
  static MaskMap FromPlane(const ImageBuffer& plane);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const double> data() const { return data_; }
  double operator()(int y, int x) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int y, int x, double v);

  double Mass() const;
  ImageBuffer ToPlane() const;
  bool Matches(const ImageBuffer& img) const {
    return width_ == img.width() && height_ == img.height();
  }

  friend bool operator==(const MaskMap&, const MaskMap&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

}  // namespace splkit

#endif  // SPLKIT_IMAGE_H_
