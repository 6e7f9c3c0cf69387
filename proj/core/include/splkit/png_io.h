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


#ifndef SPLKIT_PNG_IO_H_
#define SPLKIT_PNG_IO_H_

#include <filesystem>

#include "splkit/image.h"

namespace splkit {

// Reads an 8-bit PNG. Gray files give one channel, color files three; alpha
// is dropped. Samples are v/255.
//
// Throws IoError when the file cannot be read and DecodeError when it is not
// a valid PNG.
ImageBuffer LoadImage(const std::filesystem::path& path);

// Writes a 1- or 3-channel buffer as an 8-bit PNG. Samples are clamped to
// [0,1] and rounded to the nearest of 256 levels.
void SaveImage(const ImageBuffer& img, const std::filesystem::path& path);

// The 8-bit code SaveImage stores for a sample.
unsigned char QuantizeSample(double v);

}  // namespace splkit

#endif  // SPLKIT_PNG_IO_H_
