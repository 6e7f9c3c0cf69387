#!/usr/bin/env python3
# Copyright 2026 The splkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates tests/data/corpus from the scikit-image sample photographs.

Each photo is center-cropped to a square, resized to 256x256 with
anti-aliasing, promoted to RGB and written as an 8-bit PNG.
"""

import argparse
import pathlib

import numpy as np
import skimage.data
from skimage.io import imsave
from skimage.transform import resize

PHOTOS = [
    "astronaut", "brick", "camera", "chelsea", "coffee", "coins", "grass",
    "gravel", "horse", "immunohistochemistry", "moon", "rocket",
]


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument("--out", default=str(
      pathlib.Path(__file__).resolve().parent.parent / "tests/data/corpus"))
  parser.add_argument("--size", type=int, default=256)
  args = parser.parse_args()
  out = pathlib.Path(args.out)
  out.mkdir(parents=True, exist_ok=True)
  for name in PHOTOS:
    img = getattr(skimage.data, name)()
    img = img.astype(np.float64) / (255.0 if img.dtype == np.uint8 else 1.0)
    if img.ndim == 2:
      img = np.stack([img] * 3, axis=-1)
    img = img[..., :3]
    h, w = img.shape[:2]
    s = min(h, w)
    img = img[(h - s) // 2:(h - s) // 2 + s, (w - s) // 2:(w - s) // 2 + s]
    img = resize(img, (args.size, args.size), anti_aliasing=True)
    img = np.clip(np.round(img * 255.0), 0, 255).astype(np.uint8)
    imsave(out / f"{name}.png", img, check_contrast=False)


if __name__ == "__main__":
  main()
