#!/usr/bin/env python3
"""Build the 512x512 grayscale PGM test corpus from scikit-image's bundled photos."""
import pathlib
import sys

import numpy as np
from skimage import color, data, transform, util

IMAGES = ["camera", "moon", "astronaut", "coffee", "chelsea",
          "brick", "grass", "gravel", "rocket", "motorcycle_left"]
SIZE = 512


def load(name):
    if name == "motorcycle_left":
        img = data.stereo_motorcycle()[0]
    else:
        img = getattr(data, name)()
    if img.ndim == 3:
        img = color.rgb2gray(img[..., :3])
    return util.img_as_float(img)


def square(img):
    h, w = img.shape
    scale = SIZE / min(h, w)
    if scale != 1.0:
        img = transform.resize(img, (round(h * scale), round(w * scale)),
                               anti_aliasing=True)
    h, w = img.shape
    top, left = (h - SIZE) // 2, (w - SIZE) // 2
    return img[top:top + SIZE, left:left + SIZE]


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in IMAGES:
        px = np.clip(np.rint(square(load(name)) * 255.0), 0, 255).astype(np.uint8)
        header = f"P5\n{SIZE} {SIZE}\n255\n".encode()
        (out / f"{name}.pgm").write_bytes(header + px.tobytes())
        print(name, px.mean().round(2), px.std().round(2))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/corpus")
