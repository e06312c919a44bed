#!/usr/bin/env python3
"""Generate the grayscale test corpus from scikit-image's bundled photographs.

Outputs binary (P5) PGM files under testdata/:
  covers/   ten 1024x1024 cover images
  secrets/  four 512x512 secret images
  desk/     one 256x256 cover and four 128x128 secrets for fast tests

The corpus is committed to the repository; this script documents provenance
and allows regeneration (requires scikit-image).
"""
import pathlib

import numpy as np
import skimage.data as skd
from skimage.color import rgb2gray
from skimage.transform import resize

COVERS = ["camera", "moon", "brick", "grass", "gravel", "cell", "coins",
          "clock", "astronaut", "coffee"]
SECRETS = ["camera", "moon", "astronaut", "cat"]
DESK_COVER = "clock"


def gray(im):
    if im.ndim == 3:
        im = rgb2gray(im) * 255.0
    return im.astype(np.float64)


def to_size(im, n):
    im = gray(im)
    if im.shape != (n, n):
        im = resize(im, (n, n), order=1, anti_aliasing=(im.shape[0] > n),
                    preserve_range=True)
    return np.clip(np.floor(im + 0.5), 0, 255).astype(np.uint8)


def save_pgm(path, im):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (im.shape[1], im.shape[0]))
        f.write(im.tobytes())


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "testdata"
    for name in COVERS:
        save_pgm(root / "covers" / f"cover_{name}_1024.pgm",
                 to_size(getattr(skd, name)(), 1024))
    for name in SECRETS:
        save_pgm(root / "secrets" / f"secret_{name}_512.pgm",
                 to_size(getattr(skd, name)(), 512))
    save_pgm(root / "desk" / f"cover_{DESK_COVER}_256.pgm",
             to_size(getattr(skd, DESK_COVER)(), 256))
    for name in SECRETS:
        save_pgm(root / "desk" / f"secret_{name}_128.pgm",
                 to_size(getattr(skd, name)(), 128))
    print(f"wrote corpus under {root}")


if __name__ == "__main__":
    main()
