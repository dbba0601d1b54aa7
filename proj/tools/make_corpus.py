#!/usr/bin/env python3
"""Regenerates tests/data/corpus from scikit-image's bundled standard images.

The corpus is committed, so this only needs to run when changing the image
set. Usage: python3 tools/make_corpus.py [outdir]
"""
import sys
from pathlib import Path

import numpy as np
import skimage.data as data


def to_gray_u8(img: np.ndarray) -> np.ndarray:
    if img.ndim == 3:
        rgb = img[..., :3].astype(np.float64)
        img = np.floor(0.299 * rgb[..., 0] + 0.587 * rgb[..., 1] + 0.114 * rgb[..., 2] + 0.5)
    return np.clip(img, 0, 255).astype(np.uint8)


def save_pgm(img: np.ndarray, path: Path) -> None:
    h, w = img.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode())
        f.write(img.tobytes())


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data/corpus")
    outdir.mkdir(parents=True, exist_ok=True)
    images = {
        "camera": data.camera,
        "coins": data.coins,
        "moon": data.moon,
        "page": data.page,
        "text": data.text,
        "grass": data.grass,
        "gravel": data.gravel,
    }
    for name, loader in images.items():
        img = to_gray_u8(np.asarray(loader()))
        save_pgm(img, outdir / f"{name}.pgm")
        print(f"{name}.pgm {img.shape[1]}x{img.shape[0]}")


if __name__ == "__main__":
    main()
