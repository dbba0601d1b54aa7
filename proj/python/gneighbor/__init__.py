"""Variable-pixel G-neighbor denoising filter.

Edge-aware salt-and-pepper filtering over uint8 numpy arrays, full- and
reduced-reference quality metrics (MSE / PSNR / SSIM), and a behavioral
gate-level simulator of the memristive G-neighbor identification pipeline.
"""

from gneighbor._core import (
    CircleRoi,
    Crossbar,
    RectRoi,
    add_salt_pepper,
    area_power,
    evaluate,
    filter_image,
    gneighbor_mask,
    hw_compare_leq,
    hw_verify,
    hw_xor,
    load_pgm,
    load_pnm,
    pad,
    pipeline_pixel,
    pixel_distance,
    psnr_from_ssim,
    roi_mask,
    save_pgm,
    square_filter,
)

__all__ = [
    "CircleRoi",
    "Crossbar",
    "RectRoi",
    "add_salt_pepper",
    "area_power",
    "evaluate",
    "filter_image",
    "gneighbor_mask",
    "hw_compare_leq",
    "hw_verify",
    "hw_xor",
    "load_pgm",
    "load_pnm",
    "pad",
    "pipeline_pixel",
    "pixel_distance",
    "psnr_from_ssim",
    "roi_mask",
    "save_pgm",
    "square_filter",
]

__version__ = "0.1.0"
