"""Low-quality image synthesis.

``make_lq`` is the clean surveillance stand-in: bicubic resize to 8x8 and
back.  ``make_lq_raw`` adds camera-like degradations at a higher
intermediate resolution (default 24): downsample -> blur -> noise ->
quantize -> upsample, in that fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import gaussian_filter

from ..errors import ParameterError, ShapeError
from ..imaging import resize_bicubic
from ..rng import rng_for

LQ_SIZE = 8


def make_lq(img: np.ndarray) -> np.ndarray:
    h, w = img.shape[:2]
    if h != w:
        raise ShapeError(f"expected square image, got {img.shape}")
    if h < LQ_SIZE:
        raise ShapeError(f"side {h} below minimum {LQ_SIZE}")
    small = resize_bicubic(img, (LQ_SIZE, LQ_SIZE))
    return np.clip(resize_bicubic(small, (h, w)), 0.0, 1.0)


@dataclass(frozen=True)
class DegradationConfig:
    resolution: int = 24
    blur_sigma: float = 0.5
    noise_sigma: float = 0.04
    quant_step: float = 1.0 / 32.0  # 0 disables quantization
    seed: int = 0


def make_lq_raw(img: np.ndarray, cfg: DegradationConfig = DegradationConfig()) -> np.ndarray:
    h, w = img.shape[:2]
    if h != w:
        raise ShapeError(f"expected square image, got {img.shape}")
    if cfg.resolution > h:
        raise ParameterError(
            f"intermediate resolution {cfg.resolution} exceeds input side {h}")
    out = resize_bicubic(img, (cfg.resolution, cfg.resolution))
    if cfg.blur_sigma > 0:
        sigma = (cfg.blur_sigma, cfg.blur_sigma) + (0,) * (out.ndim - 2)
        out = gaussian_filter(out, sigma=sigma)
    if cfg.noise_sigma > 0:
        rng = rng_for(cfg.seed, "lq-raw-noise")
        out = out + rng.normal(0.0, cfg.noise_sigma, size=out.shape).astype(np.float32)
    if cfg.quant_step > 0:
        out = np.round(out / cfg.quant_step) * cfg.quant_step
    out = np.clip(out, 0.0, 1.0)
    return np.clip(resize_bicubic(out, (h, w)), 0.0, 1.0)
