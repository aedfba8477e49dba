"""Pixel-space image helpers.

Images are numpy float32 arrays in [0, 1]: shape (H, W, 3) for color,
(H, W) for single-channel sketches and masks.  Model space is [-1, 1]
(affine x -> 2x - 1).  Disk format is 8-bit PNG; masks use 0/255.
"""

from __future__ import annotations

import numpy as np
from PIL import Image

from .errors import ParameterError, ShapeError

# Catmull-Rom bicubic coefficient.
BICUBIC_A = -0.5


def to_model_space(img: np.ndarray) -> np.ndarray:
    return (img.astype(np.float32) * 2.0) - 1.0


def to_unit_range(img: np.ndarray) -> np.ndarray:
    return np.clip((img.astype(np.float32) + 1.0) / 2.0, 0.0, 1.0)


def to_uint8(img: np.ndarray) -> np.ndarray:
    return np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)


def from_uint8(arr: np.ndarray) -> np.ndarray:
    return arr.astype(np.float32) / 255.0


def quantize_to_8bit(img: np.ndarray) -> np.ndarray:
    """Round-trip through uint8, as if saved to disk and reloaded."""
    return from_uint8(to_uint8(img))


def save_png(path, img: np.ndarray) -> None:
    arr = to_uint8(img)
    mode = "L" if arr.ndim == 2 else "RGB"
    Image.fromarray(arr, mode=mode).save(path)


def load_png(path) -> np.ndarray:
    with Image.open(path) as im:
        if im.mode not in ("L", "RGB"):
            im = im.convert("RGB" if im.mode in ("RGBA", "P", "CMYK") else "L")
        return from_uint8(np.asarray(im))


def _cubic_kernel(x: np.ndarray, a: float = BICUBIC_A) -> np.ndarray:
    ax = np.abs(x)
    ax2 = ax * ax
    ax3 = ax2 * ax
    near = (a + 2.0) * ax3 - (a + 3.0) * ax2 + 1.0
    far = a * ax3 - 5.0 * a * ax2 + 8.0 * a * ax - 4.0 * a
    return np.where(ax <= 1.0, near, np.where(ax < 2.0, far, 0.0))


def _resize_weights(n_in: int, n_out: int) -> np.ndarray:
    """Row-stochastic (n_out, n_in) bicubic resampling matrix.

    Downscaling widens the kernel support by the scale factor (antialias);
    rows are renormalized so constants are preserved exactly.
    """
    scale = n_in / n_out
    support = 2.0 * max(scale, 1.0)
    centers = (np.arange(n_out, dtype=np.float64) + 0.5) * scale - 0.5
    idx = np.arange(n_in, dtype=np.float64)
    dist = (centers[:, None] - idx[None, :]) / max(scale, 1.0)
    weights = _cubic_kernel(dist)
    weights[np.abs(centers[:, None] - idx[None, :]) > support] = 0.0
    weights /= weights.sum(axis=1, keepdims=True)
    return weights


def resize_bicubic(img: np.ndarray, size: tuple[int, int]) -> np.ndarray:
    """Separable Catmull-Rom resize to (height, width), float32 output."""
    h_out, w_out = size
    if h_out < 1 or w_out < 1:
        raise ParameterError(f"invalid target size {size}")
    h_in, w_in = img.shape[:2]
    wh = _resize_weights(h_in, h_out)
    ww = _resize_weights(w_in, w_out)
    arr = img.astype(np.float64)
    out = np.tensordot(wh, arr, axes=(1, 0))
    out = np.tensordot(ww, out, axes=(1, 1))
    # tensordot moved the width axis first; restore (H, W, [C]) order
    out = np.swapaxes(out, 0, 1)
    return out.astype(np.float32)


def area_downsample(img: np.ndarray, factor: int) -> np.ndarray:
    """Average over factor x factor blocks; spatial dims must divide evenly."""
    h, w = img.shape[:2]
    if h % factor or w % factor:
        raise ShapeError(f"shape {img.shape} not divisible by {factor}")
    shp = (h // factor, factor, w // factor, factor) + img.shape[2:]
    return img.reshape(shp).mean(axis=(1, 3)).astype(np.float32)


def psnr(a: np.ndarray, b: np.ndarray, peak: float = 1.0) -> float:
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    mse = float(np.mean((a.astype(np.float64) - b.astype(np.float64)) ** 2))
    if mse == 0.0:
        return float("inf")
    return 10.0 * np.log10(peak * peak / mse)
