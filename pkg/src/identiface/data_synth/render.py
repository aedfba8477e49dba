"""Face rendering and per-region masks.

The layout is defined in canvas fractions and shared with the sketch
renderer.  Local-feature boxes keep real-valued margins between each
other, so the rounded half-open pixel boxes of the six local masks
(hair, eyes, eyebrows, mouth, nose, ears) are always pairwise disjoint;
hair may overlap only the full-face region.
"""

from __future__ import annotations

import numpy as np
from PIL import Image, ImageDraw

from ..errors import ParameterError
from ..imaging import area_downsample
from ..rng import rng_for
from .params import FaceParams

REGION_NAMES = (
    "basic_info", "overview", "hair", "eyes",
    "eyebrows", "mouth", "nose", "ears",
)

# Rendering supersample factor; masks are computed at target resolution.
_SS = 4

_BACKGROUND = (0.93, 0.93, 0.945)
_LIP_COLOR = (0.70, 0.35, 0.35)
_OUTLINE = (0.18, 0.14, 0.12)

_FACE_AXES = {
    "oval": (0.30, 0.38),
    "round": (0.34, 0.345),
    "square": (0.31, 0.35),
}


def face_layout(params: FaceParams, canvas: int) -> dict:
    """All feature geometry in canvas fractions, nuisance translation applied."""
    p = params
    shift_x = p.nuisance.dx / canvas
    shift_y = p.nuisance.dy / canvas
    cx, cy = 0.5 + shift_x, 0.54 + shift_y
    ax, ay = _FACE_AXES[p.face_shape]

    eye_off = 0.175 * p.eye_spacing
    eye_hw = 0.042 * p.eye_size
    eye_hh = 0.026 * p.eye_size
    eye_y = cy - 0.075

    brow_hw = 0.055
    brow_hh = 0.014 * p.brow_thickness
    brow_y = cy - 0.155

    nose_top = cy - 0.015
    nose_len = 0.085 * p.nose_height
    nose_hw = 0.040 * p.nose_width

    mouth_hw = 0.10 * p.mouth_width
    mouth_hh = 0.020 * p.lip_fullness
    mouth_y = cy + 0.16

    ear_rx = 0.027 * p.ear_size
    ear_ry = 0.058 * p.ear_size
    ear_y = cy - 0.01

    hairline = cy - (0.30 if p.hair_length == "bald" else 0.24)

    layout = {
        "canvas": canvas,
        "center": (cx, cy),
        "face_axes": (ax, ay),
        "hairline_y": hairline,
        "hair_pad": 0.035,
        "side_band": None,
        "mane": None,
        "brows": {"y": brow_y, "hw": brow_hw, "hh": brow_hh, "off": eye_off,
                  "arch": p.brow_arch},
        "eyes": {"y": eye_y, "off": eye_off, "hw": eye_hw, "hh": eye_hh},
        "nose": {"top": nose_top, "len": nose_len, "hw": nose_hw},
        "mouth": {"y": mouth_y, "hw": mouth_hw, "hh": mouth_hh},
        "ears": {"y": ear_y, "rx": ear_rx, "ry": ear_ry},
        "mark_pos": _mark_position(p, cx, cy),
    }
    if p.hair_length in ("medium", "long"):
        layout["side_band"] = {"x0": ax, "x1": ax + 0.05,
                               "y0": cy - 0.24, "y1": cy - 0.102}
    if p.hair_length == "long":
        layout["mane"] = {"dx": 0.26, "y": cy + 0.295, "rx": 0.09, "ry": 0.09}
    return layout


def _mark_position(p: FaceParams, cx: float, cy: float):
    if p.mark == "a mole on the left cheek":
        return (cx - 0.17, cy + 0.08)
    if p.mark == "a mole on the right cheek":
        return (cx + 0.17, cy + 0.08)
    if p.mark == "a mole on the forehead":
        return (cx, cy - 0.205)
    return None


# --------------------------- masks ---------------------------------------


def _px(v: float, canvas: int) -> int:
    return int(round(v * canvas))


def _rect_mask(canvas: int, x0, x1, y0, y1) -> np.ndarray:
    m = np.zeros((canvas, canvas), dtype=bool)
    xa, xb = max(_px(x0, canvas), 0), min(_px(x1, canvas), canvas)
    ya, yb = max(_px(y0, canvas), 0), min(_px(y1, canvas), canvas)
    if xb > xa and yb > ya:
        m[ya:yb, xa:xb] = True
    return m


def _ellipse_mask(canvas: int, cx, cy, rx, ry) -> np.ndarray:
    coords = (np.arange(canvas) + 0.5) / canvas
    x_grid, y_grid = np.meshgrid(coords, coords)
    return ((x_grid - cx) / rx) ** 2 + ((y_grid - cy) / ry) ** 2 <= 1.0


def build_region_masks(layout: dict, face_shape: str) -> dict[str, np.ndarray]:
    canvas = layout["canvas"]
    cx, cy = layout["center"]
    ax, ay = layout["face_axes"]

    if face_shape == "square":
        full = _rect_mask(canvas, cx - ax, cx + ax, cy - ay, cy + ay)
    else:
        full = _ellipse_mask(canvas, cx, cy, ax, ay)

    hair = _ellipse_mask(canvas, cx, cy, ax + layout["hair_pad"], ay + layout["hair_pad"])
    coords = (np.arange(canvas) + 0.5) / canvas
    hair &= coords[:, None] <= layout["hairline_y"]
    if layout["side_band"]:
        band = layout["side_band"]
        for sign in (-1, 1):
            x0 = cx + sign * band["x0"], cx + sign * band["x1"]
            hair |= _rect_mask(canvas, min(x0), max(x0), band["y0"], band["y1"])
    if layout["mane"]:
        mane = layout["mane"]
        for sign in (-1, 1):
            hair |= _ellipse_mask(canvas, cx + sign * mane["dx"], mane["y"],
                                  mane["rx"], mane["ry"])

    eyes = np.zeros((canvas, canvas), dtype=bool)
    e = layout["eyes"]
    for sign in (-1, 1):
        eyes |= _rect_mask(canvas, cx + sign * e["off"] - e["hw"] - 0.008,
                           cx + sign * e["off"] + e["hw"] + 0.008,
                           e["y"] - e["hh"] - 0.006, e["y"] + e["hh"] + 0.006)

    brows = np.zeros((canvas, canvas), dtype=bool)
    b = layout["brows"]
    for sign in (-1, 1):
        brows |= _rect_mask(canvas, cx + sign * b["off"] - b["hw"] - 0.004,
                            cx + sign * b["off"] + b["hw"] + 0.004,
                            b["y"] - b["hh"] - 0.004, b["y"] + b["hh"] + 0.004)

    n = layout["nose"]
    nose = _rect_mask(canvas, cx - n["hw"] - 0.006, cx + n["hw"] + 0.006,
                      n["top"], n["top"] + n["len"] + 0.006)

    m = layout["mouth"]
    mouth = _rect_mask(canvas, cx - m["hw"] - 0.010, cx + m["hw"] + 0.010,
                       m["y"] - m["hh"] - 0.006, m["y"] + m["hh"] + 0.006)

    ears = np.zeros((canvas, canvas), dtype=bool)
    ear = layout["ears"]
    for sign in (-1, 1):
        x_edge = cx + sign * ax
        x_out = cx + sign * (ax + 2 * ear["rx"] + 0.006)
        ears |= _rect_mask(canvas, min(x_edge, x_out), max(x_edge, x_out),
                           ear["y"] - ear["ry"] - 0.006, ear["y"] + ear["ry"] + 0.006)

    return {
        "basic_info": full.copy(),
        "overview": full,
        "hair": hair,
        "eyes": eyes,
        "eyebrows": brows,
        "mouth": mouth,
        "nose": nose,
        "ears": ears,
    }


# --------------------------- rendering ------------------------------------


def _rgb(color) -> tuple[int, int, int]:
    return tuple(int(round(c * 255)) for c in color)


def _scale(color, factor: float):
    return tuple(min(1.0, c * factor) for c in color)


def _ell_box(cx, cy, rx, ry, s):
    return [(cx - rx) * s, (cy - ry) * s, (cx + rx) * s, (cy + ry) * s]


def _draw_face(params: FaceParams, layout: dict, canvas: int) -> np.ndarray:
    s = canvas * _SS
    img = Image.new("RGB", (s, s), _rgb(_BACKGROUND))
    draw = ImageDraw.Draw(img)
    cx, cy = layout["center"]
    ax, ay = layout["face_axes"]
    skin = _rgb(params.skin_tone)
    hair_rgb = _rgb(params.hair_color)
    scalp = params.hair_length != "bald"

    if layout["mane"]:
        mane = layout["mane"]
        for sign in (-1, 1):
            draw.ellipse(_ell_box(cx + sign * mane["dx"], mane["y"],
                                  mane["rx"], mane["ry"], s), fill=hair_rgb)

    if params.face_shape == "square":
        draw.rounded_rectangle([(cx - ax) * s, (cy - ay) * s,
                                (cx + ax) * s, (cy + ay) * s],
                               radius=0.07 * s, fill=skin, outline=_rgb(_OUTLINE),
                               width=max(1, _SS // 2))
    else:
        draw.ellipse(_ell_box(cx, cy, ax, ay, s), fill=skin,
                     outline=_rgb(_OUTLINE), width=max(1, _SS // 2))

    # ears sit fully outside the face silhouette
    ear = layout["ears"]
    for sign in (-1, 1):
        ecx = cx + sign * (ax + ear["rx"])
        draw.ellipse(_ell_box(ecx, ear["y"], ear["rx"], ear["ry"], s),
                     fill=_rgb(_scale(params.skin_tone, 0.94)),
                     outline=_rgb(_OUTLINE), width=max(1, _SS // 2))

    if scalp:
        pad = layout["hair_pad"]
        cap = Image.new("L", (s, s), 0)
        cap_draw = ImageDraw.Draw(cap)
        cap_draw.ellipse(_ell_box(cx, cy, ax + pad, ay + pad, s), fill=255)
        cut = int(layout["hairline_y"] * s)
        cap_np = np.array(cap)
        cap_np[cut:, :] = 0
        img.paste(Image.new("RGB", (s, s), hair_rgb), (0, 0),
                  Image.fromarray(cap_np))
        if layout["side_band"]:
            band = layout["side_band"]
            for sign in (-1, 1):
                xs = sorted((cx + sign * band["x0"], cx + sign * band["x1"]))
                draw.rectangle([xs[0] * s, band["y0"] * s, xs[1] * s, band["y1"] * s],
                               fill=hair_rgb)
        if params.hair_texture == "wavy":
            shade = _rgb(_scale(params.hair_color, 0.72))
            for k in (0.30, 0.55):
                y = (cy - ay - pad) + k * (layout["hairline_y"] - (cy - ay - pad))
                draw.arc(_ell_box(cx, y + 0.03, 0.16, 0.035, s), 180, 360,
                         fill=shade, width=max(1, _SS // 2))
        elif params.hair_texture == "curly":
            shade = _rgb(_scale(params.hair_color, 0.72))
            top = cy - ay - pad
            for k in range(5):
                bx = cx - 0.16 + 0.08 * k
                by = top + 0.035 + 0.02 * (k % 2)
                draw.ellipse(_ell_box(bx, by, 0.016, 0.016, s), outline=shade,
                             width=max(1, _SS // 2))

    brow_rgb = _rgb(_scale(params.hair_color, 0.6)) if scalp else _rgb(_OUTLINE)
    b = layout["brows"]
    arch_drop = {"flat": 0.0, "soft": 0.010, "high": 0.022}[b["arch"]]
    for sign in (-1, 1):
        bx = cx + sign * b["off"]
        if arch_drop == 0.0:
            draw.rectangle([(bx - b["hw"]) * s, (b["y"] - b["hh"]) * s,
                            (bx + b["hw"]) * s, (b["y"] + b["hh"]) * s],
                           fill=brow_rgb)
        else:
            draw.arc(_ell_box(bx, b["y"] + arch_drop + b["hh"], b["hw"],
                              arch_drop + b["hh"], s),
                     180, 360, fill=brow_rgb,
                     width=max(1, int(round(2 * b["hh"] * s))))

    e = layout["eyes"]
    for sign in (-1, 1):
        ex = cx + sign * e["off"]
        draw.ellipse(_ell_box(ex, e["y"], e["hw"], e["hh"], s),
                     fill=(250, 250, 250), outline=_rgb(_OUTLINE),
                     width=max(1, _SS // 2))
        draw.ellipse(_ell_box(ex, e["y"], e["hh"] * 0.85, e["hh"] * 0.85, s),
                     fill=_rgb(params.iris_color))

    n = layout["nose"]
    nose_rgb = _rgb(_scale(params.skin_tone, 0.72))
    draw.line([(cx * s, n["top"] * s), (cx * s, (n["top"] + n["len"]) * s)],
              fill=nose_rgb, width=max(1, _SS // 2))
    base_y = n["top"] + n["len"]
    draw.line([((cx - n["hw"]) * s, base_y * s), ((cx + n["hw"]) * s, base_y * s)],
              fill=nose_rgb, width=max(1, _SS // 2))

    m = layout["mouth"]
    draw.ellipse(_ell_box(cx, m["y"], m["hw"], m["hh"], s), fill=_rgb(_LIP_COLOR))

    if layout["mark_pos"]:
        mx, my = layout["mark_pos"]
        draw.ellipse(_ell_box(mx, my, 0.011, 0.011, s), fill=_rgb(_OUTLINE))

    out = np.asarray(img, dtype=np.float32) / 255.0
    return area_downsample(out, _SS)


def synth_face(params: FaceParams, canvas: int = 64):
    """Render one face; returns ([0,1] HxWx3 image, dict of 8 boolean masks)."""
    if canvas < 32 or canvas & (canvas - 1):
        raise ParameterError(f"canvas must be a power of two >= 32, got {canvas}")
    params.validate()
    layout = face_layout(params, canvas)
    img = _draw_face(params, layout, canvas)
    img = np.clip(img * params.nuisance.brightness, 0.0, 1.0).astype(np.float32)
    masks = build_region_masks(layout, params.face_shape)
    _check_disjoint(masks)
    return img, masks


_LOCAL_REGIONS = ("hair", "eyes", "eyebrows", "mouth", "nose", "ears")


def _check_disjoint(masks: dict) -> None:
    for i, a in enumerate(_LOCAL_REGIONS):
        for b in _LOCAL_REGIONS[i + 1:]:
            if np.any(masks[a] & masks[b]):
                raise AssertionError(f"local masks overlap: {a} vs {b}")


def jitter_rng(params: FaceParams) -> np.random.Generator:
    """Per-image stream for stroke jitter / dropout, seeded by the nuisance."""
    return rng_for(params.nuisance.image_seed, "sketch-jitter", params.identity_seed)
