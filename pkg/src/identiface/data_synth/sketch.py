"""Deterministic contour sketch of the prominent facial features.

Binary single-channel output: background 1.0, strokes 0.0.  Imperfection
comes from seeded stroke-width jitter and 10% dropout of secondary strokes;
the face outline and eye contours are always drawn.
"""

from __future__ import annotations

import numpy as np
from PIL import Image, ImageDraw

from .params import FaceParams
from .render import _ell_box, face_layout, jitter_rng

_DROPOUT_P = 0.10


def make_sketch(params: FaceParams, canvas: int = 64) -> np.ndarray:
    params.validate()
    layout = face_layout(params, canvas)
    rng = jitter_rng(params)
    img = Image.new("L", (canvas, canvas), 255)
    draw = ImageDraw.Draw(img)
    s = canvas
    cx, cy = layout["center"]
    ax, ay = layout["face_axes"]

    def width() -> int:
        return max(1, canvas // 64) + int(rng.integers(0, 2))

    def keep() -> bool:
        return rng.random() >= _DROPOUT_P

    # face outline: always drawn
    if params.face_shape == "square":
        draw.rounded_rectangle([(cx - ax) * s, (cy - ay) * s,
                                (cx + ax) * s, (cy + ay) * s],
                               radius=0.07 * s, outline=0, width=width())
    else:
        draw.ellipse(_ell_box(cx, cy, ax, ay, s), outline=0, width=width())

    # hairline / cap
    if keep():
        pad = layout["hair_pad"]
        hl = layout["hairline_y"]
        w = width()
        draw.line([(cx - ax * 0.8) * s, hl * s, (cx + ax * 0.8) * s, hl * s],
                  fill=0, width=w)
        if params.hair_texture in ("wavy", "curly") and params.hair_length != "bald":
            step = 0.08 if params.hair_texture == "wavy" else 0.05
            x = cx - ax * 0.7
            while x < cx + ax * 0.7:
                draw.arc(_ell_box(x, hl - 0.02, step / 2, 0.02, s), 180, 360,
                         fill=0, width=1)
                x += step
        if layout["mane"]:
            mane = layout["mane"]
            for sign in (-1, 1):
                draw.ellipse(_ell_box(cx + sign * mane["dx"], mane["y"],
                                      mane["rx"], mane["ry"], s),
                             outline=0, width=w)
        elif params.hair_length != "bald":
            draw.arc(_ell_box(cx, cy, ax + pad, ay + pad, s), 200, 340,
                     fill=0, width=w)

    # eyes: always drawn (primary identifiable feature)
    e = layout["eyes"]
    for sign in (-1, 1):
        draw.ellipse(_ell_box(cx + sign * e["off"], e["y"], e["hw"], e["hh"], s),
                     outline=0, width=width())

    b = layout["brows"]
    arch_drop = {"flat": 0.0, "soft": 0.010, "high": 0.022}[b["arch"]]
    for sign in (-1, 1):
        if not keep():
            continue
        bx = cx + sign * b["off"]
        w = max(width(), int(round(2 * b["hh"] * s)))
        if arch_drop == 0.0:
            draw.line([(bx - b["hw"]) * s, b["y"] * s,
                       (bx + b["hw"]) * s, b["y"] * s], fill=0, width=w)
        else:
            draw.arc(_ell_box(bx, b["y"] + arch_drop + b["hh"], b["hw"],
                              arch_drop + b["hh"], s), 180, 360, fill=0, width=w)

    n = layout["nose"]
    if keep():
        draw.line([cx * s, n["top"] * s, cx * s, (n["top"] + n["len"]) * s],
                  fill=0, width=width())
    if keep():
        base_y = n["top"] + n["len"]
        draw.line([(cx - n["hw"]) * s, base_y * s, (cx + n["hw"]) * s, base_y * s],
                  fill=0, width=width())

    m = layout["mouth"]
    if keep():
        if params.lip_fullness >= 1.0:
            draw.ellipse(_ell_box(cx, m["y"], m["hw"], m["hh"], s),
                         outline=0, width=width())
        else:
            draw.line([(cx - m["hw"]) * s, m["y"] * s,
                       (cx + m["hw"]) * s, m["y"] * s], fill=0, width=width())

    ear = layout["ears"]
    for sign in (-1, 1):
        if not keep():
            continue
        ecx = cx + sign * (ax + ear["rx"])
        draw.ellipse(_ell_box(ecx, ear["y"], ear["rx"], ear["ry"], s),
                     outline=0, width=width())

    arr = np.asarray(img, dtype=np.float32) / 255.0
    return np.where(arr < 0.5, 0.0, 1.0).astype(np.float32)
