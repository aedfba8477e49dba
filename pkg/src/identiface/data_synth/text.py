"""Structured 8-region text descriptions and the global/local split.

Region order: Basic Info, Overview, Hair, Eyes, Eyebrows, Mouth, Nose,
Ears.  Global text = regions 0-1; local text j = region 0 + region j+2.
Concatenation uses a single space joiner.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from .params import FaceParams

N_REGIONS = 8
N_LOCAL = 6
DEFAULT_LTR = 0.3


@dataclass(frozen=True)
class StructuredText:
    regions: tuple[str, ...]

    def __post_init__(self):
        if len(self.regions) != N_REGIONS or any(not r for r in self.regions):
            raise ParameterError("structured text needs 8 non-empty regions")


def _level(value: float, words: tuple[str, str, str]) -> str:
    idx = int(np.argmin([abs(value - a) for a in (0.8, 1.0, 1.2)]))
    return words[idx]


def render_structured_text(params: FaceParams) -> StructuredText:
    p = params
    article = "an" if p.age[0] in "aeiou" else "a"
    basic = f"{article} {p.age} {p.gender}"
    overview = f"{p.face_shape} face with {p.skin_name} skin, {p.mark}"
    if p.hair_length == "bald":
        hair = "a bald head with no hair"
    else:
        hair = f"{p.hair_length} {p.hair_texture} {p.hair_color_name} hair"
    eyes = "{} {} eyes with {} irises".format(
        _level(p.eye_size, ("small", "medium-sized", "large")),
        _level(p.eye_spacing, ("close-set", "evenly-spaced", "wide-set")),
        p.iris_name)
    brows = "{} eyebrows with a {} arch".format(
        _level(p.brow_thickness, ("thin", "medium", "thick")), p.brow_arch)
    mouth = "a {} mouth with {} lips".format(
        _level(p.mouth_width, ("narrow", "medium-width", "wide")),
        _level(p.lip_fullness, ("thin", "medium", "full")))
    nose = "a {} {} nose".format(
        _level(p.nose_height, ("short", "medium-length", "long")),
        _level(p.nose_width, ("narrow", "moderately-wide", "wide")))
    ears = "{} ears".format(_level(p.ear_size, ("small", "average-sized", "large")))
    return StructuredText(regions=(basic, overview, hair, eyes, brows, mouth,
                                   nose, ears))


def split_text(st: StructuredText, j: int) -> tuple[str, str]:
    """(global, local-j) pair; local j draws on region j+2."""
    if not 0 <= j < N_LOCAL:
        raise ParameterError(f"local index {j} outside 0..{N_LOCAL - 1}")
    glo = st.regions[0] + " " + st.regions[1]
    loc = st.regions[0] + " " + st.regions[j + 2]
    return glo, loc


def global_text(st: StructuredText) -> str:
    return split_text(st, 0)[0]


def sample_training_text(st: StructuredText, ltr: float,
                         rng: np.random.Generator) -> str:
    """Local text with probability ``ltr`` (j uniform), else global text."""
    if not 0.0 <= ltr <= 1.0:
        raise ParameterError(f"ltr={ltr} outside [0, 1]")
    if rng.random() < ltr:
        j = int(rng.integers(N_LOCAL))
        return split_text(st, j)[1]
    return split_text(st, 0)[0]
