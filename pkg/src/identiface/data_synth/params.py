"""Face parameter model.

Identity-determining attributes are a pure function of ``identity_seed``;
nuisance attributes (small translation, brightness, per-image seed) vary
per image.  Categorical attributes come from closed palettes; scalar
attributes are quantized multipliers so two identities never differ by an
unnameable amount.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..errors import ParameterError
from ..rng import rng_for

FACE_SHAPES = ("oval", "round", "square")
GENDERS = ("man", "woman")
AGES = ("young", "middle-aged", "elderly")
MARKS = (
    "no notable marks",
    "a mole on the left cheek",
    "a mole on the right cheek",
    "a mole on the forehead",
)

SKIN_TONES = {
    "pale": (0.95, 0.87, 0.80),
    "fair": (0.92, 0.80, 0.69),
    "tan": (0.85, 0.68, 0.52),
    "olive": (0.74, 0.60, 0.42),
    "brown": (0.58, 0.42, 0.30),
    "deep": (0.38, 0.26, 0.19),
}

HAIR_COLORS = {
    "black": (0.09, 0.08, 0.08),
    "dark brown": (0.25, 0.16, 0.10),
    "chestnut": (0.45, 0.28, 0.14),
    "blonde": (0.83, 0.69, 0.38),
    "red": (0.55, 0.22, 0.10),
    "gray": (0.62, 0.62, 0.64),
}

HAIR_LENGTHS = ("bald", "short", "medium", "long")
HAIR_TEXTURES = ("straight", "wavy", "curly")

IRIS_COLORS = {
    "brown": (0.35, 0.20, 0.10),
    "blue": (0.25, 0.45, 0.70),
    "green": (0.25, 0.50, 0.30),
    "gray": (0.45, 0.48, 0.52),
}

BROW_ARCHES = ("flat", "soft", "high")

# Quantized multiplier levels shared by all scalar features (low/medium/high).
SCALE_LEVELS = (0.8, 1.0, 1.2)

# Validation bounds: geometry stays inside the canvas and local feature
# masks stay disjoint for multipliers in these ranges.
_SCALE_BOUNDS = {
    "eye_size": (0.5, 1.6),
    "eye_spacing": (0.75, 1.2),
    "brow_thickness": (0.5, 1.8),
    "nose_height": (0.6, 1.4),
    "nose_width": (0.6, 1.3),
    "mouth_width": (0.6, 1.3),
    "lip_fullness": (0.5, 1.6),
    "ear_size": (0.6, 1.4),
}

MAX_TRANSLATION_PX = 2


@dataclass(frozen=True)
class Nuisance:
    """Per-image variation that does not change identity."""

    dx: int = 0
    dy: int = 0
    brightness: float = 1.0
    image_seed: int = 0

    def validate(self) -> None:
        if abs(self.dx) > MAX_TRANSLATION_PX or abs(self.dy) > MAX_TRANSLATION_PX:
            raise ParameterError(f"translation out of range: ({self.dx}, {self.dy})")
        if not 0.85 <= self.brightness <= 1.15:
            raise ParameterError(f"brightness out of range: {self.brightness}")


@dataclass(frozen=True)
class FaceParams:
    identity_seed: int
    gender: str = "man"
    age: str = "middle-aged"
    face_shape: str = "oval"
    skin_name: str = "fair"
    mark: str = "no notable marks"
    hair_length: str = "short"
    hair_color_name: str = "black"
    hair_texture: str = "straight"
    eye_size: float = 1.0
    eye_spacing: float = 1.0
    iris_name: str = "brown"
    brow_thickness: float = 1.0
    brow_arch: str = "soft"
    nose_height: float = 1.0
    nose_width: float = 1.0
    mouth_width: float = 1.0
    lip_fullness: float = 1.0
    ear_size: float = 1.0
    nuisance: Nuisance = field(default_factory=Nuisance)

    @property
    def skin_tone(self) -> tuple[float, float, float]:
        return SKIN_TONES[self.skin_name]

    @property
    def hair_color(self) -> tuple[float, float, float]:
        return HAIR_COLORS[self.hair_color_name]

    @property
    def iris_color(self) -> tuple[float, float, float]:
        return IRIS_COLORS[self.iris_name]

    def identity_signature(self) -> tuple:
        """All identity-determining fields (everything except nuisance)."""
        return (
            self.gender, self.age, self.face_shape, self.skin_name, self.mark,
            self.hair_length, self.hair_color_name, self.hair_texture,
            self.eye_size, self.eye_spacing, self.iris_name,
            self.brow_thickness, self.brow_arch,
            self.nose_height, self.nose_width,
            self.mouth_width, self.lip_fullness, self.ear_size,
        )

    def validate(self) -> None:
        checks = (
            (self.gender, GENDERS), (self.age, AGES),
            (self.face_shape, FACE_SHAPES), (self.skin_name, SKIN_TONES),
            (self.mark, MARKS), (self.hair_length, HAIR_LENGTHS),
            (self.hair_color_name, HAIR_COLORS),
            (self.hair_texture, HAIR_TEXTURES),
            (self.iris_name, IRIS_COLORS), (self.brow_arch, BROW_ARCHES),
        )
        for value, palette in checks:
            if value not in palette:
                raise ParameterError(f"invalid enum value {value!r}")
        for name, (lo, hi) in _SCALE_BOUNDS.items():
            val = getattr(self, name)
            if not lo <= val <= hi:
                raise ParameterError(f"{name}={val} outside [{lo}, {hi}]")
        self.nuisance.validate()


def _pick(rng: np.random.Generator, options) -> str:
    keys = list(options)
    return keys[int(rng.integers(len(keys)))]


def identity_params(identity_seed: int) -> FaceParams:
    """Identity attributes derived deterministically from the seed alone."""
    rng = rng_for(identity_seed, "identity-attributes")
    return FaceParams(
        identity_seed=identity_seed,
        gender=_pick(rng, GENDERS),
        age=_pick(rng, AGES),
        face_shape=_pick(rng, FACE_SHAPES),
        skin_name=_pick(rng, SKIN_TONES),
        mark=_pick(rng, MARKS),
        hair_length=_pick(rng, HAIR_LENGTHS),
        hair_color_name=_pick(rng, HAIR_COLORS),
        hair_texture=_pick(rng, HAIR_TEXTURES),
        eye_size=float(rng.choice(SCALE_LEVELS)),
        eye_spacing=float(rng.choice(SCALE_LEVELS)),
        iris_name=_pick(rng, IRIS_COLORS),
        brow_thickness=float(rng.choice(SCALE_LEVELS)),
        brow_arch=_pick(rng, BROW_ARCHES),
        nose_height=float(rng.choice(SCALE_LEVELS)),
        nose_width=float(rng.choice(SCALE_LEVELS)),
        mouth_width=float(rng.choice(SCALE_LEVELS)),
        lip_fullness=float(rng.choice(SCALE_LEVELS)),
        ear_size=float(rng.choice(SCALE_LEVELS)),
    )


def sample_nuisance(rng: np.random.Generator, image_seed: int) -> Nuisance:
    return Nuisance(
        dx=int(rng.integers(-MAX_TRANSLATION_PX, MAX_TRANSLATION_PX + 1)),
        dy=int(rng.integers(-MAX_TRANSLATION_PX, MAX_TRANSLATION_PX + 1)),
        brightness=float(rng.uniform(0.9, 1.1)),
        image_seed=image_seed,
    )


def with_nuisance(params: FaceParams, nuisance: Nuisance) -> FaceParams:
    return replace(params, nuisance=nuisance)
