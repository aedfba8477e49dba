"""Procedural labeled face corpus: GT renders, LQ degradations, sketches,
8-region structured text, per-region masks, and identity labels."""

from .params import FaceParams, Nuisance, identity_params, sample_nuisance
from .render import REGION_NAMES, synth_face
from .sketch import make_sketch
from .degrade import DegradationConfig, make_lq, make_lq_raw
from .text import (
    StructuredText,
    render_structured_text,
    sample_training_text,
    split_text,
)
from .corpus import CorpusRecord, DatasetManifest, build_corpus

__all__ = [
    "FaceParams",
    "Nuisance",
    "identity_params",
    "sample_nuisance",
    "REGION_NAMES",
    "synth_face",
    "make_sketch",
    "DegradationConfig",
    "make_lq",
    "make_lq_raw",
    "StructuredText",
    "render_structured_text",
    "split_text",
    "sample_training_text",
    "CorpusRecord",
    "DatasetManifest",
    "build_corpus",
]
