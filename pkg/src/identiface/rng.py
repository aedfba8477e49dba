"""Deterministic seed derivation.

Every random draw in the system flows from one explicit 64-bit master seed.
Subsystems get independent streams by deriving child seeds from the master
plus a string path, so adding a consumer never shifts another's stream.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(master: int, *tags) -> int:
    """Stable 63-bit child seed from a master seed and a tag path."""
    key = str(int(master)) + "/" + "/".join(str(t) for t in tags)
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") & (2**63 - 1)


def rng_for(master: int, *tags) -> np.random.Generator:
    return np.random.default_rng(derive_seed(master, *tags))
