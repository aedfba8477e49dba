"""Corpus construction and the on-disk dataset manifest.

Layout under ``out_dir``:
    manifest.jsonl            one JSON object per record
    gt/ lq/ lq_raw/ sketch/   8-bit PNGs
    masks/<region>/           single-channel PNGs, 0/255

Manifest paths are relative to ``out_dir`` so the tree is relocatable.
Rebuilding with the same seed is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import DataError, ParameterError
from ..imaging import load_png, save_png
from ..rng import derive_seed, rng_for
from .degrade import DegradationConfig, make_lq, make_lq_raw
from .params import FaceParams, identity_params, sample_nuisance, with_nuisance
from .render import REGION_NAMES, synth_face
from .sketch import make_sketch
from .text import StructuredText, render_structured_text


@dataclass(frozen=True)
class CorpusRecord:
    image_id: str
    identity_id: str
    paths: dict
    text: StructuredText

    def to_json(self) -> dict:
        return {
            "image_id": self.image_id,
            "identity_id": self.identity_id,
            "paths": self.paths,
            "text": {"regions": list(self.text.regions)},
        }

    @staticmethod
    def from_json(obj: dict) -> "CorpusRecord":
        return CorpusRecord(
            image_id=obj["image_id"],
            identity_id=obj["identity_id"],
            paths=obj["paths"],
            text=StructuredText(regions=tuple(obj["text"]["regions"])),
        )


@dataclass
class DatasetManifest:
    root: Path
    records: list[CorpusRecord]

    def __post_init__(self):
        self.root = Path(self.root)
        ids = [r.image_id for r in self.records]
        if len(set(ids)) != len(ids):
            raise DataError("duplicate image_id in manifest")

    def identities(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.records:
            seen.setdefault(r.identity_id, None)
        return list(seen)

    def resolve(self, rel_path: str) -> Path:
        return self.root / rel_path

    def load_image(self, record: CorpusRecord, kind: str):
        return load_png(self.resolve(record.paths[kind]))

    def load_mask(self, record: CorpusRecord, region: str):
        return load_png(self.resolve(record.paths["masks"][region]))

    def save(self, path=None) -> Path:
        path = Path(path) if path else self.root / "manifest.jsonl"
        with open(path, "w", encoding="utf-8") as fh:
            for rec in self.records:
                fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
        return path

    @staticmethod
    def load(root) -> "DatasetManifest":
        root = Path(root)
        manifest_path = root / "manifest.jsonl"
        if not manifest_path.exists():
            raise DataError(f"no manifest at {manifest_path}")
        records = []
        with open(manifest_path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    records.append(CorpusRecord.from_json(json.loads(line)))
        return DatasetManifest(root=root, records=records)


def _unique_identities(n: int, seed: int) -> list[FaceParams]:
    """Identity draws with attribute-collision rejection, deterministic."""
    out: list[FaceParams] = []
    seen: set[tuple] = set()
    attempt = 0
    while len(out) < n:
        identity_seed = derive_seed(seed, "identity", len(out), attempt)
        params = identity_params(identity_seed)
        sig = params.identity_signature()
        if sig in seen:
            attempt += 1
            continue
        seen.add(sig)
        out.append(params)
        attempt = 0
    return out


def build_corpus(n_identities: int, images_per_identity: int, canvas: int,
                 seed: int, out_dir,
                 degradation: DegradationConfig | None = None) -> DatasetManifest:
    if n_identities < 2:
        raise ParameterError("need at least 2 identities")
    if images_per_identity < 1:
        raise ParameterError("need at least 1 image per identity")
    out_dir = Path(out_dir)
    for sub in ("gt", "lq", "lq_raw", "sketch"):
        (out_dir / sub).mkdir(parents=True, exist_ok=True)
    for region in REGION_NAMES:
        (out_dir / "masks" / region).mkdir(parents=True, exist_ok=True)

    base_degradation = degradation or DegradationConfig(
        resolution=min(24, canvas))
    records = []
    for ident_idx, base_params in enumerate(_unique_identities(n_identities, seed)):
        identity_id = f"id{ident_idx:04d}"
        text = render_structured_text(base_params)
        for img_idx in range(images_per_identity):
            image_id = f"{ident_idx:04d}_{img_idx:02d}"
            image_seed = derive_seed(seed, "image", ident_idx, img_idx)
            nuisance = sample_nuisance(
                rng_for(seed, "nuisance", ident_idx, img_idx), image_seed)
            params = with_nuisance(base_params, nuisance)

            gt, masks = synth_face(params, canvas)
            lq = make_lq(gt)
            lq_raw = make_lq_raw(gt, DegradationConfig(
                resolution=base_degradation.resolution,
                blur_sigma=base_degradation.blur_sigma,
                noise_sigma=base_degradation.noise_sigma,
                quant_step=base_degradation.quant_step,
                seed=image_seed))
            sketch = make_sketch(params, canvas)

            paths = {
                "gt": f"gt/{image_id}.png",
                "lq": f"lq/{image_id}.png",
                "lq_raw": f"lq_raw/{image_id}.png",
                "sketch": f"sketch/{image_id}.png",
                "masks": {region: f"masks/{region}/{image_id}.png"
                          for region in REGION_NAMES},
            }
            save_png(out_dir / paths["gt"], gt)
            save_png(out_dir / paths["lq"], lq)
            save_png(out_dir / paths["lq_raw"], lq_raw)
            save_png(out_dir / paths["sketch"], sketch)
            for region in REGION_NAMES:
                save_png(out_dir / paths["masks"][region],
                         masks[region].astype("float32"))
            records.append(CorpusRecord(image_id=image_id,
                                        identity_id=identity_id,
                                        paths=paths, text=text))

    manifest = DatasetManifest(root=out_dir, records=records)
    manifest.save()
    return manifest


def split_records(manifest: DatasetManifest, test_fraction: float,
                  seed: int) -> tuple[list[CorpusRecord], list[CorpusRecord]]:
    """Deterministic image-level train/test split, shuffled per identity so
    every identity keeps at least one training image when it has several."""
    rng = rng_for(seed, "split")
    by_identity: dict[str, list[CorpusRecord]] = {}
    for rec in manifest.records:
        by_identity.setdefault(rec.identity_id, []).append(rec)
    train, test = [], []
    for identity in sorted(by_identity):
        group = sorted(by_identity[identity], key=lambda r: r.image_id)
        order = rng.permutation(len(group))
        n_test = int(round(test_fraction * len(group)))
        if len(group) > 1:
            n_test = min(n_test, len(group) - 1)
        test_idx = set(int(i) for i in order[:n_test])
        for i, rec in enumerate(group):
            (test if i in test_idx else train).append(rec)
    return train, test
