"""Ternary feature inventory and vector arithmetic.

Every feature slot holds +1 (present), -1 (absent) or 0 (not applicable).
Vectors are immutable value objects; writes return a new vector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DataFileError,
    InventoryMismatchError,
    UnknownFeatureError,
    ZeroVectorError,
)

PLUS, MINUS, ZERO = 1, -1, 0
TERNARY = frozenset((PLUS, MINUS, ZERO))

_SIGNATURE_CHARS = {PLUS: "+", MINUS: "-", ZERO: "0"}


@dataclass(frozen=True)
class FeatureInventory:
    """Ordered, duplicate-free list of feature names."""

    features: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        feats = tuple(self.features)
        if not feats:
            raise ValueError("feature inventory must not be empty")
        if len(set(feats)) != len(feats):
            dupes = sorted({f for f in feats if feats.count(f) > 1})
            raise ValueError(f"duplicate feature names: {', '.join(dupes)}")
        object.__setattr__(self, "features", feats)
        object.__setattr__(self, "index", {name: i for i, name in enumerate(feats)})

    def __len__(self):
        return len(self.features)

    def __iter__(self):
        return iter(self.features)

    def __contains__(self, name):
        return name in self.index

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownFeatureError(name) from None

    @classmethod
    def from_file(cls, path) -> "FeatureInventory":
        """Read one feature name per line; blank lines and ``#`` comments are skipped."""
        names = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                names.append(line)
        try:
            return cls(tuple(names))
        except ValueError as exc:
            raise DataFileError(f"{path}: {exc}") from None

    @classmethod
    def default(cls) -> "FeatureInventory":
        return _default_inventory()


@lru_cache(maxsize=None)
def _default_inventory():
    return FeatureInventory.from_file(resources.files("phonovec") / "data" / "features.txt")


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[int, ...]
    inventory: FeatureInventory = field(repr=False)

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != len(self.inventory):
            raise ValueError(
                f"vector length {len(values)} does not match inventory size {len(self.inventory)}"
            )
        bad = [v for v in values if v not in TERNARY]
        if bad:
            raise ValueError(f"non-ternary values in vector: {bad[:5]}")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, name: str) -> int:
        return self.values[self.inventory.position(name)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.inventory.features, self.values))

    def positive(self) -> frozenset[str]:
        return frozenset(f for f, v in zip(self.inventory.features, self.values) if v == PLUS)

    def nonzero(self) -> frozenset[str]:
        return frozenset(f for f, v in zip(self.inventory.features, self.values) if v != ZERO)

    def signature(self) -> str:
        return signature(self)


def new_zero_vector(inventory: FeatureInventory | None = None) -> FeatureVector:
    inventory = inventory or FeatureInventory.default()
    return FeatureVector((ZERO,) * len(inventory), inventory)


def set_feature(v: FeatureVector, name: str, val: int) -> FeatureVector:
    """Return a copy of ``v`` with feature ``name`` overwritten by ``val``."""
    if val not in TERNARY:
        raise ValueError(f"not a ternary value: {val!r}")
    pos = v.inventory.position(name)
    values = list(v.values)
    values[pos] = val
    return FeatureVector(tuple(values), v.inventory)


def _check_same(a: FeatureVector, b: FeatureVector):
    if a.inventory.features != b.inventory.features:
        raise InventoryMismatchError("vectors belong to different feature inventories")


def cosine_similarity(a: FeatureVector, b: FeatureVector) -> float:
    _check_same(a, b)
    dot = na = nb = 0
    for x, y in zip(a.values, b.values):
        dot += x * y
        na += x * x
        nb += y * y
    if na == 0 or nb == 0:
        raise ZeroVectorError("cosine similarity is undefined for a zero vector")
    # Same expression as the matrix kernels so pairwise and bulk results agree bit for bit.
    return dot / math.sqrt(na * nb)


def hamming_distance(a: FeatureVector, b: FeatureVector) -> int:
    _check_same(a, b)
    return sum(1 for x, y in zip(a.values, b.values) if x != y)


def signature(v: FeatureVector | Sequence[int]) -> str:
    values = v.values if isinstance(v, FeatureVector) else v
    return "".join(_SIGNATURE_CHARS[x] for x in values)


def from_signature(sig: str, inventory: FeatureInventory | None = None) -> FeatureVector:
    inventory = inventory or FeatureInventory.default()
    lookup = {c: v for v, c in _SIGNATURE_CHARS.items()}
    try:
        return FeatureVector(tuple(lookup[c] for c in sig), inventory)
    except KeyError as exc:
        raise ValueError(f"invalid signature character {exc.args[0]!r}") from None


def stack(vectors: Iterable[FeatureVector]):
    """Pack vectors into a C-contiguous ``int8`` matrix, one row per vector."""
    import numpy as np

    rows = [v.values for v in vectors]
    if not rows:
        return np.zeros((0, 0), dtype=np.int8)
    return np.ascontiguousarray(rows, dtype=np.int8)
