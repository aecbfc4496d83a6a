"""Core dataset containers shared by the selectors and the evaluator.

All types are immutable after construction (backing arrays are frozen with
``writeable=False``) and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


class ValidationError(ValueError):
    """Input data violates a structural contract."""


def _frozen_array(values, dtype, order="C") -> np.ndarray:
    arr = np.array(values, dtype=dtype, order=order)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Dataset:
    """Numeric sample matrix, m samples by n named feature columns.

    ``values`` is float64 in column-major layout so a single feature can be
    traversed contiguously, which is how every selector scores features.
    """

    values: np.ndarray
    feature_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "feature_names", tuple(self.feature_names))
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 2:
            raise ValidationError(f"values must be 2-D, got {vals.ndim}-D")
        m, n = vals.shape
        if m < 2:
            raise ValidationError(f"need at least 2 samples, got {m}")
        if n < 1:
            raise ValidationError("need at least 1 feature")
        if len(self.feature_names) != n:
            raise ValidationError(
                f"{len(self.feature_names)} feature names for {n} columns"
            )
        if len(set(self.feature_names)) != n:
            seen = set()
            dup = next(f for f in self.feature_names if f in seen or seen.add(f))
            raise ValidationError(f"duplicate feature name: {dup!r}")
        if not (vals.flags.f_contiguous and not vals.flags.writeable):
            vals = _frozen_array(vals, np.float64, order="F")
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def column(self, j: int) -> np.ndarray:
        """Contiguous read-only view of feature ``j``."""
        return self.values[:, j]


@dataclass(frozen=True)
class Labels:
    """Dense class codes in [0, k) plus the class names they encode."""

    codes: np.ndarray
    class_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_names", tuple(self.class_names))
        codes = np.asarray(self.codes)
        if codes.ndim != 1:
            raise ValidationError("label codes must be 1-D")
        if not np.issubdtype(codes.dtype, np.integer):
            raise ValidationError("label codes must be integers")
        k = len(self.class_names)
        if k < 2:
            raise ValidationError(f"need at least 2 classes, got {k}")
        if codes.size and (codes.min() < 0 or codes.max() >= k):
            raise ValidationError("label code out of range")
        present = np.bincount(codes, minlength=k)
        if (present == 0).any():
            missing = int(np.flatnonzero(present == 0)[0])
            raise ValidationError(
                f"class {self.class_names[missing]!r} has no samples"
            )
        object.__setattr__(self, "codes", _frozen_array(codes, np.int64))

    @property
    def k(self) -> int:
        return len(self.class_names)

    @property
    def m(self) -> int:
        return self.codes.shape[0]


@dataclass(frozen=True)
class FeatureSet:
    """Ordered collection of distinct feature indices into a parent Dataset."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(i < 0 for i in idx):
            raise ValidationError("negative feature index")
        if len(set(idx)) != len(idx):
            raise ValidationError("duplicate feature index")
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return len(self.indices)


def validate_dataset(values, feature_names: Sequence[str], raw_labels: Sequence) -> tuple[Dataset, Labels]:
    """Build a validated (Dataset, Labels) pair from raw ingredients.

    Labels are densely encoded 0..k-1 in first-appearance order, so the
    encoding is reproducible from the input alone. Rejects ragged input,
    non-finite values (reporting row and column) and degenerate label sets.
    """
    try:
        vals = np.array(values, dtype=np.float64)
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"values are not a rectangular numeric matrix: {exc}") from None
    if vals.ndim != 2:
        raise ValidationError(f"values must be 2-D, got {vals.ndim}-D")
    m = vals.shape[0]
    if len(raw_labels) != m:
        raise ValidationError(f"{len(raw_labels)} labels for {m} samples")

    bad = ~np.isfinite(vals)
    if bad.any():
        r, c = np.argwhere(bad)[0]
        raise ValidationError(f"non-finite value at row {int(r)}, column {int(c)}")

    class_names: list[str] = []
    code_of: dict = {}
    codes = np.empty(m, dtype=np.int64)
    for i, lab in enumerate(raw_labels):
        if lab not in code_of:
            code_of[lab] = len(class_names)
            class_names.append(str(lab))
        codes[i] = code_of[lab]
    if len(class_names) < 2:
        raise ValidationError(f"need at least 2 classes, got {len(class_names)}")

    dataset = Dataset(vals, tuple(str(f) for f in feature_names))
    return dataset, Labels(codes, tuple(class_names))


def project(dataset: Dataset, feature_set: FeatureSet) -> Dataset:
    """New Dataset holding exactly the listed columns, in the listed order.

    An empty projection is an error: every downstream consumer requires at
    least one feature.
    """
    idx = feature_set.indices
    if not idx:
        raise ValidationError("empty projection")
    for i in idx:
        if i >= dataset.n:
            raise ValidationError(f"feature index {i} out of range (n={dataset.n})")
    cols = np.asfortranarray(dataset.values[:, list(idx)])
    names = tuple(dataset.feature_names[i] for i in idx)
    return Dataset(cols, names)
