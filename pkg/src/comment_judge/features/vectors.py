"""Feature vector container: sparse weighted-token block plus dense tail."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class FeatureVector:
    """Sparse (index, value) block of width ``sparse_width`` followed by a
    dense block; total width is ``sparse_width + len(dense)``.

    Sparse indices are strictly increasing with no explicit zeros.
    """

    indices: tuple[int, ...]
    values: tuple[float, ...]
    sparse_width: int
    dense: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.values):
            raise ValueError("indices and values differ in length")
        if any(v == 0.0 for v in self.values):
            raise ValueError("sparse block must not store explicit zeros")
        for prev, nxt in zip(self.indices, self.indices[1:]):
            if nxt <= prev:
                raise ValueError("sparse indices must be strictly increasing")
        if self.indices and not (0 <= self.indices[0] and self.indices[-1] < self.sparse_width):
            raise ValueError("sparse index out of range")

    @property
    def width(self) -> int:
        return self.sparse_width + len(self.dense)

    @classmethod
    def from_dense(cls, values) -> "FeatureVector":
        """Wrap a plain numeric sequence as an all-dense vector."""
        return cls(indices=(), values=(), sparse_width=0,
                   dense=tuple(float(v) for v in values))

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.width)
        if self.indices:
            out[np.fromiter(self.indices, dtype=np.intp)] = self.values
        if self.dense:
            out[self.sparse_width:] = self.dense
        return out

    def dot(self, weights: np.ndarray) -> float:
        """Inner product against a dense weight vector of matching width."""
        if weights.shape != (self.width,):
            raise ValueError(
                f"dimension mismatch: vector width {self.width}, weights {weights.shape}")
        total = 0.0
        if self.indices:
            idx = np.fromiter(self.indices, dtype=np.intp)
            total += float(weights[idx] @ np.asarray(self.values))
        if self.dense:
            total += float(weights[self.sparse_width:] @ np.asarray(self.dense))
        return total
