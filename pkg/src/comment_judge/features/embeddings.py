"""Imported dense embeddings, keyed by pair id.

Embeddings are consumed, never computed here. File format: first line
``width <K>``, then one line per pair: ``<id> <v1> ... <vK>``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np

from ..errors import DataError


@dataclass(eq=False)
class EmbeddingTable:
    width: int
    vectors: dict[str, np.ndarray]
    misses: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def lookup(self, pair_id: str) -> np.ndarray:
        """Vector for the pair; missing ids get zeros and bump the miss counter."""
        vec = self.vectors.get(pair_id)
        if vec is None:
            with self._lock:
                self.misses += 1
            return np.zeros(self.width)
        return vec

    def digest_material(self) -> list[tuple[str, list[float]]]:
        return [(pid, self.vectors[pid].tolist()) for pid in sorted(self.vectors)]


def import_embeddings(path: Union[str, Path]) -> EmbeddingTable:
    path = Path(path)
    vectors: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2 or header[0] != "width":
            raise DataError(f"{path.name}: first line must be 'width <K>'")
        try:
            width = int(header[1])
        except ValueError:
            raise DataError(f"{path.name}: bad width {header[1]!r}") from None
        if width < 1:
            raise DataError(f"{path.name}: width must be >= 1")
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            fields = line.split()
            pair_id, raw_values = fields[0], fields[1:]
            if len(raw_values) != width:
                raise DataError(
                    f"{path.name}:{lineno}: expected {width} values, got {len(raw_values)}")
            try:
                vectors[pair_id] = np.array([float(v) for v in raw_values])
            except ValueError:
                raise DataError(f"{path.name}:{lineno}: malformed number") from None
    return EmbeddingTable(width=width, vectors=vectors)
