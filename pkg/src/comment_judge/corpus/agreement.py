"""Inter-annotator agreement: Cohen's kappa over rater pairs.

Cohen's kappa is a two-rater statistic. For more raters we report the
unweighted mean over all rater pairs; a single published kappa for a larger
campaign is therefore not exactly reproducible from this aggregation.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from ..errors import DataError
from .model import Label

ANNOTATION_HEADER = ["item_id", "rater_id", "label"]

_LABEL_CODE = {label: i for i, label in enumerate(Label)}
_MISSING = -1


@dataclass(frozen=True)
class AnnotationTable:
    """Labels indexed (item, rater); missing cells allowed."""

    item_ids: tuple[str, ...]
    raters: tuple[str, ...]
    codes: np.ndarray  # int8 (items x raters); -1 marks a missing cell

    def __post_init__(self) -> None:
        if len(self.raters) < 2:
            raise DataError("annotation table needs at least 2 raters")
        if self.codes.shape != (len(self.item_ids), len(self.raters)):
            raise DataError("annotation matrix shape does not match ids/raters")

    @classmethod
    def from_records(cls, records: Iterable[tuple[str, str, Label]]) -> "AnnotationTable":
        records = list(records)
        item_ids = sorted({item for item, _, _ in records})
        raters = sorted({rater for _, rater, _ in records})
        item_index = {item: i for i, item in enumerate(item_ids)}
        rater_index = {rater: j for j, rater in enumerate(raters)}
        codes = np.full((len(item_ids), len(raters)), _MISSING, dtype=np.int8)
        for item, rater, label in records:
            i, j = item_index[item], rater_index[rater]
            if codes[i, j] != _MISSING:
                raise DataError(f"conflicting annotations for item {item!r}, rater {rater!r}")
            codes[i, j] = _LABEL_CODE[label]
        return cls(tuple(item_ids), tuple(raters), codes)

    def _rater_column(self, rater: str) -> np.ndarray:
        try:
            return self.codes[:, self.raters.index(rater)]
        except ValueError:
            raise DataError(f"unknown rater id: {rater!r}") from None


def load_annotation_table(path: Union[str, Path]) -> AnnotationTable:
    """Read an ``item_id,rater_id,label`` CSV into an AnnotationTable."""
    path = Path(path)
    records: list[tuple[str, str, Label]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path.name}: missing CSV header") from None
        if header != ANNOTATION_HEADER:
            raise DataError(
                f"{path.name}: bad header {header!r}, expected {ANNOTATION_HEADER!r}")
        for row in reader:
            if not row:
                continue
            if len(row) != 3:
                raise DataError(f"{path.name}:row {reader.line_num}: expected 3 fields")
            item, rater, label_text = row
            try:
                label = Label.from_string(label_text)
            except DataError as exc:
                raise DataError(f"{path.name}:row {reader.line_num}: {exc}") from None
            records.append((item, rater, label))
    if not records:
        raise DataError(f"{path.name}: no annotations")
    return AnnotationTable.from_records(records)


def cohens_kappa(table: AnnotationTable, rater_a: str, rater_b: str) -> float:
    """Chance-corrected agreement (p_o - p_e) / (1 - p_e) between two raters.

    p_o is the observed agreement fraction over co-annotated items; p_e is
    chance agreement from the two raters' marginal label frequencies.
    Returns exactly 1.0 for perfect agreement. Raises when the raters share
    no items, or when p_e = 1 with imperfect agreement (kappa undefined).
    """
    col_a = table._rater_column(rater_a)
    col_b = table._rater_column(rater_b)
    both = (col_a != _MISSING) & (col_b != _MISSING)
    n = int(both.sum())
    if n == 0:
        raise DataError(f"raters {rater_a!r} and {rater_b!r} share no annotated items")
    a = col_a[both]
    b = col_b[both]
    p_o = float(np.mean(a == b))
    if p_o == 1.0:
        return 1.0
    p_e = sum(float(np.mean(a == code)) * float(np.mean(b == code))
              for code in _LABEL_CODE.values())
    if p_e >= 1.0:
        raise DataError(
            "kappa undefined: chance agreement is 1 with imperfect observed agreement")
    return (p_o - p_e) / (1.0 - p_e)


def mean_pairwise_kappa(table: AnnotationTable) -> float:
    """Unweighted mean of cohens_kappa over rater pairs that share items.

    Pairs whose kappa is undefined (degenerate marginals) are skipped; at
    least one pair must yield a value.
    """
    kappas = []
    for rater_a, rater_b in combinations(table.raters, 2):
        try:
            kappas.append(cohens_kappa(table, rater_a, rater_b))
        except DataError:
            continue
    if not kappas:
        raise DataError("no rater pair with a defined kappa")
    return float(np.mean(kappas))
