"""Deterministic stratified train/validation/test splitting."""

from __future__ import annotations

import numpy as np

from ..errors import DataError
from .model import Dataset, Label, Split

# Defaults match a 1718-of-9048 test set plus a held-out validation slice.
DEFAULT_TEST_FRACTION = 0.19
DEFAULT_VALIDATION_FRACTION = 0.10


def stratified_split(
    dataset: Dataset,
    test_fraction: float = DEFAULT_TEST_FRACTION,
    validation_fraction: float = DEFAULT_VALIDATION_FRACTION,
    rng_seed: int = 0,
) -> Dataset:
    """Assign every pair to train/validation/test, stratified by label.

    Deterministic for a given (dataset order, fractions, rng_seed). Each
    label group is permuted independently and sliced, so per-split label
    proportions match the global ones within rounding (one item).
    """
    if not 0.0 < test_fraction < 1.0 or not 0.0 < validation_fraction < 1.0:
        raise DataError("split fractions must lie in (0, 1)")
    if test_fraction + validation_fraction >= 1.0:
        raise DataError("test and validation fractions must sum to less than 1")
    for pair in dataset:
        if pair.label is None:
            raise DataError(f"cannot split: pair {pair.id!r} is unlabeled")

    rng = np.random.default_rng(rng_seed)
    assignment: dict[int, Split] = {}
    for label in Label:
        positions = [i for i, p in enumerate(dataset.pairs) if p.label is label]
        n = len(positions)
        if n == 0:
            continue
        n_test = min(int(round(test_fraction * n)), n)
        n_val = min(int(round(validation_fraction * n)), n - n_test)
        order = rng.permutation(n)
        for rank, j in enumerate(order):
            if rank < n_test:
                split = Split.TEST
            elif rank < n_test + n_val:
                split = Split.VALIDATION
            else:
                split = Split.TRAIN
            assignment[positions[j]] = split

    return Dataset.from_pairs(
        pair.with_split(assignment[i]) for i, pair in enumerate(dataset.pairs)
    )
