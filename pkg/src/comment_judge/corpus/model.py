"""Dataset data model: labeled code-comment pairs and their collections."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Iterator, Optional

from ..errors import DataError


class Label(Enum):
    USEFUL = "Useful"
    NOT_USEFUL = "Not Useful"

    @classmethod
    def from_string(cls, text: str) -> "Label":
        for member in cls:
            if member.value == text:
                return member
        raise DataError(f"unknown label string: {text!r}")


class Source(Enum):
    SEED = "seed"
    GENERATED = "generated"
    EXTRACTED = "extracted"


class Split(Enum):
    TRAIN = "train"
    VALIDATION = "validation"
    TEST = "test"


@dataclass(frozen=True)
class CodeCommentPair:
    """One comment plus its surrounding code, with optional label and split."""

    id: str
    comment_text: str
    code_context: str
    label: Optional[Label] = None
    source: Source = Source.SEED
    split: Optional[Split] = None

    def __post_init__(self) -> None:
        if not self.id:
            raise DataError("pair id must be non-empty")
        if not self.comment_text.strip():
            raise DataError(f"pair {self.id!r}: comment_text is empty after trimming")

    def with_label(self, label: Label) -> "CodeCommentPair":
        return replace(self, label=label)

    def with_split(self, split: Optional[Split]) -> "CodeCommentPair":
        return replace(self, split=split)


@dataclass(frozen=True)
class Dataset:
    """Ordered, immutable collection of pairs with unique ids.

    Tallies are always recomputed from the pairs, never read from files.
    If any pair carries a split assignment, every labeled pair must carry one.
    """

    pairs: tuple[CodeCommentPair, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for pair in self.pairs:
            if pair.id in seen:
                raise DataError(f"duplicate pair id: {pair.id!r}")
            seen.add(pair.id)
        if any(p.split is not None for p in self.pairs):
            for p in self.pairs:
                if p.label is not None and p.split is None:
                    raise DataError(
                        f"pair {p.id!r} is labeled but has no split while other "
                        "pairs are split-assigned"
                    )

    @classmethod
    def from_pairs(cls, pairs: Iterable[CodeCommentPair]) -> "Dataset":
        return cls(tuple(pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[CodeCommentPair]:
        return iter(self.pairs)

    def counts(self) -> Counter:
        """Tally of (label, source, split) triples, recomputed on every call."""
        return Counter((p.label, p.source, p.split) for p in self.pairs)

    def label_counts(self) -> Counter:
        return Counter(p.label for p in self.pairs)

    def source_counts(self) -> Counter:
        return Counter(p.source for p in self.pairs)

    def in_split(self, split: Split) -> tuple[CodeCommentPair, ...]:
        return tuple(p for p in self.pairs if p.split is split)

    def labeled_pairs(self) -> tuple[CodeCommentPair, ...]:
        return tuple(p for p in self.pairs if p.label is not None)

    def ids(self) -> set[str]:
        return {p.id for p in self.pairs}
