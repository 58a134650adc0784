"""Deduplicating merge of generated pairs into a seed corpus."""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, replace

from ..errors import DataError
from .model import CodeCommentPair, Dataset


def duplicate_key(comment_text: str, code_context: str) -> str:
    """Content key: lowercased, whitespace-collapsed comment and code, hashed.

    Catches reformatted regurgitation of existing pairs without fuzzy-match cost.
    """
    normalized = (
        " ".join(comment_text.lower().split())
        + "\x1f"
        + " ".join(code_context.lower().split())
    )
    return hashlib.sha256(normalized.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class MergeResult:
    """Merged dataset plus the drop/re-key accounting.

    Duplicate accounting cannot live inside Dataset (its tallies are always
    recomputed from the pairs), so the merge returns this record instead.
    """

    dataset: Dataset
    duplicates_dropped: int
    rekeyed_ids: tuple[tuple[str, str], ...]


def merge_datasets(seed: Dataset, generated: Dataset) -> MergeResult:
    """Append non-duplicate generated pairs to the seed corpus.

    Duplicates (by duplicate_key, including against pairs accepted earlier in
    the same merge) are dropped and counted. Id collisions are re-keyed
    deterministically by appending ``-g<k>``. Idempotent: merging the same
    generated set twice changes nothing the second time.
    """
    for pair in generated:
        if pair.label is None:
            raise DataError(f"generated pair {pair.id!r} is unlabeled; label before merging")

    seen = {duplicate_key(p.comment_text, p.code_context) for p in seed}
    ids = seed.ids()
    merged = list(seed.pairs)
    dropped = 0
    rekeyed: list[tuple[str, str]] = []

    for pair in generated:
        key = duplicate_key(pair.comment_text, pair.code_context)
        if key in seen:
            dropped += 1
            continue
        new_id = pair.id
        if new_id in ids:
            for k in itertools.count(1):
                candidate = f"{pair.id}-g{k}"
                if candidate not in ids:
                    new_id = candidate
                    break
            rekeyed.append((pair.id, new_id))
            pair = replace(pair, id=new_id)
        merged.append(pair)
        seen.add(key)
        ids.add(new_id)

    return MergeResult(
        dataset=Dataset.from_pairs(merged),
        duplicates_dropped=dropped,
        rekeyed_ids=tuple(rekeyed),
    )
