"""Fitted text-to-vector pipeline: TF-IDF over comment+code plus the
handcrafted block and an optional imported embedding block.

Fitting only ever sees training-split pairs, so validation/test text can
never leak into the vocabulary. A fitted pipeline is immutable and its
transform is a pure function of the input pair.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..corpus.model import CodeCommentPair, Dataset, Split
from ..errors import DataError
from .embeddings import EmbeddingTable
from .handcrafted import HANDCRAFTED_WIDTH, handcrafted_features
from .tokens import tokenize
from .vectors import FeatureVector


@dataclass(frozen=True)
class PipelineConfig:
    min_df: int = 2
    max_vocab: int = 50_000
    normalize: bool = True

    def __post_init__(self) -> None:
        if self.min_df < 1:
            raise DataError("min_df must be >= 1")
        if self.max_vocab < 1:
            raise DataError("max_vocab must be >= 1")


@dataclass(frozen=True)
class Vocabulary:
    index: dict  # token -> dense position 0..V-1
    document_frequency: dict  # token -> df
    n_documents: int

    def __len__(self) -> int:
        return len(self.index)


@dataclass(frozen=True, eq=False)
class FeaturePipeline:
    config: PipelineConfig
    vocabulary: Vocabulary
    idf: np.ndarray  # aligned with vocabulary index positions
    embeddings: Optional[EmbeddingTable] = None

    @property
    def width(self) -> int:
        total = len(self.vocabulary) + HANDCRAFTED_WIDTH
        if self.embeddings is not None:
            total += self.embeddings.width
        return total

    def fingerprint(self) -> str:
        """Hash of everything that determines transform output."""
        material = {
            "min_df": self.config.min_df,
            "max_vocab": self.config.max_vocab,
            "normalize": self.config.normalize,
            "n_documents": self.vocabulary.n_documents,
            "vocab": sorted(
                (token, pos, self.vocabulary.document_frequency[token])
                for token, pos in self.vocabulary.index.items()
            ),
            "embeddings": (
                None if self.embeddings is None
                else [self.embeddings.width, self.embeddings.digest_material()]
            ),
        }
        blob = json.dumps(material, sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()

    def transform(self, pair: CodeCommentPair) -> FeatureVector:
        """TF-IDF sparse block (L2-normalized when configured), handcrafted
        block, and embedding block when a table is attached. Out-of-vocabulary
        tokens are ignored."""
        counts = Counter(tokenize(_pair_text(pair)))
        entries = []
        for token, tf in counts.items():
            pos = self.vocabulary.index.get(token)
            if pos is not None:
                entries.append((pos, tf * float(self.idf[pos])))
        entries.sort()
        values = np.array([v for _, v in entries]) if entries else np.array([])
        if self.config.normalize and len(values):
            values = values / np.linalg.norm(values)

        dense = handcrafted_features(pair)
        if self.embeddings is not None:
            dense = np.concatenate([dense, self.embeddings.lookup(pair.id)])

        return FeatureVector(
            indices=tuple(pos for pos, _ in entries),
            values=tuple(float(v) for v in values),
            sparse_width=len(self.vocabulary),
            dense=tuple(float(v) for v in dense),
        )

    def transform_many(self, pairs) -> list[FeatureVector]:
        return [self.transform(p) for p in pairs]


def _pair_text(pair: CodeCommentPair) -> str:
    return pair.comment_text + "\n" + pair.code_context


def fit(config: PipelineConfig, corpus: Dataset,
        embeddings: Optional[EmbeddingTable] = None) -> FeaturePipeline:
    """Build the vocabulary and IDF weights from the training split only.

    idf(t) = ln((1+N)/(1+df(t))) + 1, smoothed so df = N cannot divide by zero.
    Tokens below min_df are dropped; the max_vocab most frequent (by document
    frequency, ties broken lexicographically) are kept, indexed in
    lexicographic order.
    """
    train_pairs = corpus.in_split(Split.TRAIN)
    if not train_pairs:
        raise DataError("cannot fit feature pipeline: empty training split")

    df: Counter = Counter()
    for pair in train_pairs:
        df.update(set(tokenize(_pair_text(pair))))
    n_documents = len(train_pairs)

    surviving = [t for t, count in df.items() if count >= config.min_df]
    if len(surviving) > config.max_vocab:
        surviving.sort(key=lambda t: (-df[t], t))
        surviving = surviving[:config.max_vocab]
    surviving.sort()

    index = {token: pos for pos, token in enumerate(surviving)}
    idf = np.array([
        math.log((1 + n_documents) / (1 + df[token])) + 1.0 for token in surviving
    ])
    vocabulary = Vocabulary(
        index=index,
        document_frequency={t: df[t] for t in surviving},
        n_documents=n_documents,
    )
    return FeaturePipeline(config=config, vocabulary=vocabulary, idf=idf,
                           embeddings=embeddings)
