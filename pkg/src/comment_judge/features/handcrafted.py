"""Fixed-width handcrafted feature block: similarity and length signals."""

from __future__ import annotations

import re

import numpy as np

from ..corpus.model import CodeCommentPair
from .tokens import split_identifier, tokenize

HANDCRAFTED_WIDTH = 5

# Caps bound feature magnitude and the O(n^2) edit-distance cost.
_LENGTH_CAP = 200
_LEVENSHTEIN_CAP = 1000

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def levenshtein(a: str, b: str) -> int:
    """Classic edit distance (insert/delete/substitute, all cost 1)."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    b_codes = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)
    offsets = np.arange(len(b) + 1)
    previous = offsets.copy()
    current = np.empty_like(previous)
    for i, ch in enumerate(a, start=1):
        substitute = previous[:-1] + (b_codes != ord(ch))
        current[0] = i
        current[1:] = np.minimum(previous[1:] + 1, substitute)
        # Propagate left-to-right insertions via a running minimum.
        running = np.minimum.accumulate(current - offsets) + offsets
        np.minimum(current, running, out=current)
        previous, current = current, previous
    return int(previous[-1])


def levenshtein_similarity(a: str, b: str) -> float:
    """1 - distance/max(len), on inputs capped at 1000 characters.

    Two empty strings count as identical. Symmetric in its arguments.
    """
    a = a[:_LEVENSHTEIN_CAP]
    b = b[:_LEVENSHTEIN_CAP]
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def _jaccard(left: set[str], right: set[str]) -> float:
    union = left | right
    if not union:
        return 0.0
    return len(left & right) / len(union)


def _code_identifier_tokens(code: str) -> set[str]:
    """Identifiers appearing in code, plus their camel/snake sub-words."""
    found: set[str] = set()
    for ident in _IDENT_RE.findall(code):
        found.add(ident.lower())
        for part in split_identifier(ident):
            found.add(part.lower())
    return found


def handcrafted_features(pair: CodeCommentPair) -> np.ndarray:
    """Dense block of width 5:

    [comment token count,
     comment char length / 200 capped at 1,
     Jaccard overlap of comment vs code token sets,
     normalized Levenshtein similarity of the raw strings,
     fraction of distinct comment tokens appearing as code identifiers]
    """
    comment = pair.comment_text
    code = pair.code_context
    comment_tokens = tokenize(comment)
    comment_set = set(comment_tokens)
    code_set = set(tokenize(code))

    if comment_set:
        identifiers = _code_identifier_tokens(code)
        ident_fraction = sum(1 for t in comment_set if t in identifiers) / len(comment_set)
    else:
        ident_fraction = 0.0

    return np.array([
        float(len(comment_tokens)),
        min(len(comment) / _LENGTH_CAP, 1.0),
        _jaccard(comment_set, code_set),
        levenshtein_similarity(comment, code),
        ident_fraction,
    ])
