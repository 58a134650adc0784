"""Identifier-aware tokenization for comments and code."""

from __future__ import annotations

import re

_WORD_RE = re.compile(r"[A-Za-z0-9_]+")
_CAMEL_RE = re.compile(r"[A-Z]+(?=[A-Z][a-z0-9])|[A-Z]?[a-z0-9]+|[A-Z]+|[0-9]+")


def split_identifier(word: str) -> list[str]:
    """Split camelCase and snake_case into sub-words."""
    return [part for chunk in word.split("_") for part in _CAMEL_RE.findall(chunk)]


def tokenize(text: str) -> list[str]:
    """Lowercased tokens split on non-alphanumerics (underscore kept).

    Compound identifiers contribute both the original token and their
    camelCase/snake_case sub-words; tokens shorter than 2 characters are
    dropped.
    """
    tokens: list[str] = []
    for word in _WORD_RE.findall(text):
        lowered = word.lower()
        parts = split_identifier(word)
        if len(lowered) >= 2:
            tokens.append(lowered)
        if len(parts) > 1:
            tokens.extend(p.lower() for p in parts if len(p) >= 2)
    return tokens
