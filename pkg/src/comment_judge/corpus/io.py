"""Dataset file I/O: JSONL and CSV, round-trip exact.

JSONL: one object per line with keys id, comment, code, label, source, split.
CSV: header ``id,comment,code,label,source,split``; comma separated, double
quotes, quotes escaped by doubling, UTF-8. Null label/split are empty cells.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Optional, Union

from ..errors import DataError
from .model import CodeCommentPair, Dataset, Label, Source, Split

CSV_HEADER = ["id", "comment", "code", "label", "source", "split"]

_SOURCES = {s.value: s for s in Source}
_SPLITS = {s.value: s for s in Split}


def _infer_format(path: Path, fmt: Optional[str]) -> str:
    if fmt is not None:
        if fmt not in ("csv", "jsonl"):
            raise DataError(f"unknown dataset format: {fmt!r}")
        return fmt
    suffix = path.suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".jsonl", ".ndjson"):
        return "jsonl"
    raise DataError(f"cannot infer format from {path.name!r}; pass format explicitly")


def _parse_label(raw: object, where: str) -> Optional[Label]:
    if raw is None or raw == "":
        return None
    if not isinstance(raw, str):
        raise DataError(f"{where}: label must be a string or null")
    return Label.from_string(raw)


def _parse_source(raw: object, where: str) -> Source:
    if not isinstance(raw, str) or raw not in _SOURCES:
        raise DataError(f"{where}: unknown source {raw!r}")
    return _SOURCES[raw]


def _parse_split(raw: object, where: str) -> Optional[Split]:
    if raw is None or raw == "":
        return None
    if not isinstance(raw, str) or raw not in _SPLITS:
        raise DataError(f"{where}: unknown split {raw!r}")
    return _SPLITS[raw]


def _pair_from_fields(id_: object, comment: object, code: object, label: object,
                      source: object, split: object, where: str) -> CodeCommentPair:
    if not isinstance(id_, str) or not isinstance(comment, str) or not isinstance(code, str):
        raise DataError(f"{where}: id, comment and code must be strings")
    try:
        return CodeCommentPair(
            id=id_,
            comment_text=comment,
            code_context=code,
            label=_parse_label(label, where),
            source=_parse_source(source, where),
            split=_parse_split(split, where),
        )
    except DataError as exc:
        raise DataError(f"{where}: {exc}") from None


def load_dataset(path: Union[str, Path], fmt: Optional[str] = None) -> Dataset:
    """Read a dataset file; every row becomes a CodeCommentPair.

    Unknown label strings are an error; missing labels load as unlabeled.
    Malformed rows are reported with their row number.
    """
    path = Path(path)
    fmt = _infer_format(path, fmt)
    pairs: list[CodeCommentPair] = []
    if fmt == "jsonl":
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                where = f"{path.name}:{lineno}"
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise DataError(f"{where}: invalid JSON ({exc.msg})") from None
                if not isinstance(record, dict):
                    raise DataError(f"{where}: expected a JSON object")
                missing = {"id", "comment", "code", "label", "source", "split"} - record.keys()
                if missing:
                    raise DataError(f"{where}: missing keys {sorted(missing)}")
                pairs.append(_pair_from_fields(
                    record["id"], record["comment"], record["code"],
                    record["label"], record["source"], record["split"], where))
    else:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise DataError(f"{path.name}: missing CSV header") from None
            if header != CSV_HEADER:
                raise DataError(
                    f"{path.name}: bad CSV header {header!r}, expected {CSV_HEADER!r}")
            for row in reader:
                if not row:
                    continue
                where = f"{path.name}:row {reader.line_num}"
                if len(row) != len(CSV_HEADER):
                    raise DataError(f"{where}: expected {len(CSV_HEADER)} fields, got {len(row)}")
                pairs.append(_pair_from_fields(*row, where=where))
    return Dataset.from_pairs(pairs)


def _pair_to_record(pair: CodeCommentPair) -> dict:
    return {
        "id": pair.id,
        "comment": pair.comment_text,
        "code": pair.code_context,
        "label": pair.label.value if pair.label is not None else None,
        "source": pair.source.value,
        "split": pair.split.value if pair.split is not None else None,
    }


def save_dataset(dataset: Dataset, path: Union[str, Path], fmt: Optional[str] = None) -> None:
    """Write a dataset so that load_dataset(save_dataset(d)) == d field-for-field."""
    path = Path(path)
    fmt = _infer_format(path, fmt)
    if fmt == "jsonl":
        with open(path, "w", encoding="utf-8") as fh:
            for pair in dataset:
                fh.write(json.dumps(_pair_to_record(pair), ensure_ascii=False))
                fh.write("\n")
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for pair in dataset:
                rec = _pair_to_record(pair)
                writer.writerow([
                    rec["id"], rec["comment"], rec["code"],
                    rec["label"] or "", rec["source"], rec["split"] or "",
                ])
