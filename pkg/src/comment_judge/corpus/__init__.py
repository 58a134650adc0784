"""Corpus handling: data model, file I/O, splitting, merging, agreement,
and C source comment extraction."""

from .agreement import (
    AnnotationTable,
    cohens_kappa,
    load_annotation_table,
    mean_pairwise_kappa,
)
from .extract import (
    ExtractionResult,
    ScanIssue,
    ScanResult,
    extract_pairs_from_c_source,
    scan_source,
)
from .io import load_dataset, save_dataset
from .merge import MergeResult, duplicate_key, merge_datasets
from .model import CodeCommentPair, Dataset, Label, Source, Split
from .split import (
    DEFAULT_TEST_FRACTION,
    DEFAULT_VALIDATION_FRACTION,
    stratified_split,
)

__all__ = [
    "AnnotationTable",
    "CodeCommentPair",
    "Dataset",
    "DEFAULT_TEST_FRACTION",
    "DEFAULT_VALIDATION_FRACTION",
    "ExtractionResult",
    "Label",
    "MergeResult",
    "ScanIssue",
    "ScanResult",
    "Source",
    "Split",
    "cohens_kappa",
    "duplicate_key",
    "extract_pairs_from_c_source",
    "load_annotation_table",
    "load_dataset",
    "mean_pairwise_kappa",
    "merge_datasets",
    "save_dataset",
    "scan_source",
    "stratified_split",
]
