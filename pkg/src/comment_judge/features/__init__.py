"""Feature engineering: tokenization, TF-IDF pipeline, handcrafted block,
imported embeddings."""

from .embeddings import EmbeddingTable, import_embeddings
from .handcrafted import (
    HANDCRAFTED_WIDTH,
    handcrafted_features,
    levenshtein,
    levenshtein_similarity,
)
from .pipeline import FeaturePipeline, PipelineConfig, Vocabulary, fit
from .tokens import split_identifier, tokenize
from .vectors import FeatureVector

__all__ = [
    "EmbeddingTable",
    "FeaturePipeline",
    "FeatureVector",
    "HANDCRAFTED_WIDTH",
    "PipelineConfig",
    "Vocabulary",
    "fit",
    "handcrafted_features",
    "import_embeddings",
    "levenshtein",
    "levenshtein_similarity",
    "split_identifier",
    "tokenize",
]
