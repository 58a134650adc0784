"""Linear margin classifier trained by regularized hinge-loss subgradient
descent with iterate averaging.

Objective: lam * ||w||^2 + weighted mean hinge loss, with the intercept
left unregularized. Steps decay as learning_rate / sqrt(t); the returned
model averages the last 10% of iterates, which keeps the end-of-run
oscillation around the hinge kink out of the final weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..corpus.model import Label
from ..features.vectors import FeatureVector

TrainingData = Sequence[tuple[FeatureVector, Label]]


@dataclass(frozen=True)
class SvmTrainConfig:
    lam: float = 1e-4
    epochs: int = 200
    rng_seed: int = 0
    learning_rate: float = 0.1  # step scale; eta_t = learning_rate / sqrt(t)
    class_weighting: bool = True

    def __post_init__(self) -> None:
        if self.lam <= 0:
            raise ValueError("lam must be > 0")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")


@dataclass(frozen=True, eq=False)
class LinearSvmModel:
    w: np.ndarray
    b: float
    lam: float

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.w)) or not np.isfinite(self.b):
            raise ValueError("model parameters must be finite")


def _label_sign(label: Label) -> float:
    return 1.0 if label is Label.USEFUL else -1.0


def as_arrays(data: TrainingData) -> tuple[np.ndarray, np.ndarray]:
    """Stack feature vectors and signed labels; enforce uniform width."""
    if not data:
        raise ValueError("training data is empty")
    width = data[0][0].width
    for fv, _ in data:
        if fv.width != width:
            raise ValueError(
                f"dimension mismatch: expected width {width}, got {fv.width}")
    X = np.stack([fv.to_dense() for fv, _ in data])
    y = np.array([_label_sign(label) for _, label in data])
    return X, y


def class_weights(y: np.ndarray, enabled: bool) -> np.ndarray:
    """Per-example loss weights proportional to inverse class frequency,
    scaled so a balanced problem gets weight 1 everywhere."""
    if not enabled:
        return np.ones(len(y))
    n = len(y)
    n_pos = int(np.sum(y > 0))
    n_neg = n - n_pos
    weights = np.where(y > 0, n / (2.0 * n_pos), n / (2.0 * n_neg))
    return weights


def objective(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray,
              lam: float, weights: np.ndarray) -> float:
    """lam * ||w||^2 + weighted mean hinge loss."""
    hinge = np.maximum(0.0, 1.0 - y * (X @ w + b))
    return lam * float(w @ w) + float(np.mean(weights * hinge))


def train_linear(data: TrainingData, config: SvmTrainConfig) -> LinearSvmModel:
    """Stochastic subgradient training, deterministic for a given rng_seed.

    Raises on single-class data or mismatched vector widths.
    """
    X, y = as_arrays(data)
    if len(set(y.tolist())) < 2:
        raise ValueError("single class: training needs both Useful and Not Useful examples")
    weights = class_weights(y, config.class_weighting)

    n, d = X.shape
    rng = np.random.default_rng(config.rng_seed)
    w = np.zeros(d)
    b = 0.0
    total_steps = config.epochs * n
    window = max(1, round(0.1 * total_steps))
    w_sum = np.zeros(d)
    b_sum = 0.0
    t = 0

    for _ in range(config.epochs):
        for i in rng.permutation(n):
            t += 1
            eta = config.learning_rate / np.sqrt(t)
            margin_i = y[i] * (X[i] @ w + b)
            w *= 1.0 - 2.0 * config.lam * eta
            if margin_i < 1.0:
                w += eta * weights[i] * y[i] * X[i]
                b += eta * weights[i] * y[i]
            if t > total_steps - window:
                w_sum += w
                b_sum += b

    model = LinearSvmModel(w=w_sum / window, b=b_sum / window, lam=config.lam)
    return model


def margin(model: LinearSvmModel) -> float:
    """Separation margin 2 / ||w||."""
    norm = float(np.linalg.norm(model.w))
    if norm == 0.0:
        raise ValueError("margin undefined for a zero weight vector")
    return 2.0 / norm


def constraint_satisfaction(model: LinearSvmModel, data: TrainingData) -> float:
    """Fraction of examples with y * (w.x + b) >= 1 (on or outside the margin)."""
    if not data:
        return 1.0
    X, y = as_arrays(data)
    return float(np.mean(y * (X @ model.w + model.b) >= 1.0))


def decision(model: LinearSvmModel, x: FeatureVector) -> float:
    return x.dot(model.w) + model.b


def predict(model: LinearSvmModel, x: FeatureVector) -> Label:
    """Useful iff the decision value is >= 0 (ties go to Useful)."""
    return Label.USEFUL if decision(model, x) >= 0.0 else Label.NOT_USEFUL
