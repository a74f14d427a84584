"""Input validation helpers used by the estimator API and the numeric core."""

from __future__ import annotations

import numpy as np

from .errors import DataError


def check_text_array(X) -> list[str]:
    """Coerce X to a list of strings, rejecting anything else."""
    if isinstance(X, str):
        raise TypeError("expected an iterable of strings, got a single string")
    texts = list(X)
    for i, t in enumerate(texts):
        if not isinstance(t, str):
            raise TypeError(f"X[{i}] is {type(t).__name__}, expected str")
    return texts


def check_labels(y, n_samples: int) -> list[str]:
    """Coerce y to a list of non-empty label strings of length n_samples."""
    labels = [str(v) for v in y]
    if len(labels) != n_samples:
        raise ValueError(f"X has {n_samples} samples but y has {len(labels)}")
    for i, lab in enumerate(labels):
        if not lab.strip():
            raise DataError(f"y[{i}] is empty")
    return labels


def check_fitted(estimator, attributes: tuple[str, ...]) -> None:
    missing = [a for a in attributes if not hasattr(estimator, a)]
    if missing:
        raise RuntimeError(
            f"{type(estimator).__name__} is not fitted yet; "
            f"call fit() before using this method (missing {missing})"
        )


def ensure_finite(name: str, arr: np.ndarray) -> np.ndarray:
    """Reject NaN/Inf at a boundary; returns the array unchanged."""
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_float_array(name: str, x, dtype=np.float64) -> np.ndarray:
    arr = np.asarray(x, dtype=dtype)
    return ensure_finite(name, arr)
