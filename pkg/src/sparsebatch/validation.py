"""Input validation helpers shared by the public entry points."""

import numpy as np

from .exceptions import DimensionMismatch, InvalidDistribution, LabelOutOfRange


def as_float_vector(x, name, length=None, nonneg=False):
    """Coerce ``x`` to a finite 1-D float64 array, checking length on request."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-D, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise DimensionMismatch(
            f"{name} has length {arr.shape[0]}, expected {length}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    if nonneg and np.any(arr < 0):
        raise ValueError(f"{name} contains negative entries")
    return arr


def as_float_matrix(x, name, shape=None):
    """Coerce ``x`` to a finite 2-D float64 array, checking shape on request."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {arr.shape}")
    if shape is not None and arr.shape != tuple(shape):
        raise DimensionMismatch(
            f"{name} has shape {arr.shape}, expected {tuple(shape)}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_probability_rows(probs, name="probs", atol=1e-9):
    """Validate that every row of ``probs`` lies on the simplex."""
    arr = as_float_matrix(probs, name)
    if np.any(arr < 0):
        raise InvalidDistribution(f"{name} contains negative probabilities")
    sums = arr.sum(axis=1)
    if np.any(np.abs(sums - 1.0) > atol):
        j = int(np.argmax(np.abs(sums - 1.0)))
        raise InvalidDistribution(
            f"{name} row {j} sums to {sums[j]!r}, expected 1 within {atol}"
        )
    return arr


def check_labels(y, n_classes, name="y"):
    """Coerce labels to an int array and check the [0, n_classes) range."""
    arr = np.asarray(y)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-D, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        rounded = np.rint(np.asarray(arr, dtype=np.float64))
        if not np.array_equal(rounded, np.asarray(arr, dtype=np.float64)):
            raise LabelOutOfRange(f"{name} contains non-integer labels")
        arr = rounded
    arr = arr.astype(np.int64, copy=False)
    if arr.size and (arr.min() < 0 or arr.max() >= n_classes):
        raise LabelOutOfRange(
            f"{name} labels must lie in [0, {n_classes}), "
            f"got range [{arr.min()}, {arr.max()}]"
        )
    return arr
