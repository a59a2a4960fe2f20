"""The finite-dimensional batch-selection problem and its objective pieces.

The problem data is the tuple (v, phi, sigma2, alpha, beta, b).  A candidate
batch is a nonnegative weight vector ``w`` with at most ``b`` nonzeros, scored
by

    f1(w) = ||v - phi @ w||^2 + beta * ||w - 1||^2          (smooth part)
    f2(w) = -alpha * sum(sigma2[j] for j with w[j] > 0)     (support reward)

``f1`` measures how well the weighted candidate columns reproduce the pool
mean ``v``; ``f2`` rewards including high-variance candidates.  Support
membership is tested exactly as ``w[j] > 0``.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DimensionMismatch
from .validation import as_float_matrix, as_float_vector

__all__ = [
    "SparseApproxProblem",
    "WeightVector",
    "eval_f1",
    "eval_f2",
    "grad_f1",
    "objective_value",
]


@dataclass(frozen=True)
class SparseApproxProblem:
    """Problem data: approximate ``v`` by a nonnegative b-sparse mix of columns.

    Attributes
    ----------
    m : int
        Embedding dimension (rows of ``phi``).
    n : int
        Number of candidates (columns of ``phi``).
    b : int
        Sparsity budget, ``1 <= b <= n``.
    alpha : float
        Weight of the per-candidate variance reward, ``>= 0``.
    beta : float
        Weight of the pull-toward-ones regularizer, ``>= 0``.
    v : ndarray, shape (m,)
        Target vector (pool mean of expected embeddings).
    phi : ndarray, shape (m, n)
        Candidate matrix; column ``j`` is the j-th expected embedding
        scaled by ``1/b``.
    sigma2 : ndarray, shape (n,)
        Squared per-candidate variances, each ``>= 0``.
    """

    m: int
    n: int
    b: int
    alpha: float
    beta: float
    v: np.ndarray
    phi: np.ndarray
    sigma2: np.ndarray

    def __post_init__(self):
        m = int(self.m)
        n = int(self.n)
        b = int(self.b)
        if m < 1 or n < 1:
            raise ValueError(f"m and n must be positive, got m={m}, n={n}")
        if not 1 <= b <= n:
            raise ValueError(f"budget b must satisfy 1 <= b <= n={n}, got {b}")
        alpha = float(self.alpha)
        beta = float(self.beta)
        if not np.isfinite(alpha) or alpha < 0:
            raise ValueError(f"alpha must be finite and >= 0, got {alpha}")
        if not np.isfinite(beta) or beta < 0:
            raise ValueError(f"beta must be finite and >= 0, got {beta}")
        v = as_float_vector(self.v, "v", length=m)
        phi = as_float_matrix(self.phi, "phi", shape=(m, n))
        sigma2 = as_float_vector(self.sigma2, "sigma2", length=n, nonneg=True)
        for name, value in (
            ("m", m), ("n", n), ("b", b), ("alpha", alpha), ("beta", beta),
            ("v", v), ("phi", phi), ("sigma2", sigma2),
        ):
            object.__setattr__(self, name, value)
        for arr in (v, phi, sigma2):
            arr.setflags(write=False)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative candidate weights with their support cached.

    ``support`` is exactly ``{j : values[j] > 0}``, in increasing index
    order.  The array is frozen so the cache cannot go stale.
    """

    values: np.ndarray
    support: np.ndarray = field(init=False)

    def __post_init__(self):
        values = as_float_vector(self.values, "w", nonneg=True).copy()
        values.setflags(write=False)
        support = np.flatnonzero(values > 0)
        support.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "support", support)

    def __len__(self):
        return self.values.shape[0]

    @property
    def nnz(self):
        return int(self.support.shape[0])


def _weights_array(problem, w):
    """Accept a WeightVector or a plain array; check the length against n."""
    arr = np.asarray(getattr(w, "values", w), dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] != problem.n:
        raise DimensionMismatch(
            f"w has shape {arr.shape}, expected ({problem.n},)"
        )
    return arr


def eval_f1(problem, w):
    """Smooth objective part: ||v - phi @ w||^2 + beta * ||w - 1||^2."""
    arr = _weights_array(problem, w)
    residual = problem.v - problem.phi @ arr
    reg = arr - 1.0
    return float(residual @ residual + problem.beta * (reg @ reg))


def eval_f2(problem, w):
    """Support reward: -alpha * sum of sigma2 over {j : w[j] > 0}."""
    arr = _weights_array(problem, w)
    return float(-problem.alpha * problem.sigma2[arr > 0].sum())


def grad_f1(problem, w):
    """Gradient of ``eval_f1``: 2 * phi.T @ (phi @ w - v) + 2 * beta * (w - 1)."""
    arr = _weights_array(problem, w)
    residual = problem.phi @ arr - problem.v
    return 2.0 * (problem.phi.T @ residual) + 2.0 * problem.beta * (arr - 1.0)


def objective_value(problem, w):
    """Total objective f1 + f2 at ``w``."""
    return eval_f1(problem, w) + eval_f2(problem, w)
