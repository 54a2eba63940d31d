"""Pure-numpy scoring kernels.

Mirror of the compiled module ``tadda._speedups``; see ``tadda.kernels`` for
the import-time selection.  All functions take a score code from
``KIND_BY_NAME``, the tolerance ``eps`` (ignored by AE/SE) and float64 arrays.
"""
from __future__ import annotations

import numpy as np

KIND_AE = 0
KIND_SE = 1
KIND_TADDA1_L1 = 2
KIND_TADDA1_L2 = 3
KIND_TADDA2_L1 = 4

KIND_BY_NAME = {
    "ae": KIND_AE,
    "se": KIND_SE,
    "tadda1_l1": KIND_TADDA1_L1,
    "tadda1_l2": KIND_TADDA1_L2,
    "tadda2_l1": KIND_TADDA2_L1,
}

# grid rows per chunk in mean_score_grid; bounds the scratch matrix to
# ~8 MB for 10^5 outcomes
_CHUNK = 8192


def _scores(kind: int, eps: float, y_hat, y):
    """Broadcasted pointwise scores s(y_hat, y)."""
    d = y_hat - y
    if kind == KIND_AE:
        return np.abs(d)
    if kind == KIND_SE:
        return d * d
    if kind == KIND_TADDA1_L1:
        pen = np.where((y_hat > eps) & (y < -eps), y_hat - eps, 0.0)
        pen = pen + np.where((y_hat < -eps) & (y > eps), -y_hat - eps, 0.0)
        return np.abs(d) + pen
    if kind == KIND_TADDA1_L2:
        pen = np.where((y_hat > eps) & (y < -eps), (y_hat - eps) ** 2, 0.0)
        pen = pen + np.where((y_hat < -eps) & (y > eps), (y_hat + eps) ** 2, 0.0)
        return d * d + pen
    if kind == KIND_TADDA2_L1:
        in_tol = (y >= -eps) & (y <= eps)
        up = ((y_hat <= eps) & (y > eps)) | ((y_hat > eps) & in_tol)
        down = ((y_hat >= -eps) & (y < -eps)) | ((y_hat < -eps) & in_tol)
        # up and down are mutually exclusive by construction
        pen = np.where(up, np.abs(y_hat - eps), np.where(down, np.abs(y_hat + eps), 0.0))
        return np.abs(d) + pen
    raise ValueError(f"unknown score code {kind}")


def score_many(kind: int, eps: float, y_hat: float, ys: np.ndarray) -> np.ndarray:
    """Scores of one forecast against an array of outcomes."""
    return _scores(kind, eps, float(y_hat), np.asarray(ys, dtype=np.float64))


def score_elementwise(kind: int, eps: float, y_hats: np.ndarray,
                      ys: np.ndarray) -> np.ndarray:
    """Paired scores s(y_hats[i], ys[i])."""
    y_hats = np.asarray(y_hats, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if y_hats.shape != ys.shape:
        raise ValueError("y_hats and ys must have the same shape")
    return _scores(kind, eps, y_hats, ys)


def mean_score(kind: int, eps: float, y_hat: float, ys: np.ndarray) -> float:
    """Mean score of one forecast over an array of outcomes.

    With equal-weight atoms this is the exact expected score; with Monte
    Carlo draws it is the sample average.
    """
    return float(np.mean(score_many(kind, eps, y_hat, ys)))


def mean_score_grid(kind: int, eps: float, grid: np.ndarray,
                    ys: np.ndarray) -> np.ndarray:
    """Mean score over ``ys`` at every candidate forecast in ``grid``."""
    grid = np.asarray(grid, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    out = np.empty(grid.size, dtype=np.float64)
    for lo in range(0, grid.size, _CHUNK):
        hi = min(lo + _CHUNK, grid.size)
        block = _scores(kind, eps, grid[lo:hi, None], ys[None, :])
        out[lo:hi] = block.mean(axis=1)
    return out
