"""Numpy fallback for the axis-batch divergence kernel.

Given a qubit ensemble (weights, member Bloch vectors) and a batch of unit
axes, evaluates for every axis the classical divergence between the
two-outcome joint table and the product of its marginals. The joint is built
from Bloch dot products, P_i0 = p_i (1 + beta_i . z)/2 and
P_i1 = p_i (1 - beta_i . z)/2; the divergence itself is the generic
flattened-vector formula, not a per-notion reduced form, so this module
stays interchangeable with the matrix path it mirrors.

Notion codes: 0 Kolmogorov, 1 error probability, 2 Bhattacharyya,
3 relative entropy, 4 Jensen-Shannon. All logs base 2.
"""

from __future__ import annotations

import numpy as np

CODE_KOLMOGOROV = 0
CODE_PROB_ERROR = 1
CODE_BHATTACHARYYA = 2
CODE_RELATIVE_ENTROPY = 3
CODE_QJSD = 4


def _xlog2(x: np.ndarray) -> np.ndarray:
    # 0 log 0 = 0; inputs are clipped nonnegative upstream
    return np.where(x > 0.0, x * np.log2(np.where(x > 0.0, x, 1.0)), 0.0)


def evaluate_axes(code: int, weights: np.ndarray, bloch: np.ndarray,
                  axes: np.ndarray) -> np.ndarray:
    """Divergence of the measurement joint from independence, per axis.

    weights: (n,), bloch: (n, 3), axes: (m, 3) unit rows. Returns (m,).
    """
    w = np.asarray(weights, dtype=float)
    b = np.asarray(bloch, dtype=float)
    z = np.asarray(axes, dtype=float)
    proj = b @ z.T                      # (n, m) member projections
    avg = w @ proj                      # (m,) average-state projection
    p0 = np.clip(0.5 * w[:, None] * (1.0 + proj), 0.0, None)
    p1 = np.clip(0.5 * w[:, None] * (1.0 - proj), 0.0, None)
    q0 = np.clip(0.5 * w[:, None] * (1.0 + avg)[None, :], 0.0, None)
    q1 = np.clip(0.5 * w[:, None] * (1.0 - avg)[None, :], 0.0, None)

    if code == CODE_KOLMOGOROV:
        return 0.5 * (np.abs(p0 - q0).sum(axis=0) + np.abs(p1 - q1).sum(axis=0))
    if code == CODE_PROB_ERROR:
        return 0.5 * (np.minimum(p0, q0).sum(axis=0) + np.minimum(p1, q1).sum(axis=0))
    if code == CODE_BHATTACHARYYA:
        return np.sqrt(p0 * q0).sum(axis=0) + np.sqrt(p1 * q1).sum(axis=0)
    if code == CODE_RELATIVE_ENTROPY:
        out = np.zeros(z.shape[0])
        for p, q in ((p0, q0), (p1, q1)):
            mask = p > 0.0
            bad = mask & (q <= 0.0)
            terms = np.where(mask & ~bad, p * (np.log2(np.where(mask, p, 1.0))
                                               - np.log2(np.where(q > 0.0, q, 1.0))), 0.0)
            out = out + terms.sum(axis=0)
            out = np.where(bad.any(axis=0), np.inf, out)
        return out
    if code == CODE_QJSD:
        acc_m = np.zeros(z.shape[0])
        acc_p = np.zeros(z.shape[0])
        acc_q = np.zeros(z.shape[0])
        for p, q in ((p0, q0), (p1, q1)):
            acc_m += _xlog2(0.5 * (p + q)).sum(axis=0)
            acc_p += _xlog2(p).sum(axis=0)
            acc_q += _xlog2(q).sum(axis=0)
        return np.maximum(0.0, -acc_m + 0.5 * (acc_p + acc_q))
    raise ValueError(f"unknown notion code {code!r}")
