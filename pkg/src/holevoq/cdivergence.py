"""Classical divergences between probability vectors and joint outcome tables.

Everything is in bits (base-2 logarithms). Relative entropy returns the IEEE
+inf sentinel when the support condition fails; it is produced by an explicit
check, never by overflow, so downstream comparisons stay NaN-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .notions import DistanceNotion

PROB_SUM_ATOL = 1e-10
PROB_NEG_ATOL = 1e-12
MI_CROSS_CHECK_ATOL = 1e-10


def as_prob_vector(p, *, name: str = "probability vector") -> np.ndarray:
    """Validate a probability vector.

    Entries in [-1e-12, 0) are clamped to zero (measurement roundoff);
    anything more negative is rejected. The sum must be 1 within 1e-10.
    """
    v = np.asarray(p, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-d array, got shape {v.shape}")
    if v.min() < -PROB_NEG_ATOL:
        raise ValueError(f"{name} has negative entry {v.min():.3e}")
    v = np.clip(v, 0.0, None)
    total = float(v.sum())
    if abs(total - 1.0) > PROB_SUM_ATOL:
        raise ValueError(f"{name} sums to {total!r}, expected 1 within {PROB_SUM_ATOL:g}")
    return v


def _check_same_length(p: np.ndarray, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=float).ravel()
    q = np.asarray(q, dtype=float).ravel()
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    return p, q


def entropy_bits(p) -> float:
    """Shannon entropy in bits with the 0 log 0 = 0 convention."""
    v = np.asarray(p, dtype=float).ravel()
    pos = v[v > 0.0]
    return float(max(0.0, -(pos * np.log2(pos)).sum()))


def kolmogorov_c(p, q) -> float:
    """Kolmogorov (total variation) distance, (1/2) sum |p_i - q_i|."""
    p, q = _check_same_length(p, q)
    return float(0.5 * np.abs(p - q).sum())


def prob_error_c(p, q) -> float:
    """Error probability of optimal discrimination, (1/2) sum min(p_i, q_i).

    Cross-checked against the affine identity 1/2 - K/2 at 1e-12.
    """
    p, q = _check_same_length(p, q)
    direct = float(0.5 * np.minimum(p, q).sum())
    affine = 0.5 - 0.5 * kolmogorov_c(p, q)
    if abs(direct - affine) > 1e-12:
        raise FloatingPointError(
            f"prob-error cross-check failed: {direct!r} vs {affine!r}"
        )
    return direct


def bhattacharyya_c(p, q) -> float:
    """Bhattacharyya coefficient, sum sqrt(p_i q_i). A similarity in [0, 1]."""
    p, q = _check_same_length(p, q)
    return float(np.sqrt(np.clip(p, 0.0, None) * np.clip(q, 0.0, None)).sum())


def relative_entropy_c(p, q) -> float:
    """Relative entropy sum p_i log2(p_i/q_i), +inf if support(p) exceeds support(q)."""
    p, q = _check_same_length(p, q)
    mask = p > 0.0
    if np.any(q[mask] <= 0.0):
        return math.inf
    pm = p[mask]
    qm = q[mask]
    return float((pm * (np.log2(pm) - np.log2(qm))).sum())


def jsd_c(p, q) -> float:
    """Jensen-Shannon divergence in bits, symmetric and bounded by 1."""
    p, q = _check_same_length(p, q)
    mixed = 0.5 * (p + q)
    return float(max(0.0, entropy_bits(mixed) - 0.5 * (entropy_bits(p) + entropy_bits(q))))


@dataclass(frozen=True)
class JointDistribution:
    """Joint outcome table with its two marginals.

    matrix[i, j] is the probability of input i and outcome j; row_marginal
    and col_marginal are the input and outcome distributions.
    """

    matrix: np.ndarray
    row_marginal: np.ndarray
    col_marginal: np.ndarray


def make_joint(matrix, row_marginal=None, col_marginal=None) -> JointDistribution:
    """Build a validated JointDistribution.

    Marginals are computed from the table when omitted and checked against it
    (within 1e-10) when given.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.size == 0:
        raise ValueError(f"joint table must be a non-empty 2-d array, got shape {m.shape}")
    if m.min() < -PROB_NEG_ATOL:
        raise ValueError(f"joint table has negative entry {m.min():.3e}")
    m = np.clip(m, 0.0, None)
    total = float(m.sum())
    if abs(total - 1.0) > PROB_SUM_ATOL:
        raise ValueError(f"joint table sums to {total!r}, expected 1 within {PROB_SUM_ATOL:g}")
    rows = m.sum(axis=1)
    cols = m.sum(axis=0)
    if row_marginal is None:
        row_marginal = rows
    else:
        row_marginal = np.asarray(row_marginal, dtype=float)
        if row_marginal.shape != rows.shape or np.abs(row_marginal - rows).max() > PROB_SUM_ATOL:
            raise ValueError("row marginal does not match the table row sums")
    if col_marginal is None:
        col_marginal = cols
    else:
        col_marginal = np.asarray(col_marginal, dtype=float)
        if col_marginal.shape != cols.shape or np.abs(col_marginal - cols).max() > PROB_SUM_ATOL:
            raise ValueError("column marginal does not match the table column sums")
    m.setflags(write=False)
    row_marginal = np.clip(row_marginal, 0.0, None)
    col_marginal = np.clip(col_marginal, 0.0, None)
    row_marginal.setflags(write=False)
    col_marginal.setflags(write=False)
    return JointDistribution(matrix=m, row_marginal=row_marginal, col_marginal=col_marginal)


def mutual_information(j: JointDistribution) -> float:
    """Mutual information of a joint table, in bits.

    Computed as H(row) + H(col) - H(joint) and cross-checked against the
    relative entropy of the table from the product of its marginals.
    """
    hp = entropy_bits(j.row_marginal)
    hq = entropy_bits(j.col_marginal)
    hpq = entropy_bits(j.matrix)
    combo = hp + hq - hpq
    product = np.outer(j.row_marginal, j.col_marginal)
    direct = relative_entropy_c(j.matrix.ravel(), product.ravel())
    if not math.isfinite(direct) or abs(combo - direct) > MI_CROSS_CHECK_ATOL:
        raise FloatingPointError(
            f"mutual information cross-check failed: {combo!r} vs {direct!r}"
        )
    return float(max(0.0, combo))


def d_of_joint(notion: DistanceNotion, j: JointDistribution) -> float:
    """Divergence of a joint table from the product of its marginals.

    The table and the product are flattened to plain probability vectors and
    handed to the matching classical divergence.
    """
    p = j.matrix.ravel()
    q = np.outer(j.row_marginal, j.col_marginal).ravel()
    if notion is DistanceNotion.KOLMOGOROV:
        return kolmogorov_c(p, q)
    if notion is DistanceNotion.PROB_ERROR:
        return prob_error_c(p, q)
    if notion is DistanceNotion.BHATTACHARYYA:
        return bhattacharyya_c(p, q)
    if notion is DistanceNotion.RELATIVE_ENTROPY:
        return relative_entropy_c(p, q)
    if notion is DistanceNotion.QJSD:
        return jsd_c(p, q)
    raise ValueError(f"unknown notion {notion!r}")
