"""Distance and overlap measures between density matrices, plus channels.

Five notions drive the rest of the package (trace distance, error
probability, Bhattacharyya overlap, relative entropy, quantum
Jensen-Shannon divergence); Bures and squared Hellinger are provided as the
metric companions used in the axiom checks. Relative entropy returns +inf
when the support condition fails, via an explicit projector test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .linalg import (
    LOG_SUPPORT_CUTOFF,
    eig,
    hermitian_part,
    hs_norm,
    kron,
    mat_log2_on_support,
    mat_sqrt,
    trace_norm,
    von_neumann_entropy,
)
from .notions import DistanceNotion

SUPPORT_ATOL = 1e-10
CPTP_ATOL = 1e-10


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Kolmogorov (trace) distance, (1/2)||rho - sigma||_1."""
    return 0.5 * trace_norm(np.asarray(rho) - np.asarray(sigma))


def prob_error_q(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Single-shot error probability for equiprobable discrimination."""
    return 0.5 - 0.5 * trace_distance(rho, sigma)


def bhattacharyya_q(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Quantum Bhattacharyya overlap Tr sqrt(sqrt(sigma) rho sqrt(sigma)).

    Square root of the fidelity; 1 iff the states coincide. Eigenvalues of
    the inner product below 1e-14 of the largest are rank-deficiency
    roundoff and are zeroed, since the square root would amplify them from
    ~1e-17 to ~1e-9.
    """
    s = mat_sqrt(sigma)
    w = eig(s @ np.asarray(rho, dtype=complex) @ s).eigenvalues
    w = np.clip(w, 0.0, None)
    if w[0] > 0.0:
        w[w < 1e-14 * w[0]] = 0.0
    return float(np.sqrt(w).sum())


def bures_sq(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Squared Bures distance 2(1 - B), the metric of the Bhattacharyya overlap."""
    return float(max(0.0, 2.0 * (1.0 - bhattacharyya_q(rho, sigma))))


def _support_projector_complement(sigma: np.ndarray) -> np.ndarray:
    spec = eig(sigma)
    v = spec.eigenvectors
    off = spec.eigenvalues <= SUPPORT_ATOL
    return (v[:, off]) @ (v[:, off]).conj().T


def relative_entropy_q(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Quantum relative entropy Tr rho (log2 rho - log2 sigma), in bits.

    Returns +inf when the support of rho leaks out of the support of sigma
    (projector test at 1e-10); never produces NaN.
    """
    rho = np.asarray(rho, dtype=complex)
    comp = _support_projector_complement(sigma)
    if hs_norm(comp @ rho @ comp) > SUPPORT_ATOL:
        return math.inf
    w = eig(rho).eigenvalues
    w = w[w > LOG_SUPPORT_CUTOFF]
    tr_rho_log_rho = float((w * np.log2(w)).sum())
    tr_rho_log_sigma = float(np.trace(rho @ mat_log2_on_support(sigma)).real)
    return max(0.0, tr_rho_log_rho - tr_rho_log_sigma)


def qjsd(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Quantum Jensen-Shannon divergence in bits, symmetric, bounded by 1."""
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    mixed = 0.5 * (rho + sigma)
    val = von_neumann_entropy(mixed) - 0.5 * (
        von_neumann_entropy(rho) + von_neumann_entropy(sigma)
    )
    return float(max(0.0, val))


def hellinger_sq(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Squared Hellinger distance 2(1 - Tr sqrt(rho) sqrt(sigma))."""
    overlap = float(np.trace(mat_sqrt(rho) @ mat_sqrt(sigma)).real)
    return float(max(0.0, 2.0 * (1.0 - overlap)))


_QUANTUM_EVALUATORS: dict[DistanceNotion, Callable[[np.ndarray, np.ndarray], float]] = {
    DistanceNotion.KOLMOGOROV: trace_distance,
    DistanceNotion.PROB_ERROR: prob_error_q,
    DistanceNotion.BHATTACHARYYA: bhattacharyya_q,
    DistanceNotion.RELATIVE_ENTROPY: relative_entropy_q,
    DistanceNotion.QJSD: qjsd,
}


def quantum_evaluator(notion: DistanceNotion) -> Callable[[np.ndarray, np.ndarray], float]:
    """The density-matrix evaluator for a notion."""
    try:
        return _QUANTUM_EVALUATORS[notion]
    except KeyError:
        raise ValueError(f"unknown notion {notion!r}") from None


@dataclass(frozen=True)
class QuantumDistance:
    """A named state-pair functional with its monotonicity direction.

    larger_is_closer=True marks similarities (they grow under channels),
    False marks distances (they shrink).
    """

    name: str
    evaluate: Callable[[np.ndarray, np.ndarray], float]
    larger_is_closer: bool = False


TRACE = QuantumDistance("trace", trace_distance)
BURES_SQ = QuantumDistance("bures-sq", bures_sq)
REL_ENTROPY = QuantumDistance("relative-entropy", relative_entropy_q)
QJSD_DIST = QuantumDistance("qjsd", qjsd)
HELLINGER_SQ = QuantumDistance("hellinger-sq", hellinger_sq)
BHATTACHARYYA = QuantumDistance("bhattacharyya", bhattacharyya_q, larger_is_closer=True)
PROB_ERROR = QuantumDistance("prob-error", prob_error_q, larger_is_closer=True)

DPI_DISTANCES = (TRACE, BURES_SQ, REL_ENTROPY, QJSD_DIST)
ADDITIVITY_DISTANCES = (TRACE, BURES_SQ, HELLINGER_SQ, REL_ENTROPY, QJSD_DIST, BHATTACHARYYA)


@dataclass(frozen=True)
class KrausChannel:
    """A completely positive trace-preserving map given by Kraus operators.

    Operators may be rectangular (output dim x input dim); trace preservation
    sum_k K_k^dag K_k = I is checked at construction.
    """

    ops: tuple

    def __post_init__(self):
        if len(self.ops) == 0:
            raise ValueError("channel needs at least one Kraus operator")
        ops = tuple(np.asarray(k, dtype=complex) for k in self.ops)
        din = ops[0].shape[1]
        dout = ops[0].shape[0]
        for k in ops:
            if k.ndim != 2 or k.shape != (dout, din):
                raise ValueError("Kraus operators must share one shape")
        total = sum(k.conj().T @ k for k in ops)
        if np.abs(total - np.eye(din)).max() > CPTP_ATOL:
            raise ValueError(
                f"channel is not trace preserving within {CPTP_ATOL:g} "
                f"(max deviation {np.abs(total - np.eye(din)).max():.3e})"
            )
        object.__setattr__(self, "ops", ops)

    @property
    def input_dim(self) -> int:
        return self.ops[0].shape[1]

    @property
    def output_dim(self) -> int:
        return self.ops[0].shape[0]


def apply_channel(ch: KrausChannel, rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (ch.input_dim, ch.input_dim):
        raise ValueError(
            f"state dimension {rho.shape} does not match channel input {ch.input_dim}"
        )
    out = sum(k @ rho @ k.conj().T for k in ch.ops)
    return hermitian_part(out)


def dephasing_channel(dim: int) -> KrausChannel:
    """Full dephasing in the computational basis."""
    ops = []
    for i in range(dim):
        e = np.zeros((dim, dim), dtype=complex)
        e[i, i] = 1.0
        ops.append(e)
    return KrausChannel(ops=tuple(ops))


def partial_trace_channel(dim_a: int, dim_b: int) -> KrausChannel:
    """Trace out the second tensor factor of a dim_a * dim_b system."""
    ops = []
    ia = np.eye(dim_a, dtype=complex)
    for k in range(dim_b):
        bra = np.zeros((1, dim_b), dtype=complex)
        bra[0, k] = 1.0
        ops.append(kron(ia, bra))
    return KrausChannel(ops=tuple(ops))


def check_dpi(d: QuantumDistance, ch: KrausChannel, rho: np.ndarray,
              sigma: np.ndarray, tol: float = 1e-9) -> bool:
    """Data-processing check: distances may only shrink under a channel,
    similarities may only grow. +inf before-values trivially pass."""
    before = d.evaluate(rho, sigma)
    after = d.evaluate(apply_channel(ch, rho), apply_channel(ch, sigma))
    if d.larger_is_closer:
        return after >= before - tol
    return after <= before + tol
