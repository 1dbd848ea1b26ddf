"""Seeded random generators for the fuzz harnesses and tests.

All randomness flows through numpy's default_rng (PCG64), so a fixed seed
reproduces every draw bit for bit. Distributions: Bloch vectors uniform in
the ball, ensemble weights flat Dirichlet, generic states Ginibre-induced,
channels from Gaussian Kraus operators re-orthonormalized to trace
preservation.
"""

from __future__ import annotations

import numpy as np

from .ensemble import Ensemble, make_ensemble
from .qdistance import KrausChannel
from .qubit import bloch_to_density


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_axis(rng: np.random.Generator) -> np.ndarray:
    """Uniform unit 3-vector."""
    while True:
        v = rng.normal(size=3)
        r = np.linalg.norm(v)
        if r > 1e-12:
            return v / r


def random_bloch_in_ball(rng: np.random.Generator) -> np.ndarray:
    """Uniform point of the closed unit ball."""
    return random_axis(rng) * rng.uniform() ** (1.0 / 3.0)


def random_unit_s(rng: np.random.Generator) -> np.ndarray:
    """Uniform unit 4-vector."""
    while True:
        v = rng.normal(size=4)
        r = np.linalg.norm(v)
        if r > 1e-12:
            return v / r


def random_qubit_ensemble(rng: np.random.Generator, n_states: int | None = None) -> Ensemble:
    """2 to 4 Bloch-ball states under flat Dirichlet weights."""
    n = int(rng.integers(2, 5)) if n_states is None else int(n_states)
    weights = rng.dirichlet(np.ones(n))
    states = [bloch_to_density(random_bloch_in_ball(rng)) for _ in range(n)]
    return make_ensemble(weights, states)


def random_diagonal_qubit_ensemble(rng: np.random.Generator,
                                   n_states: int | None = None) -> Ensemble:
    """Commuting ensemble: Bloch vectors along the z axis."""
    n = int(rng.integers(2, 5)) if n_states is None else int(n_states)
    weights = rng.dirichlet(np.ones(n))
    states = [
        bloch_to_density(np.array([0.0, 0.0, rng.uniform(-1.0, 1.0)])) for _ in range(n)
    ]
    return make_ensemble(weights, states)


def random_two_state_qubit_ensemble(rng: np.random.Generator,
                                    min_separation: float = 0.1,
                                    weight_margin: float = 0.05) -> Ensemble:
    """Two-state ensemble with a bounded-away optimum.

    Nearly identical members (or a vanishing weight) make the optimal axis
    ill-conditioned, so both are excluded by construction.
    """
    while True:
        b0 = random_bloch_in_ball(rng)
        b1 = random_bloch_in_ball(rng)
        if np.linalg.norm(b0 - b1) >= min_separation:
            break
    p = rng.uniform(weight_margin, 1.0 - weight_margin)
    return make_ensemble([p, 1.0 - p], [bloch_to_density(b0), bloch_to_density(b1)])


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Ginibre-induced full-rank state."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish unitary via QR of a Ginibre matrix with phase fixing."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def random_kraus_channel(rng: np.random.Generator, dim: int,
                         n_ops: int | None = None) -> KrausChannel:
    """Random CPTP map: Gaussian Kraus operators re-orthonormalized so that
    sum K^dag K = I."""
    k = int(rng.integers(2, 5)) if n_ops is None else int(n_ops)
    raw = [
        rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        for _ in range(k)
    ]
    gram = sum(g.conj().T @ g for g in raw)
    w, v = np.linalg.eigh(gram)
    inv_sqrt = (v * (1.0 / np.sqrt(np.clip(w, 1e-300, None)))) @ v.conj().T
    return KrausChannel(ops=tuple(g @ inv_sqrt for g in raw))
