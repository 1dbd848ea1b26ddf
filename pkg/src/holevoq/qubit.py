"""Bloch-sphere closed forms for qubit ensembles.

Every quantity in here has a generic matrix-path twin elsewhere in the
package; the closed forms exist to be fast and to cross-validate the generic
evaluators. Notation: beta_i are the member Bloch vectors, beta_m the Bloch
vector of the ensemble average, z a unit measurement axis, and
f(x) = (1+x)log2(1+x) + (1-x)log2(1-x) the binary-entropy complement.
"""

from __future__ import annotations

import math

import numpy as np

from .ensemble import Ensemble, make_ensemble

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

BLOCH_NORM_ATOL = 1e-10


class DegenerateEnsembleError(ValueError):
    """Raised when a two-state construction needs distinct states."""


def bloch_to_density(b) -> np.ndarray:
    """Density matrix (I + b . sigma)/2 of a Bloch vector.

    Norms in (1, 1+1e-10] are rescaled onto the sphere (roundoff);
    anything longer is rejected.
    """
    b = np.asarray(b, dtype=float)
    if b.shape != (3,):
        raise ValueError(f"Bloch vector must have shape (3,), got {b.shape}")
    r = float(np.linalg.norm(b))
    if r > 1.0 + BLOCH_NORM_ATOL:
        raise ValueError(f"Bloch vector has norm {r!r} > 1")
    if r > 1.0:
        b = b / r
    return 0.5 * (np.eye(2, dtype=complex) + b[0] * SIGMA_X + b[1] * SIGMA_Y + b[2] * SIGMA_Z)


def density_to_bloch(rho) -> np.ndarray:
    """Bloch vector (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {rho.shape}")
    b = np.array(
        [
            np.trace(rho @ SIGMA_X).real,
            np.trace(rho @ SIGMA_Y).real,
            np.trace(rho @ SIGMA_Z).real,
        ]
    )
    r = float(np.linalg.norm(b))
    if r > 1.0 + BLOCH_NORM_ATOL:
        raise ValueError(f"state maps outside the Bloch ball (norm {r!r})")
    if r > 1.0:
        b = b / r
    return b


def ensemble_bloch(e: Ensemble) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(weights, member Bloch vectors, Bloch vector of the average)."""
    if e.dim != 2:
        raise ValueError(f"qubit closed forms need dim 2, got {e.dim}")
    betas = np.array([density_to_bloch(s) for s in e.states])
    beta_m = density_to_bloch(e.average)
    return e.weights, betas, beta_m


def binary_f(x: float) -> float:
    """f(x) = (1+x)log2(1+x) + (1-x)log2(1-x) on [-1, 1]; even, f(1) = 2."""
    x = abs(float(x))
    if x > 1.0:
        if x > 1.0 + BLOCH_NORM_ATOL:
            raise ValueError(f"binary_f argument {x!r} outside [-1, 1]")
        x = 1.0
    hi = (1.0 + x) * math.log2(1.0 + x) if x > 0.0 else 0.0
    lo = (1.0 - x) * math.log2(1.0 - x) if x < 1.0 else 0.0
    return hi + lo


def xk_closed(e: Ensemble) -> float:
    """Trace-distance ensemble bound, (1/2) sum p_i |beta_i - beta_m|."""
    w, betas, beta_m = ensemble_bloch(e)
    return float(0.5 * (w * np.linalg.norm(betas - beta_m, axis=1)).sum())


def k_joint_closed(e: Ensemble, z) -> float:
    """Kolmogorov divergence of the axis-z outcome table,
    (1/2) sum p_i |(beta_i - beta_m) . z|."""
    w, betas, beta_m = ensemble_bloch(e)
    z = _unit_axis(z)
    return float(0.5 * (w * np.abs((betas - beta_m) @ z)).sum())


def _mixedness(r_sq: float) -> float:
    # 1 - |beta|^2, with the cancellation dirt of pure states (~1e-16,
    # amplified to ~1e-8 by the square root downstream) snapped to zero
    u = max(0.0, 1.0 - r_sq)
    return 0.0 if u < 1e-12 else u


def xb_closed(e: Ensemble) -> float:
    """Bhattacharyya ensemble bound via the qubit overlap closed form."""
    w, betas, beta_m = ensemble_bloch(e)
    um = _mixedness(float(beta_m @ beta_m))
    total = 0.0
    for p, beta in zip(w, betas):
        ui = _mixedness(float(beta @ beta))
        inner = math.sqrt(ui * um)
        total += p * math.sqrt(max(0.0, 1.0 + float(beta @ beta_m) + inner))
    return float(total / math.sqrt(2.0))


def b_joint_closed(e: Ensemble, z) -> float:
    """Bhattacharyya coefficient of the axis-z outcome table.

    Per-member overlap of the conditional outcome pair with the marginal
    pair; the inner radicand mixes the member and average projections,
    (1 - (beta_i.z)^2)(1 - (beta_m.z)^2).
    """
    w, betas, beta_m = ensemble_bloch(e)
    z = _unit_axis(z)
    b = float(beta_m @ z)
    total = 0.0
    for p, beta in zip(w, betas):
        a = float(beta @ z)
        inner = math.sqrt(max(0.0, (1.0 - a * a) * (1.0 - b * b)))
        total += p * math.sqrt(max(0.0, 1.0 + a * b + inner))
    return float(total / math.sqrt(2.0))


def xsr_closed(e: Ensemble) -> float:
    """Relative-entropy ensemble bound (entropy difference in Bloch form),
    (1/2) sum p_i f(|beta_i|) - (1/2) f(|beta_m|)."""
    w, betas, beta_m = ensemble_bloch(e)
    acc = sum(p * binary_f(min(1.0, float(np.linalg.norm(beta)))) for p, beta in zip(w, betas))
    return float(0.5 * acc - 0.5 * binary_f(min(1.0, float(np.linalg.norm(beta_m)))))


def hr_joint_closed(e: Ensemble, z) -> float:
    """Mutual information of the axis-z outcome table,
    (1/2) sum p_i f(beta_i . z) - (1/2) f(beta_m . z)."""
    w, betas, beta_m = ensemble_bloch(e)
    z = _unit_axis(z)
    acc = sum(p * binary_f(float(beta @ z)) for p, beta in zip(w, betas))
    return float(0.5 * acc - 0.5 * binary_f(float(beta_m @ z)))


def nc_closed(e: Ensemble) -> float:
    """Non-commutativity in cross-product form,
    sum over ordered pairs of p_k p_l |beta_k x beta_l| / (2 sqrt 2)."""
    w, betas, _ = ensemble_bloch(e)
    total = 0.0
    for k in range(len(w)):
        for l in range(len(w)):
            cross = np.cross(betas[k], betas[l])
            total += w[k] * w[l] * float(np.linalg.norm(cross))
    return float(total / (2.0 * math.sqrt(2.0)))


def purity_closed(e: Ensemble) -> float:
    """Purity of the average state, (1 + |beta_m|^2)/2."""
    _, _, beta_m = ensemble_bloch(e)
    return float(0.5 * (1.0 + float(beta_m @ beta_m)))


def theorem2_axis(e: Ensemble) -> tuple[np.ndarray, float]:
    """Optimal trace-distance axis for a two-state qubit ensemble.

    Returns (z, value) with z = (beta_0 - beta_1)/|beta_0 - beta_1| and
    value = p0 p1 |beta_0 - beta_1|; the axis-z outcome divergence attains
    the ensemble bound there.
    """
    if e.n_states != 2:
        raise DegenerateEnsembleError(
            f"exactly two states required, got {e.n_states}"
        )
    _, betas, _ = ensemble_bloch(e)
    diff = betas[0] - betas[1]
    norm = float(np.linalg.norm(diff))
    if norm <= BLOCH_NORM_ATOL:
        raise DegenerateEnsembleError("the two states coincide; no preferred axis")
    value = float(e.weights[0] * e.weights[1] * norm)
    return diff / norm, value


def example_ensemble(theta: float, p_hat: float) -> Ensemble:
    """Two pure states at relative angle 2*theta on the Bloch sphere.

    State 0 is the north pole |0><0|; state 1 has Bloch vector
    (sin 2theta, 0, cos 2theta). Weights are (p_hat, 1 - p_hat).
    theta must lie in [0, pi/2], p_hat in [0, 1].
    """
    theta = float(theta)
    p_hat = float(p_hat)
    if not 0.0 <= theta <= math.pi / 2.0 + 1e-12:
        raise ValueError(f"theta {theta!r} outside [0, pi/2]")
    if not 0.0 <= p_hat <= 1.0:
        raise ValueError(f"p_hat {p_hat!r} outside [0, 1]")
    c, s = math.cos(theta), math.sin(theta)
    rho0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    rho1 = np.array([[c * c, c * s], [c * s, s * s]], dtype=complex)
    return make_ensemble([p_hat, 1.0 - p_hat], [rho0, rho1])


def _unit_axis(z) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if z.shape != (3,):
        raise ValueError(f"axis must have shape (3,), got {z.shape}")
    r = float(np.linalg.norm(z))
    if abs(r - 1.0) > BLOCH_NORM_ATOL:
        raise ValueError(f"axis must be unit length, got norm {r!r}")
    return z / r
