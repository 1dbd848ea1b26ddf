"""POVMs, measurement statistics, and the accessible-information search.

The search (`gai`) extremizes the divergence of the outcome joint table over
von Neumann axes on the Bloch sphere: a coarse deterministic grid pass picks
a starting axis, a derivative-free simplex refines it in a local tangent
frame. Distances are maximized, similarities (error probability and
Bhattacharyya) are minimized. Only qubits are supported; larger dimensions
raise instead of silently optimizing over a strict subset of measurements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cdivergence import JointDistribution, d_of_joint, make_joint
from .ensemble import Ensemble, dbhq
from .grid import evaluate_axes
from .notions import DistanceNotion, bound_satisfied, direction
from .qubit import density_to_bloch

POVM_ATOL = 1e-10
AXIS_UNIT_ATOL = 1e-12
S_UNIT_ATOL = 1e-10


class UnsupportedDimensionError(ValueError):
    """Raised when the measurement search is asked for a non-qubit ensemble."""


@dataclass(frozen=True)
class Povm:
    """Positive operator-valued measure: effects (k, d, d), summing to I."""

    effects: np.ndarray

    @property
    def n_outcomes(self) -> int:
        return self.effects.shape[0]

    @property
    def dim(self) -> int:
        return self.effects.shape[1]


def make_povm(effects) -> Povm:
    mats = np.asarray(effects, dtype=complex)
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2] or mats.shape[0] == 0:
        raise ValueError(f"effects must be a non-empty (k, d, d) stack, got {mats.shape}")
    for j, m in enumerate(mats):
        if np.abs(m - m.conj().T).max() > POVM_ATOL:
            raise ValueError(f"effect {j} is not Hermitian")
        w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
        if w[0] < -POVM_ATOL:
            raise ValueError(f"effect {j} has negative eigenvalue {w[0]:.3e}")
    total = mats.sum(axis=0)
    dev = np.abs(total - np.eye(mats.shape[1])).max()
    if dev > POVM_ATOL:
        raise ValueError(f"effects sum deviates from identity by {dev:.3e}")
    mats.setflags(write=False)
    return Povm(effects=mats)


def axis_from_s(s) -> np.ndarray:
    """Measurement axis of a unit 4-vector rotation parameter.

    z = (2(-s0 s2 + s1 s3), 2(s0 s1 + s2 s3), s0^2 + s3^2 - s1^2 - s2^2);
    unit whenever s is.
    """
    s = np.asarray(s, dtype=float)
    if s.shape != (4,):
        raise ValueError(f"s must have shape (4,), got {s.shape}")
    if abs(float(np.linalg.norm(s)) - 1.0) > S_UNIT_ATOL:
        raise ValueError(f"s must be unit length, got norm {np.linalg.norm(s)!r}")
    s0, s1, s2, s3 = (float(x) for x in s)
    return np.array(
        [
            2.0 * (-s0 * s2 + s1 * s3),
            2.0 * (s0 * s1 + s2 * s3),
            s0 * s0 + s3 * s3 - s1 * s1 - s2 * s2,
        ]
    )


@dataclass(frozen=True)
class QubitVonNeumann:
    """A qubit projective measurement: unit axis, optionally its generator s.

    When s is given the axis must reproduce axis_from_s(s) within 1e-12.
    """

    axis: np.ndarray
    s: np.ndarray | None = None

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        if axis.shape != (3,) or abs(float(np.linalg.norm(axis)) - 1.0) > AXIS_UNIT_ATOL:
            raise ValueError("axis must be a unit 3-vector")
        object.__setattr__(self, "axis", axis)
        if self.s is not None:
            s = np.asarray(self.s, dtype=float)
            derived = axis_from_s(s)
            if np.abs(derived - axis).max() > AXIS_UNIT_ATOL:
                raise ValueError(
                    f"axis and generator disagree by {np.abs(derived - axis).max():.3e}"
                )
            object.__setattr__(self, "s", s)

    def povm(self) -> Povm:
        return effects_from_axis(self.axis)


def effects_from_axis(z) -> Povm:
    """Two-outcome projective POVM {(I + z.sigma)/2, (I - z.sigma)/2}."""
    z = np.asarray(z, dtype=float)
    if z.shape != (3,):
        raise ValueError(f"axis must have shape (3,), got {z.shape}")
    if abs(float(np.linalg.norm(z)) - 1.0) > 1e-10:
        raise ValueError(f"axis must be unit length, got norm {np.linalg.norm(z)!r}")
    zs = np.array(
        [
            [z[2], z[0] - 1j * z[1]],
            [z[0] + 1j * z[1], -z[2]],
        ],
        dtype=complex,
    )
    eye = np.eye(2, dtype=complex)
    return make_povm(np.array([0.5 * (eye + zs), 0.5 * (eye - zs)]))


def joint_distribution(e: Ensemble, m: Povm) -> JointDistribution:
    """Outcome joint table P_ij = p_i Tr(M_j rho_i) with marginals attached.

    Uses the plain trace form; it equals the symmetrized
    Tr(sqrt(M) rho sqrt(M)) by trace cyclicity (unit-tested).
    """
    if m.dim != e.dim:
        raise ValueError(f"POVM dim {m.dim} does not match ensemble dim {e.dim}")
    cond = np.einsum("jab,iba->ij", m.effects, e.states).real
    table = e.weights[:, None] * cond
    marginal = np.einsum("jab,ba->j", m.effects, e.average).real
    return make_joint(table, row_marginal=e.weights, col_marginal=marginal)


@dataclass(frozen=True)
class OptimizerConfig:
    """Deterministic two-stage search settings.

    grid_azimuth x grid_polar coarse axes (poles included), then a simplex
    refinement down to the objective tolerance `tol` and axis tolerance
    `axis_tol`, capped at `max_steps` iterations. The seed only jitters the
    initial simplex to break exact ties on degenerate objectives.
    """

    grid_azimuth: int = 128
    grid_polar: int = 64
    tol: float = 1e-10
    axis_tol: float = 1e-6
    max_steps: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.grid_azimuth < 4 or self.grid_polar < 3:
            raise ValueError("grid must be at least 4 x 3")
        if self.tol <= 0 or self.axis_tol <= 0 or self.max_steps < 1:
            raise ValueError("tolerances and step cap must be positive")


@dataclass(frozen=True)
class GaiResult:
    value: float
    axis: np.ndarray
    direction: str
    iterations: int

    def __iter__(self):
        # unpacks as (value, axis)
        return iter((self.value, self.axis))


def _grid_axes(n_azimuth: int, n_polar: int) -> np.ndarray:
    polar = np.linspace(0.0, np.pi, n_polar)
    azimuth = np.arange(n_azimuth) * (2.0 * np.pi / n_azimuth)
    st = np.sin(polar)[:, None]
    ct = np.cos(polar)[:, None]
    z = np.empty((n_polar * n_azimuth, 3))
    z[:, 0] = (st * np.cos(azimuth)[None, :]).ravel()
    z[:, 1] = (st * np.sin(azimuth)[None, :]).ravel()
    z[:, 2] = np.broadcast_to(ct, (n_polar, n_azimuth)).ravel()
    return z


def _lexicographic_best(axes: np.ndarray) -> int:
    best = 0
    for k in range(1, axes.shape[0]):
        if tuple(axes[k]) < tuple(axes[best]):
            best = k
    return best


def _tangent_frame(z0: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pick = np.zeros(3)
    pick[int(np.argmin(np.abs(z0)))] = 1.0
    e1 = np.cross(z0, pick)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(z0, e1)
    return e1, e2


def gai(e: Ensemble, notion: DistanceNotion,
        opt: OptimizerConfig = OptimizerConfig()) -> GaiResult:
    """Extremal divergence of the outcome joint over von Neumann axes.

    Maximizes for Kolmogorov, relative entropy and Jensen-Shannon;
    minimizes for error probability and Bhattacharyya. Deterministic for a
    fixed config.
    """
    if e.dim != 2:
        raise UnsupportedDimensionError(
            f"measurement search supports qubits only, got dim {e.dim}"
        )
    weights = e.weights
    bloch = np.array([density_to_bloch(s) for s in e.states])
    sense = direction(notion)
    sign = -1.0 if sense == "max" else 1.0

    grid = _grid_axes(opt.grid_azimuth, opt.grid_polar)
    values = evaluate_axes(notion, weights, bloch, grid)
    scored = sign * values
    best_score = scored.min()
    ties = np.flatnonzero(scored == best_score)
    z0 = grid[ties[_lexicographic_best(grid[ties])]]

    e1, e2 = _tangent_frame(z0)

    def objective(uv: np.ndarray) -> float:
        v = z0 + uv[0] * e1 + uv[1] * e2
        v = v / np.linalg.norm(v)
        return sign * float(evaluate_axes(notion, weights, bloch, v[None, :])[0])

    rng = np.random.default_rng(opt.seed)
    step = np.pi / max(opt.grid_polar - 1, 1)
    simplex = np.array([[0.0, 0.0], [step, 0.0], [0.0, step]])
    simplex[1:] += rng.uniform(-1e-9, 1e-9, size=(2, 2))
    fvals = np.array([objective(p) for p in simplex])

    iterations = 0
    while iterations < opt.max_steps:
        order = np.argsort(fvals, kind="stable")
        simplex = simplex[order]
        fvals = fvals[order]
        spread = fvals[-1] - fvals[0]
        diameter = max(
            np.linalg.norm(simplex[1] - simplex[0]),
            np.linalg.norm(simplex[2] - simplex[0]),
        )
        if spread <= opt.tol and diameter <= opt.axis_tol:
            break
        iterations += 1
        centroid = simplex[:2].mean(axis=0)
        reflected = centroid + (centroid - simplex[2])
        fr = objective(reflected)
        if fr < fvals[0]:
            expanded = centroid + 2.0 * (centroid - simplex[2])
            fe = objective(expanded)
            if fe < fr:
                simplex[2], fvals[2] = expanded, fe
            else:
                simplex[2], fvals[2] = reflected, fr
        elif fr < fvals[1]:
            simplex[2], fvals[2] = reflected, fr
        else:
            contracted = centroid + 0.5 * (simplex[2] - centroid)
            fc = objective(contracted)
            if fc < fvals[2]:
                simplex[2], fvals[2] = contracted, fc
            else:
                for k in (1, 2):
                    simplex[k] = simplex[0] + 0.5 * (simplex[k] - simplex[0])
                    fvals[k] = objective(simplex[k])

    best = int(np.argmin(fvals))
    uv = simplex[best]
    axis = z0 + uv[0] * e1 + uv[1] * e2
    axis = axis / np.linalg.norm(axis)
    value = float(sign * fvals[best])
    # never fall behind the grid winner (simplex could stall on a kink)
    grid_value = float(sign * best_score)
    refined_worse = grid_value > value if sense == "max" else grid_value < value
    if refined_worse:
        axis = z0
        value = grid_value
    return GaiResult(value=value, axis=axis, direction=sense, iterations=iterations)


def check_theorem1(e: Ensemble, m: Povm, notion: DistanceNotion,
                   tol: float = 1e-9) -> tuple[float, float, bool]:
    """Measured divergence vs the ensemble bound.

    lhs is the divergence of the outcome joint, rhs the ensemble average
    distance; ok says the bound holds with the direction proper to the
    notion (distances bounded above, similarities below).
    """
    lhs = d_of_joint(notion, joint_distribution(e, m))
    rhs = dbhq(e, notion)
    return lhs, rhs, bound_satisfied(notion, lhs, rhs, tol)
