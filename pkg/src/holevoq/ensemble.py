"""Quantum ensembles and ensemble-level distinguishability quantities.

An ensemble is a weighted finite collection of density matrices of one
dimension. The central quantity is the weighted average distance of the
members from the ensemble average state, evaluated under any of the five
notions; for relative entropy it reduces to the usual entropy difference,
which is computed alongside as a cross-check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .cdivergence import as_prob_vector
from .linalg import as_density, hs_norm, kron, von_neumann_entropy
from .notions import DistanceNotion
from .qdistance import quantum_evaluator

AVERAGE_CACHE_ATOL = 1e-12
HOLEVO_CROSS_CHECK_ATOL = 1e-9
PROPERTY_F_DIM_CAP = 32


class EnsembleFormatError(ValueError):
    """Raised when an ensemble file is structurally valid JSON but not a
    valid ensemble document."""


@dataclass(frozen=True)
class Ensemble:
    """Weighted collection of same-dimension density matrices.

    weights: (n,) probability vector. states: (n, d, d) stack. average is
    the weighted mixture, cached at construction. All arrays are read-only.
    """

    weights: np.ndarray
    states: np.ndarray
    average: np.ndarray

    @property
    def n_states(self) -> int:
        return self.states.shape[0]

    @property
    def dim(self) -> int:
        return self.states.shape[1]


def make_ensemble(weights, states) -> Ensemble:
    w = as_prob_vector(weights, name="ensemble weights")
    mats = [as_density(s, name=f"state {i}") for i, s in enumerate(states)]
    if len(mats) != w.size:
        raise ValueError(f"{w.size} weights but {len(mats)} states")
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise ValueError(f"states have mixed dimensions {sorted(dims)}")
    stack = np.array(mats, dtype=complex)
    avg = np.einsum("i,ijk->jk", w, stack)
    for a in (w, stack, avg):
        a.setflags(write=False)
    return Ensemble(weights=w, states=stack, average=avg)


def validate_average(e: Ensemble) -> None:
    """Check that the cached average still matches its parts."""
    recomputed = np.einsum("i,ijk->jk", e.weights, e.states)
    dev = np.abs(recomputed - e.average).max()
    if dev > AVERAGE_CACHE_ATOL:
        raise ValueError(f"cached average deviates by {dev:.3e}")


def purity(rho: np.ndarray) -> float:
    """Tr rho^2, between 1/d and 1."""
    rho = np.asarray(rho, dtype=complex)
    return float(np.trace(rho @ rho).real)


def dbhq(e: Ensemble, notion: DistanceNotion) -> float:
    """Average distance of the ensemble members from the ensemble average.

    For relative entropy this equals the entropy of the average minus the
    average entropy; both routes are computed and must agree at 1e-9.
    """
    ev = quantum_evaluator(notion)
    val = 0.0
    for p, state in zip(e.weights, e.states):
        if p > 0.0:
            val += float(p) * ev(state, e.average)
    if notion is DistanceNotion.RELATIVE_ENTROPY and math.isfinite(val):
        holevo = von_neumann_entropy(e.average) - sum(
            float(p) * von_neumann_entropy(s) for p, s in zip(e.weights, e.states) if p > 0.0
        )
        if abs(val - holevo) > HOLEVO_CROSS_CHECK_ATOL:
            raise FloatingPointError(
                f"relative-entropy cross-check failed: {val!r} vs {holevo!r}"
            )
    return float(val)


def non_commutativity(e: Ensemble) -> float:
    """Overall non-commutativity: (1/2) sum over all ordered pairs (k, l) of
    the Hilbert-Schmidt norm of [p_k rho_k, p_l rho_l]."""
    total = 0.0
    for k in range(e.n_states):
        a = e.weights[k] * e.states[k]
        for l in range(e.n_states):
            b = e.weights[l] * e.states[l]
            total += 0.5 * hs_norm(a @ b - b @ a)
    return float(total)


def verify_property_f(e: Ensemble, notion: DistanceNotion) -> tuple[float, float]:
    """Block-diagonal identity for the ensemble bound.

    Embeds the ensemble as a classical-quantum state sum_i p_i |i><i| x rho_i,
    measures its distance from the uncorrelated product, and returns that
    value next to the ensemble average distance. The two agree for every
    notion implemented here.
    """
    n, d = e.n_states, e.dim
    if (n + 1) * d > PROPERTY_F_DIM_CAP:
        raise ValueError(
            f"embedding dimension {(n + 1) * d} exceeds the cap {PROPERTY_F_DIM_CAP}"
        )
    cq = np.zeros((n * d, n * d), dtype=complex)
    for i in range(n):
        marker = np.zeros((n, n), dtype=complex)
        marker[i, i] = 1.0
        cq += e.weights[i] * kron(marker, e.states[i])
    product = kron(np.diag(e.weights.astype(complex)), e.average)
    lhs = quantum_evaluator(notion)(cq, product)
    rhs = dbhq(e, notion)
    return float(lhs), float(rhs)


def _state_to_json(mat: np.ndarray) -> list:
    return [[[float(x.real), float(x.imag)] for x in row] for row in mat]


def ensemble_to_json(e: Ensemble) -> dict:
    """Plain-dict document in the matrix form of the ensemble file format."""
    return {
        "dim": e.dim,
        "states": [
            {"p": float(p), "matrix": _state_to_json(s)}
            for p, s in zip(e.weights, e.states)
        ],
    }


def _matrix_from_json(entry, dim: int, index: int) -> np.ndarray:
    rows = entry["matrix"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise EnsembleFormatError(f"state {index}: matrix must have {dim} rows")
    out = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise EnsembleFormatError(f"state {index}: row {i} must have {dim} entries")
        for j, cell in enumerate(row):
            if (not isinstance(cell, list)) or len(cell) != 2:
                raise EnsembleFormatError(
                    f"state {index}: entry ({i},{j}) must be a [re, im] pair"
                )
            out[i, j] = complex(float(cell[0]), float(cell[1]))
    return out


def _bloch_from_json(entry, index: int) -> np.ndarray:
    vec = entry["bloch"]
    if not isinstance(vec, list) or len(vec) != 3:
        raise EnsembleFormatError(f"state {index}: bloch must be a 3-vector")
    b = np.asarray([float(x) for x in vec])
    if np.linalg.norm(b) > 1.0 + 1e-10:
        raise EnsembleFormatError(
            f"state {index}: bloch vector has norm {np.linalg.norm(b)!r} > 1"
        )
    b = b if np.linalg.norm(b) <= 1.0 else b / np.linalg.norm(b)
    return np.array(
        [
            [1.0 + b[2], b[0] - 1j * b[1]],
            [b[0] + 1j * b[1], 1.0 - b[2]],
        ],
        dtype=complex,
    ) / 2.0


def ensemble_from_json(doc) -> Ensemble:
    """Parse an ensemble document.

    The document is {"dim": d, "states": [...]}; each state carries "p" and
    exactly one of "matrix" (list of [re, im] rows) or, for qubits, "bloch"
    (a 3-vector). The two state forms cannot be mixed in one document.
    """
    if not isinstance(doc, dict):
        raise EnsembleFormatError("document must be a JSON object")
    if "dim" not in doc or "states" not in doc:
        raise EnsembleFormatError('document needs "dim" and "states" fields')
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise EnsembleFormatError(f'"dim" must be a positive integer, got {dim!r}')
    entries = doc["states"]
    if not isinstance(entries, list) or len(entries) == 0:
        raise EnsembleFormatError('"states" must be a non-empty list')
    forms = set()
    weights = []
    mats = []
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict) or "p" not in entry:
            raise EnsembleFormatError(f'state {index}: needs a "p" field')
        has_matrix = "matrix" in entry
        has_bloch = "bloch" in entry
        if has_matrix == has_bloch:
            raise EnsembleFormatError(
                f'state {index}: needs exactly one of "matrix" or "bloch"'
            )
        forms.add("matrix" if has_matrix else "bloch")
        if len(forms) > 1:
            raise EnsembleFormatError("mixing matrix and bloch states in one file")
        if has_bloch and dim != 2:
            raise EnsembleFormatError("bloch states require dim = 2")
        weights.append(float(entry["p"]))
        mats.append(
            _matrix_from_json(entry, dim, index) if has_matrix else _bloch_from_json(entry, index)
        )
    try:
        return make_ensemble(weights, mats)
    except ValueError as exc:
        raise EnsembleFormatError(str(exc)) from exc


def load_ensemble(path) -> Ensemble:
    """Read an ensemble document from a JSON file.

    json.JSONDecodeError propagates for syntax problems (the caller can read
    line/column off it); structural problems raise EnsembleFormatError.
    """
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return ensemble_from_json(doc)
