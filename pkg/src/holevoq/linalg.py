"""Dense complex-Hermitian matrix algebra used throughout the package.

All spectral operations run on the Hermitian part of their input; tolerances
follow one convention package-wide:

* Hermiticity is checked entrywise at 1e-12.
* Density matrices must have unit trace within 1e-10; eigenvalues in
  [-1e-10, 0) are clamped to zero at construction, anything more negative is
  an error.
* Matrix logarithms are taken on the support only; eigenvalues at or below
  1e-12 are treated as off-support.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-10
EIGENVALUE_CLAMP = 1e-10
LOG_SUPPORT_CUTOFF = 1e-12


class EigenSolverError(RuntimeError):
    """Raised when the dense eigensolver fails to converge."""


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    eigenvalues are sorted in descending order; eigenvectors[:, k] is the
    unit eigenvector for eigenvalues[k].
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def is_hermitian(a: np.ndarray, atol: float = HERMITICITY_ATOL) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and bool(
        np.abs(a - a.conj().T).max() <= atol
    )


def hermitian_part(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    return 0.5 * (a + a.conj().T)


def eig(a: np.ndarray) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Raises EigenSolverError with a condition report if LAPACK fails to
    converge, ValueError if the input is not Hermitian within tolerance.
    """
    a = np.asarray(a, dtype=complex)
    if not is_hermitian(a):
        raise ValueError(
            f"matrix is not Hermitian within {HERMITICITY_ATOL:g} "
            f"(max asymmetry {np.abs(a - a.conj().T).max():.3e})"
        )
    try:
        w, v = np.linalg.eigh(hermitian_part(a))
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(
            f"eigensolver did not converge on a {a.shape[0]}x{a.shape[1]} matrix "
            f"(hs norm {np.linalg.norm(a):.3e}, max entry {np.abs(a).max():.3e}): {exc}"
        ) from exc
    order = np.argsort(w)[::-1]
    return Spectrum(eigenvalues=w[order], eigenvectors=v[:, order])


def as_density(mat: np.ndarray, *, name: str = "state") -> np.ndarray:
    """Validate and normalize a density matrix.

    Checks Hermiticity and unit trace, clamps roundoff-negative eigenvalues
    in [-1e-10, 0) to zero, and rejects anything more negative.
    """
    a = np.asarray(mat, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    if not is_hermitian(a):
        raise ValueError(
            f"{name} is not Hermitian within {HERMITICITY_ATOL:g} "
            f"(max asymmetry {np.abs(a - a.conj().T).max():.3e})"
        )
    a = hermitian_part(a)
    tr = float(a.trace().real)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValueError(f"{name} has trace {tr!r}, expected 1 within {TRACE_ATOL:g}")
    spec = eig(a)
    w = spec.eigenvalues
    if w[-1] < -EIGENVALUE_CLAMP:
        raise ValueError(
            f"{name} has negative eigenvalue {w[-1]:.3e} "
            f"(below the -{EIGENVALUE_CLAMP:g} clamp threshold)"
        )
    if w[-1] < 0.0:
        v = spec.eigenvectors
        a = (v * np.clip(w, 0.0, None)) @ v.conj().T
        a = hermitian_part(a)
    return a


def mat_sqrt(a: np.ndarray) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix."""
    spec = eig(a)
    w = np.clip(spec.eigenvalues, 0.0, None)
    v = spec.eigenvectors
    return (v * np.sqrt(w)) @ v.conj().T


def mat_log2_on_support(a: np.ndarray) -> np.ndarray:
    """Base-2 matrix logarithm restricted to the support.

    Eigenvalues at or below the support cutoff contribute zero instead of
    -inf, matching the 0*log(0) = 0 convention of entropy sums.
    """
    spec = eig(a)
    w = spec.eigenvalues
    logs = np.where(w > LOG_SUPPORT_CUTOFF, np.log2(np.maximum(w, LOG_SUPPORT_CUTOFF)), 0.0)
    v = spec.eigenvectors
    return (v * logs) @ v.conj().T


def trace_norm(a: np.ndarray) -> float:
    """Sum of absolute eigenvalues (for Hermitian input)."""
    return float(np.abs(eig(a).eigenvalues).sum())


def hs_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(np.asarray(a)))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy in bits, -sum(lambda log2 lambda) over the support."""
    w = eig(rho).eigenvalues
    w = w[w > LOG_SUPPORT_CUTOFF]
    return float(max(0.0, -(w * np.log2(w)).sum()))
