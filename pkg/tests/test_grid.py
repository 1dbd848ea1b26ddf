"""Axis-batch kernel: numpy fallback, compiled extension, matrix path."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from holevoq import _axes_py
from holevoq.cdivergence import d_of_joint
from holevoq.grid import backend_name, evaluate_axes
from holevoq.measurements import effects_from_axis, joint_distribution
from holevoq.notions import ALL_NOTIONS, DistanceNotion
from holevoq.qubit import density_to_bloch, example_ensemble
from holevoq.sampling import random_qubit_ensemble, rng_from_seed

try:
    from holevoq import _axes_cy
except ImportError:
    _axes_cy = None

needs_extension = pytest.mark.skipif(_axes_cy is None, reason="extension not built")

CODES = {
    DistanceNotion.KOLMOGOROV: _axes_py.CODE_KOLMOGOROV,
    DistanceNotion.PROB_ERROR: _axes_py.CODE_PROB_ERROR,
    DistanceNotion.BHATTACHARYYA: _axes_py.CODE_BHATTACHARYYA,
    DistanceNotion.RELATIVE_ENTROPY: _axes_py.CODE_RELATIVE_ENTROPY,
    DistanceNotion.QJSD: _axes_py.CODE_QJSD,
}


def _batch(rng, n_ensembles=20, n_axes=64):
    for _ in range(n_ensembles):
        e = random_qubit_ensemble(rng)
        betas = np.array([density_to_bloch(s) for s in e.states])
        axes = rng.normal(size=(n_axes, 3))
        axes /= np.linalg.norm(axes, axis=1, keepdims=True)
        yield e, betas, axes


@needs_extension
def test_backends_agree():
    rng = rng_from_seed(80)
    for e, betas, axes in _batch(rng):
        for notion, code in CODES.items():
            a = _axes_py.evaluate_axes(code, e.weights, betas, axes)
            b = np.asarray(_axes_cy.evaluate_axes(code, e.weights, betas, axes))
            np.testing.assert_allclose(a, b, atol=1e-12, err_msg=str(notion))


def test_kernel_matches_matrix_path():
    rng = rng_from_seed(81)
    for e, betas, axes in _batch(rng, n_ensembles=10, n_axes=16):
        for notion in ALL_NOTIONS:
            vals = evaluate_axes(notion, e.weights, betas, axes)
            for k in range(axes.shape[0]):
                j = joint_distribution(e, effects_from_axis(axes[k]))
                assert vals[k] == pytest.approx(d_of_joint(notion, j), abs=1e-10), notion


def test_kernel_finite_on_pure_aligned_states():
    """Zero outcome probabilities never push the table divergences to inf;
    the product reference vanishes exactly where the joint does."""
    e = example_ensemble(math.pi / 2, 0.5)
    betas = np.array([density_to_bloch(s) for s in e.states])
    axes = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, -1.0], [1.0, 0.0, 0.0]])
    for notion in ALL_NOTIONS:
        vals = evaluate_axes(notion, e.weights, betas, axes)
        assert np.all(np.isfinite(vals)), notion


def test_single_axis_promotion():
    e = example_ensemble(1.0, 0.5)
    betas = np.array([density_to_bloch(s) for s in e.states])
    out = evaluate_axes(DistanceNotion.KOLMOGOROV, e.weights, betas, np.array([0.0, 0.0, 1.0]))
    assert out.shape == (1,)


def test_backend_name_is_known():
    assert backend_name() in ("cython", "numpy")
    if _axes_cy is not None:
        assert backend_name() == "cython"


def test_disable_flag_forces_fallback():
    env = dict(os.environ, HOLEVOQ_DISABLE_EXTENSION="1")
    out = subprocess.run(
        [sys.executable, "-c", "from holevoq.grid import backend_name; print(backend_name())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"


@needs_extension
def test_extension_used_by_default():
    env = {k: v for k, v in os.environ.items() if k != "HOLEVOQ_DISABLE_EXTENSION"}
    out = subprocess.run(
        [sys.executable, "-c", "from holevoq.grid import backend_name; print(backend_name())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "cython"
