"""Bloch-sphere closed forms against the generic matrix path."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holevoq.cdivergence import d_of_joint
from holevoq.ensemble import dbhq, make_ensemble, non_commutativity, purity
from holevoq.measurements import effects_from_axis, joint_distribution
from holevoq.notions import DistanceNotion
from holevoq.qubit import (
    DegenerateEnsembleError,
    b_joint_closed,
    binary_f,
    bloch_to_density,
    density_to_bloch,
    example_ensemble,
    hr_joint_closed,
    k_joint_closed,
    nc_closed,
    purity_closed,
    theorem2_axis,
    xb_closed,
    xk_closed,
    xsr_closed,
)
from holevoq.sampling import (
    random_axis,
    random_bloch_in_ball,
    random_qubit_ensemble,
    rng_from_seed,
)


def test_bloch_round_trip():
    rng = rng_from_seed(50)
    for _ in range(300):
        b = random_bloch_in_ball(rng)
        np.testing.assert_allclose(density_to_bloch(bloch_to_density(b)), b, atol=1e-12)


def test_bloch_poles():
    np.testing.assert_allclose(bloch_to_density([0, 0, 1]), np.diag([1.0, 0.0]), atol=1e-15)
    np.testing.assert_allclose(bloch_to_density([1, 0, 0]), np.full((2, 2), 0.5), atol=1e-15)
    np.testing.assert_allclose(density_to_bloch(np.eye(2) / 2), [0.0, 0.0, 0.0], atol=1e-15)


def test_bloch_norm_guard():
    with pytest.raises(ValueError):
        bloch_to_density([0.0, 0.0, 1.1])
    # norms inside the roundoff band are rescaled onto the sphere
    rho = bloch_to_density([0.0, 0.0, 1.0 + 5e-11])
    assert np.linalg.norm(density_to_bloch(rho)) <= 1.0 + 1e-12


def test_binary_f_values():
    assert binary_f(0.0) == 0.0
    assert binary_f(1.0) == 2.0
    assert binary_f(-1.0) == 2.0
    assert binary_f(2**-0.5) == pytest.approx(0.7982479266142876, abs=1e-14)
    # f(x) = 2 - 2 h((1+x)/2) with h the binary entropy
    assert binary_f(0.5) == pytest.approx(2.0 - 2.0 * (-(0.75 * math.log2(0.75)
                                                        + 0.25 * math.log2(0.25))), abs=1e-14)


@settings(deadline=None, max_examples=200)
@given(st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_binary_f_even_and_monotone(x, y):
    assert binary_f(-x) == binary_f(x)
    lo, hi = sorted((x, y))
    assert binary_f(lo) <= binary_f(hi) + 1e-12


def test_example_ensemble_matrices():
    for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
        e = example_ensemble(theta, 0.5)
        c, s = math.cos(theta), math.sin(theta)
        np.testing.assert_allclose(e.states[0], np.diag([1.0, 0.0]), atol=1e-15)
        np.testing.assert_allclose(
            e.states[1], [[c * c, c * s], [c * s, s * s]], atol=1e-15
        )


def test_example_ensemble_range_guards():
    with pytest.raises(ValueError, match="theta"):
        example_ensemble(-0.1, 0.5)
    with pytest.raises(ValueError, match="theta"):
        example_ensemble(math.pi / 2 + 0.1, 0.5)
    with pytest.raises(ValueError, match="p_hat"):
        example_ensemble(0.3, 1.2)


def test_example_ensemble_summary_quantities():
    """Angle/weight formulas for the two-pure-state family."""
    rng = rng_from_seed(51)
    for _ in range(100):
        theta = float(rng.uniform(0.0, math.pi / 2))
        p = float(rng.uniform(0.0, 1.0))
        e = example_ensemble(theta, p)
        assert xk_closed(e) == pytest.approx(2 * p * (1 - p) * abs(math.sin(theta)), abs=1e-12)
        assert nc_closed(e) == pytest.approx(
            p * (1 - p) * abs(math.sin(2 * theta)) / math.sqrt(2.0), abs=1e-12
        )
        assert purity_closed(e) == pytest.approx(
            1.0 - 2 * p * (1 - p) * math.sin(theta) ** 2, abs=1e-12
        )


def test_point_values_quarter_turn():
    e = example_ensemble(math.pi / 4, 0.5)
    assert nc_closed(e) == pytest.approx(0.17677669529663687, abs=1e-12)
    assert purity_closed(e) == pytest.approx(0.75, abs=1e-12)
    assert xsr_closed(e) == pytest.approx(0.6008760366928563, abs=1e-12)
    assert xb_closed(e) == pytest.approx(math.sqrt(3.0) / 2.0, abs=1e-12)


def test_point_values_orthogonal():
    e = example_ensemble(math.pi / 2, 0.5)
    assert xk_closed(e) == pytest.approx(0.5, abs=1e-12)
    assert xsr_closed(e) == pytest.approx(1.0, abs=1e-12)
    assert nc_closed(e) == pytest.approx(0.0, abs=1e-12)


def test_ensemble_bounds_match_matrix_path():
    rng = rng_from_seed(52)
    for _ in range(200):
        e = random_qubit_ensemble(rng)
        assert xk_closed(e) == pytest.approx(dbhq(e, DistanceNotion.KOLMOGOROV), abs=1e-9)
        assert xb_closed(e) == pytest.approx(dbhq(e, DistanceNotion.BHATTACHARYYA), abs=1e-9)
        assert xsr_closed(e) == pytest.approx(dbhq(e, DistanceNotion.RELATIVE_ENTROPY), abs=1e-9)
        assert nc_closed(e) == pytest.approx(non_commutativity(e), abs=1e-9)
        assert purity_closed(e) == pytest.approx(purity(e.average), abs=1e-9)


def test_joint_closed_forms_match_matrix_path():
    rng = rng_from_seed(53)
    for _ in range(200):
        e = random_qubit_ensemble(rng)
        z = random_axis(rng)
        j = joint_distribution(e, effects_from_axis(z))
        assert k_joint_closed(e, z) == pytest.approx(
            d_of_joint(DistanceNotion.KOLMOGOROV, j), abs=1e-9
        )
        assert b_joint_closed(e, z) == pytest.approx(
            d_of_joint(DistanceNotion.BHATTACHARYYA, j), abs=1e-9
        )
        assert hr_joint_closed(e, z) == pytest.approx(
            d_of_joint(DistanceNotion.RELATIVE_ENTROPY, j), abs=1e-9
        )


def _b_joint_outcome_sum(e, z):
    # direct overlap of conditionals with the marginal, no rearrangement
    z = np.asarray(z, dtype=float)
    betas = np.array([density_to_bloch(s) for s in e.states])
    a = betas @ z
    b = float(density_to_bloch(e.average) @ z)
    total = 0.0
    for p, ai in zip(e.weights, a):
        for sign in (1.0, -1.0):
            total += p * math.sqrt(max(0.0, (1 + sign * ai) * (1 + sign * b))) / 2.0
    return total


def test_b_joint_against_outcome_sum():
    rng = rng_from_seed(54)
    for _ in range(200):
        e = random_qubit_ensemble(rng)
        z = random_axis(rng)
        assert b_joint_closed(e, z) == pytest.approx(_b_joint_outcome_sum(e, z), abs=1e-12)


def test_b_joint_inner_factor_is_mixed():
    """The radicand must pair the member projection with the average
    projection; squaring either one alone gives a different number."""
    e = example_ensemble(1.1, 0.2)
    z = np.array([0.3, 0.4, math.sqrt(0.75)])
    betas = np.array([density_to_bloch(s) for s in e.states])
    bm = density_to_bloch(e.average)
    proj = betas @ z
    b = float(bm @ z)
    repeated = sum(
        p * math.sqrt(max(0.0, 1 + a * b + math.sqrt(max(0.0, (1 - a * a) ** 2))))
        for p, a in zip(e.weights, proj)
    ) / math.sqrt(2.0)
    good = b_joint_closed(e, z)
    assert good == pytest.approx(_b_joint_outcome_sum(e, z), abs=1e-12)
    assert abs(repeated - good) > 1e-3


def test_theorem2_axis_example():
    e = make_ensemble(
        [0.3, 0.7],
        [bloch_to_density([0, 0, 1]), bloch_to_density([1, 0, 0])],
    )
    z, value = theorem2_axis(e)
    np.testing.assert_allclose(z, np.array([-1.0, 0.0, 1.0]) / math.sqrt(2.0), atol=1e-14)
    assert value == pytest.approx(0.29698484809834996, abs=1e-14)
    # the predicted axis attains the ensemble bound
    assert k_joint_closed(e, z) == pytest.approx(xk_closed(e), abs=1e-12)
    assert value == pytest.approx(xk_closed(e), abs=1e-14)


def test_theorem2_axis_errors():
    rng = rng_from_seed(55)
    three = random_qubit_ensemble(rng, n_states=3)
    with pytest.raises(DegenerateEnsembleError):
        theorem2_axis(three)
    same = make_ensemble([0.5, 0.5], [np.eye(2) / 2, np.eye(2) / 2])
    with pytest.raises(DegenerateEnsembleError):
        theorem2_axis(same)


def test_k_joint_never_exceeds_bound():
    rng = rng_from_seed(56)
    for _ in range(300):
        e = random_qubit_ensemble(rng)
        z = random_axis(rng)
        assert k_joint_closed(e, z) <= xk_closed(e) + 1e-12
