"""Quantum distance evaluators, channels, and the classical limit."""

import math

import numpy as np
import pytest

from holevoq.cdivergence import (
    bhattacharyya_c,
    jsd_c,
    kolmogorov_c,
    prob_error_c,
    relative_entropy_c,
)
from holevoq.linalg import kron, mat_sqrt
from holevoq.notions import ALL_NOTIONS, DistanceNotion
from holevoq.qdistance import (
    ADDITIVITY_DISTANCES,
    DPI_DISTANCES,
    KrausChannel,
    apply_channel,
    bhattacharyya_q,
    bures_sq,
    check_dpi,
    dephasing_channel,
    hellinger_sq,
    partial_trace_channel,
    prob_error_q,
    qjsd,
    quantum_evaluator,
    relative_entropy_q,
    trace_distance,
)
from holevoq.qubit import bloch_to_density
from holevoq.sampling import (
    random_bloch_in_ball,
    random_density,
    random_kraus_channel,
    random_unitary,
    rng_from_seed,
)

KET0 = np.diag([1.0, 0.0]).astype(complex)
KET1 = np.diag([0.0, 1.0]).astype(complex)
PLUS = np.full((2, 2), 0.5, dtype=complex)

_CLASSICAL = {
    DistanceNotion.KOLMOGOROV: kolmogorov_c,
    DistanceNotion.PROB_ERROR: prob_error_c,
    DistanceNotion.BHATTACHARYYA: bhattacharyya_c,
    DistanceNotion.RELATIVE_ENTROPY: relative_entropy_c,
    DistanceNotion.QJSD: jsd_c,
}


def test_relative_entropy_commuting_value():
    got = relative_entropy_q(np.diag([0.5, 0.5]), np.diag([0.25, 0.75]))
    assert got == pytest.approx(0.20751874963942185, abs=1e-13)


def test_relative_entropy_support_violation_is_inf():
    assert relative_entropy_q(PLUS, KET0) == math.inf
    assert relative_entropy_q(KET0, PLUS) == math.inf
    assert relative_entropy_q(KET0, KET0) == pytest.approx(0.0, abs=1e-12)
    # full-rank reference never blows up
    assert math.isfinite(relative_entropy_q(KET0, np.eye(2) / 2))


def test_trace_distance_bloch_oracle():
    """On qubits the trace distance is half the Bloch-vector distance."""
    rng = rng_from_seed(20)
    for _ in range(200):
        u = random_bloch_in_ball(rng)
        v = random_bloch_in_ball(rng)
        got = trace_distance(bloch_to_density(u), bloch_to_density(v))
        assert got == pytest.approx(0.5 * np.linalg.norm(u - v), abs=1e-12)


def test_orthogonal_pure_states():
    assert trace_distance(KET0, KET1) == pytest.approx(1.0, abs=1e-14)
    assert prob_error_q(KET0, KET1) == pytest.approx(0.0, abs=1e-14)
    assert bhattacharyya_q(KET0, KET1) == pytest.approx(0.0, abs=1e-9)
    assert qjsd(KET0, KET1) == pytest.approx(1.0, abs=1e-12)
    assert bures_sq(KET0, KET1) == pytest.approx(2.0, abs=1e-9)


def test_equal_states_reference_points():
    rng = rng_from_seed(21)
    for dim in (2, 3, 4):
        rho = random_density(rng, dim)
        assert trace_distance(rho, rho) == pytest.approx(0.0, abs=1e-12)
        assert prob_error_q(rho, rho) == pytest.approx(0.5, abs=1e-12)
        assert bhattacharyya_q(rho, rho) == pytest.approx(1.0, abs=1e-11)
        assert relative_entropy_q(rho, rho) == pytest.approx(0.0, abs=1e-10)
        assert qjsd(rho, rho) == pytest.approx(0.0, abs=1e-10)
        assert hellinger_sq(rho, rho) == pytest.approx(0.0, abs=1e-11)


def test_bhattacharyya_pure_overlap():
    # for pure states B is |<psi|phi>|
    assert bhattacharyya_q(KET0, PLUS) == pytest.approx(2**-0.5, abs=1e-12)
    assert bhattacharyya_q(KET0, np.eye(2) / 2) == pytest.approx(2**-0.5, abs=1e-12)


def test_bhattacharyya_symmetric():
    rng = rng_from_seed(22)
    for _ in range(100):
        rho = random_density(rng, 3)
        sig = random_density(rng, 3)
        assert bhattacharyya_q(rho, sig) == pytest.approx(bhattacharyya_q(sig, rho), abs=1e-11)
        assert trace_distance(rho, sig) == pytest.approx(trace_distance(sig, rho), abs=1e-12)
        assert qjsd(rho, sig) == pytest.approx(qjsd(sig, rho), abs=1e-11)


def test_fidelity_at_least_overlap():
    """B^2 is the fidelity; it can never fall below Tr(rho sigma)."""
    rng = rng_from_seed(23)
    for _ in range(200):
        rho = random_density(rng, 3)
        sig = random_density(rng, 3)
        overlap = float(np.trace(rho @ sig).real)
        assert bhattacharyya_q(rho, sig) ** 2 >= overlap - 1e-9


def test_bures_is_affine_in_bhattacharyya():
    rng = rng_from_seed(24)
    for _ in range(50):
        rho = random_density(rng, 2)
        sig = random_density(rng, 2)
        assert bures_sq(rho, sig) == pytest.approx(
            2.0 * (1.0 - bhattacharyya_q(rho, sig)), abs=1e-12
        )


def test_diagonal_states_reduce_to_classical():
    """Every notion collapses to its classical divergence on commuting states."""
    rng = rng_from_seed(25)
    for _ in range(100):
        p = rng.dirichlet(np.ones(4))
        q = rng.dirichlet(np.ones(4))
        rho = np.diag(p).astype(complex)
        sig = np.diag(q).astype(complex)
        for notion in ALL_NOTIONS:
            got = quantum_evaluator(notion)(rho, sig)
            assert got == pytest.approx(_CLASSICAL[notion](p, q), abs=1e-9), notion
        assert hellinger_sq(rho, sig) == pytest.approx(
            2.0 * (1.0 - bhattacharyya_c(p, q)), abs=1e-9
        )


def test_qjsd_range():
    rng = rng_from_seed(26)
    for _ in range(100):
        rho = random_density(rng, 3)
        sig = random_density(rng, 3)
        assert -1e-10 <= qjsd(rho, sig) <= 1.0 + 1e-10


def test_sqrt_effect_trace_identity():
    """Tr[sqrt(M) rho sqrt(M)] = Tr[M rho]: outcome probabilities do not
    care whether the effect is split around the state."""
    rng = rng_from_seed(27)
    for _ in range(50):
        rho = random_density(rng, 3)
        a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        m = a @ a.conj().T
        root = mat_sqrt(m)
        lhs = float(np.trace(root @ rho @ root).real)
        rhs = float(np.trace(m @ rho).real)
        assert lhs == pytest.approx(rhs, abs=1e-10)


def test_kraus_channel_validation():
    with pytest.raises(ValueError, match="trace preserving"):
        KrausChannel(ops=(0.5 * np.eye(2),))
    ch = KrausChannel(ops=(np.eye(2),))
    assert ch.input_dim == 2


def test_kraus_channel_rectangular():
    # an isometry into a larger space is a valid channel
    v = np.zeros((3, 2), dtype=complex)
    v[0, 0] = v[1, 1] = 1.0
    ch = KrausChannel(ops=(v,))
    out = apply_channel(ch, KET0)
    assert out.shape == (3, 3)
    assert float(out.trace().real) == pytest.approx(1.0, abs=1e-12)


def test_dephasing_channel_kills_coherences():
    out = apply_channel(dephasing_channel(2), PLUS)
    np.testing.assert_allclose(out, np.diag([0.5, 0.5]), atol=1e-14)


def test_partial_trace_channel():
    rng = rng_from_seed(28)
    a = random_density(rng, 2)
    b = random_density(rng, 3)
    out = apply_channel(partial_trace_channel(2, 3), kron(a, b))
    np.testing.assert_allclose(out, a, atol=1e-12)


def test_data_processing_under_random_channels():
    rng = rng_from_seed(29)
    for _ in range(50):
        dim = int(rng.integers(2, 5))
        rho = random_density(rng, dim)
        sig = random_density(rng, dim)
        ch = random_kraus_channel(rng, dim)
        for d in DPI_DISTANCES:
            assert check_dpi(d, ch, rho, sig), d.name


def test_data_processing_under_dephasing():
    rng = rng_from_seed(30)
    for _ in range(50):
        rho = random_density(rng, 3)
        sig = random_density(rng, 3)
        for d in DPI_DISTANCES:
            assert check_dpi(d, dephasing_channel(3), rho, sig), d.name


def test_tensoring_a_common_factor_changes_nothing():
    rng = rng_from_seed(31)
    for _ in range(30):
        rho = random_density(rng, 2)
        sig = random_density(rng, 2)
        tau = random_density(rng, 3)
        for d in ADDITIVITY_DISTANCES:
            plain = d.evaluate(rho, sig)
            tensored = d.evaluate(kron(rho, tau), kron(sig, tau))
            if math.isinf(plain):
                assert math.isinf(tensored)
            else:
                assert tensored == pytest.approx(plain, abs=1e-9), d.name


def test_unitary_invariance():
    rng = rng_from_seed(32)
    for _ in range(30):
        rho = random_density(rng, 3)
        sig = random_density(rng, 3)
        u = random_unitary(rng, 3)
        ur, us = u @ rho @ u.conj().T, u @ sig @ u.conj().T
        assert trace_distance(ur, us) == pytest.approx(trace_distance(rho, sig), abs=1e-11)
        assert bhattacharyya_q(ur, us) == pytest.approx(bhattacharyya_q(rho, sig), abs=1e-10)
        assert qjsd(ur, us) == pytest.approx(qjsd(rho, sig), abs=1e-10)
