import numpy as np
import pytest

from oracles import random_hermitian, random_unitary
from univgate.gates import SWAP
from univgate.linalg import (
    PAULI,
    PAULI_BASIS,
    NotHermitianError,
    NotUnitaryError,
    as_hermitian,
    as_unitary,
    commutator_i,
    distance,
    exp_hermitian,
    from_pauli_coefficients,
    log_unitary,
    lu_determinant,
    pauli_coefficients,
    phase_invariant_distance,
    rank_analysis,
)

I2, X, Y, Z = PAULI


def test_construction_checks():
    with pytest.raises(NotUnitaryError):
        as_unitary(2 * np.eye(4))
    with pytest.raises(NotHermitianError):
        as_hermitian(np.triu(np.ones((4, 4))))
    with pytest.raises(ValueError):
        as_unitary(np.eye(3))
    with pytest.raises(ValueError):
        as_hermitian(np.full((4, 4), np.nan))


def test_validated_values_are_read_only():
    u = as_unitary(np.eye(4))
    with pytest.raises(ValueError):
        u[0, 0] = 2


def test_log_identity_is_zero():
    assert np.array_equal(log_unitary(np.eye(4)), np.zeros((4, 4)))


def test_log_diagonal():
    u = np.diag(np.exp(1j * np.array([0.1, 0.2, 0.3, 0.4])))
    np.testing.assert_allclose(log_unitary(u), np.diag([0.1, 0.2, 0.3, 0.4]), atol=1e-14)


def test_log_twist_branch():
    h = log_unitary(SWAP)
    w, v = np.linalg.eigh(h)
    np.testing.assert_allclose(w, [0, 0, 0, np.pi], atol=1e-12)
    # oracle: T is real symmetric with a single -1 eigenvector (|01> - |10>)/sqrt2
    singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert abs(abs(np.vdot(v[:, 3], singlet)) - 1) < 1e-12
    np.testing.assert_allclose(h, np.pi * np.outer(singlet, singlet), atol=1e-12)


def test_exp_examples():
    np.testing.assert_array_equal(exp_hermitian(np.zeros((4, 4))), np.eye(4))
    np.testing.assert_allclose(
        exp_hermitian(np.diag([0.1, 0.2, 0.3, 0.4])),
        np.diag(np.exp(1j * np.array([0.1, 0.2, 0.3, 0.4]))),
        atol=1e-15,
    )
    assert np.max(np.abs(exp_hermitian(log_unitary(SWAP)) - SWAP)) <= 1e-9


def test_log_exp_round_trip(rng):
    for _ in range(20):
        u = random_unitary(rng)
        assert np.max(np.abs(exp_hermitian(log_unitary(u)) - u)) <= 1e-9
        h = random_hermitian(rng, 0.5)
        np.testing.assert_allclose(log_unitary(exp_hermitian(h)), h, atol=1e-12)


def test_commutator_examples(rng):
    a = random_hermitian(rng)
    np.testing.assert_allclose(commutator_i(a, a), 0, atol=1e-15)
    zi, xi, yi = np.kron(Z, I2), np.kron(X, I2), np.kron(Y, I2)
    np.testing.assert_allclose(commutator_i(zi, xi), -2 * yi, atol=1e-15)
    b = random_hermitian(rng)
    c = commutator_i(a, b)
    np.testing.assert_allclose(c, 1j * (a @ b - b @ a), atol=1e-12)
    assert np.array_equal(c, c.conj().T)


def test_pauli_coefficient_examples(rng):
    c = pauli_coefficients(np.eye(4))
    expected = np.zeros(16)
    expected[0] = 2
    np.testing.assert_allclose(c, expected, atol=1e-15)

    c = pauli_coefficients(np.kron(X, Y) / 2)
    expected = np.zeros(16)
    expected[4 * 1 + 2] = 1
    np.testing.assert_allclose(c, expected, atol=1e-15)

    h = random_hermitian(rng)
    np.testing.assert_allclose(from_pauli_coefficients(pauli_coefficients(h)), h, atol=1e-12)


def test_pauli_basis_orthonormal():
    gram = np.einsum("aij,bij->ab", PAULI_BASIS.conj(), PAULI_BASIS)
    np.testing.assert_allclose(gram, np.eye(16), atol=1e-15)


def test_rank_analysis_examples(rng):
    ra = rank_analysis(np.eye(16))
    assert ra.determinant == 1
    np.testing.assert_allclose(ra.singular_values, 1)
    assert ra.rank == 16

    m = rng.standard_normal((16, 16))
    m[5] = m[2]
    ra = rank_analysis(m)
    assert abs(ra.determinant) < 1e-12 * np.prod(np.linalg.norm(m, axis=1))
    assert ra.singular_values[-1] < 1e-14 * ra.singular_values[0]
    assert ra.rank == 15

    assert rank_analysis(np.zeros((16, 16))).rank == 0


def test_rank_analysis_borderline():
    assert rank_analysis(np.diag([1.0] * 15 + [1e-8])).borderline
    assert not rank_analysis(np.diag([1.0] * 15 + [1e-12])).borderline
    assert not rank_analysis(np.eye(16)).borderline


def test_determinant_agrees_with_numpy(rng):
    for _ in range(10):
        m = rng.standard_normal((16, 16))
        assert lu_determinant(m) == pytest.approx(np.linalg.det(m), rel=1e-10)


def test_distance_examples(rng):
    u = random_unitary(rng)
    assert distance(u, u) == pytest.approx(0, abs=1e-7)
    assert distance(np.eye(4), -np.eye(4)) == pytest.approx(np.sqrt(2))
    v = random_unitary(rng)
    assert distance(u, v) == pytest.approx(distance(v, u), abs=1e-15)


def test_phase_invariant_distance_ignores_phase(rng):
    u = random_unitary(rng)
    assert phase_invariant_distance(u, np.exp(0.7j) * u) == pytest.approx(0, abs=1e-7)
    assert distance(u, np.exp(0.7j) * u) > 0.1
