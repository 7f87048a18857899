import numpy as np
import pytest

from oracles import SWAP, word_distance_bruteforce
from univgate.gates import IDENTITY, barenco
from univgate.linalg import PAULI, distance, exp_hermitian, log_unitary
from univgate.sampling import haar_samples, random_direction, streams
from univgate.synthesis import (
    ResourceError,
    decay_experiment,
    enumerate_words,
    power_approximation,
    realize,
    synthesize,
    trotter_commutator,
    trotter_sum,
)

I2, X, Y, Z = PAULI
IRRATIONAL = exp_hermitian(np.diag([1, np.sqrt(2), np.sqrt(3), np.sqrt(5)]))


def unit_pair(seed):
    rng = streams(seed, 1)[0]
    return random_direction(rng), random_direction(rng)


def test_power_integer_lambda(reference_gate):
    res = power_approximation(reference_gate, 3, 10)
    assert res.best_n == 3
    assert res.error <= 1e-12


def test_power_lambda_one():
    u = haar_samples(1, 3)[0]
    res = power_approximation(u, 1, 50)
    assert res.best_n == 1 and res.error <= 1e-12


def test_power_identity():
    res = power_approximation(IDENTITY, 0.37, 100)
    assert res.best_n == 0 and res.error == 0


def test_power_error_decreases_with_search_range():
    errs = [power_approximation(IRRATIONAL, 0.5, n).error for n in (10**3, 10**4, 10**5)]
    # exhaustive oracle over n, computed by direct matrix powers for the smallest range
    phases = np.array([1, np.sqrt(2), np.sqrt(3), np.sqrt(5)])
    brute = min(
        np.sqrt(max(0, 1 - np.cos((0.5 - n) * phases).sum() / 4)) for n in range(10**3 + 1)
    )
    assert errs[0] == pytest.approx(brute, abs=1e-7)
    assert errs[0] > errs[1] > errs[2]


def test_power_error_matches_definition(reference_gate):
    res = power_approximation(reference_gate, 0.4, 500)
    target = exp_hermitian(0.4 * log_unitary(reference_gate))
    power = np.linalg.matrix_power(reference_gate, res.best_n)
    assert res.error == pytest.approx(distance(power, target), abs=1e-10)


def test_trotter_sum_commuting():
    p, q = np.kron(Z, I2), np.kron(I2, Z)
    for n in (1, 3, 10):
        assert trotter_sum(p, q, 0.7, -1.3, n)[1] <= 1e-12


def test_trotter_sum_zero_weights():
    p, q = unit_pair(1)
    approx, err = trotter_sum(p, q, 0, 0, 5)
    np.testing.assert_allclose(approx, np.eye(4), atol=1e-15)
    assert err == 0


def test_trotter_sum_first_order_rate():
    p, q = unit_pair(2)
    ratio = trotter_sum(p, q, 1, 1, 128)[1] / trotter_sum(p, q, 1, 1, 64)[1]
    assert 0.4 <= ratio <= 0.6


def test_trotter_sum_monotone():
    for seed in range(5):
        p, q = unit_pair(seed)
        errs = [trotter_sum(p, q, 1, 1, n)[1] for n in (16, 32, 64, 128)]
        assert all(b <= a * 1.05 for a, b in zip(errs, errs[1:]))


def test_trotter_commutator_commuting():
    p, q = np.kron(Z, I2), np.kron(I2, Z)
    approx, err = trotter_commutator(p, q, 16)
    np.testing.assert_allclose(approx, np.eye(4), atol=1e-12)
    assert err <= 1e-12


def test_trotter_commutator_pauli_target():
    p, q = np.kron(X, I2), np.kron(Y, I2)
    target = exp_hermitian(2 * np.kron(Z, I2))
    errs = []
    for n in (16, 256, 4096):
        approx, err = trotter_commutator(p, q, n)
        assert err == pytest.approx(distance(approx, target), abs=1e-12)
        errs.append(err)
    assert errs[0] > errs[1] > errs[2]


def test_trotter_commutator_rate():
    p, q = unit_pair(3)
    ratio = trotter_commutator(p, q, 1024)[1] / trotter_commutator(p, q, 256)[1]
    assert 0.35 <= ratio <= 0.65


def test_enumerate_words_order(reference_gate):
    words, mats = enumerate_words(reference_gate, 3)
    assert words[:7] == ["", "U", "V", "UU", "VU", "UV", "VV"] or words[:3] == ["", "U", "V"]
    assert len(words) == 15
    for w, m in zip(words, mats):
        np.testing.assert_allclose(m, realize(w, reference_gate), atol=1e-14)


def test_synthesize_trivial_targets(reference_gate):
    res = synthesize(reference_gate, reference_gate, 4)
    assert res.best_word.letters == "U" and res.achieved_distance <= 1e-12
    v = SWAP @ reference_gate @ SWAP
    res = synthesize(v, reference_gate, 4)
    assert res.best_word.letters == "V" and res.achieved_distance <= 1e-12


def test_synthesize_resource_guard(reference_gate):
    with pytest.raises(ResourceError):
        synthesize(IDENTITY, reference_gate, 31)


@pytest.mark.parametrize("depth", [1, 4, 7, 10])
def test_synthesize_matches_full_enumeration(depth):
    gate = haar_samples(1, 30)[0]
    target = haar_samples(2, 31)[1]
    best, _ = word_distance_bruteforce(target, gate, depth)
    res = synthesize(target, gate, depth)
    assert res.achieved_distance == pytest.approx(best, abs=1e-12)
    assert len(res.best_word) <= depth
    np.testing.assert_allclose(res.best_word.realized, realize(res.best_word.letters, gate), atol=1e-12)
    assert res.achieved_distance == pytest.approx(distance(res.best_word.realized, target), abs=1e-15)


def test_synthesize_nested_depths(reference_gate):
    target = haar_samples(1, 12)[0]
    d = [synthesize(target, reference_gate, k).achieved_distance for k in range(0, 13, 2)]
    assert all(b <= a for a, b in zip(d, d[1:]))
    assert d[-1] <= distance(target, np.eye(4))


def test_synthesize_depth_24_beats_12(reference_gate):
    target = haar_samples(1, 12)[0]
    d12 = synthesize(target, reference_gate, 12).achieved_distance
    d24 = synthesize(target, reference_gate, 24).achieved_distance
    assert d24 < d12


def test_synthesize_deterministic(reference_gate):
    target = haar_samples(1, 7)[0]
    a = synthesize(target, reference_gate, 16)
    b = synthesize(target, reference_gate, 16)
    assert a.best_word.letters == b.best_word.letters
    assert a.achieved_distance == b.achieved_distance


def test_synthesize_phase_invariant(reference_gate):
    target = np.exp(0.9j) * reference_gate
    assert synthesize(target, reference_gate, 2).achieved_distance > 0.1
    res = synthesize(target, reference_gate, 2, phase_invariant=True)
    assert res.achieved_distance <= 1e-7


def test_decay_identity_gate_is_flat():
    table = decay_experiment(IDENTITY, 4, 12, 1, depths=(4, 8, 12))
    means = [m for _, m in table.rows]
    assert max(means) - min(means) <= 1e-12


def test_decay_no_targets(reference_gate):
    assert decay_experiment(reference_gate, 0, 20, 1).rows == ()


def test_decay_matches_direct_search():
    gate = haar_samples(1, 40)[0]
    table = decay_experiment(gate, 3, 8, 9, depths=(4, 8))
    targets = [u for u in [__import__("univgate.sampling", fromlist=["x"]).haar_random_unitary(r)
                           for r in streams(9, 3)]]
    for depth, mean in table.rows:
        direct = np.mean([word_distance_bruteforce(t, gate, depth)[0] for t in targets])
        assert mean == pytest.approx(direct, abs=1e-12)
    assert table.slope < 0
