"""Building gates out of one gate: powers, product formulas, word search."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from univgate.linalg import (
    as_hermitian,
    as_unitary,
    commutator_i,
    distance,
    exp_hermitian,
    phase_invariant_distance,
    unitary_eigh,
)
from univgate.sampling import haar_random_unitary, streams
from univgate.scheme import TWIST

MAX_DEPTH = 30
DECAY_DEPTHS = (4, 8, 12, 16, 20)
# suffix queries scored per BLAS call
_CHUNK = 512


class ResourceError(ValueError):
    pass


@dataclass(frozen=True)
class PowerApproximation:
    lam: float
    best_n: int
    error: float
    n_max: int


def power_approximation(u, lam: float, n_max: int) -> PowerApproximation:
    """Integer power ``u**n``, ``0 <= n <= n_max``, closest to ``exp(i lam H1)``.

    Works in the eigenbasis: ``Tr((u^n)^dag u^lam) = sum_j exp(i (lam - n) phi_j)``.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    phases, z = unitary_eigh(u)
    n = np.arange(n_max + 1)
    overlap = np.cos(np.outer(lam - n, phases)).sum(axis=1)
    errs = np.sqrt(np.maximum(0.0, 1.0 - overlap / 4))
    best = int(np.argmin(errs))
    power = as_unitary((z * np.exp(1j * best * phases)) @ z.conj().T)
    target = as_unitary((z * np.exp(1j * lam * phases)) @ z.conj().T)
    return PowerApproximation(lam, best, distance(power, target), n_max)


def trotter_sum(p, q, alpha: float, beta: float, n: int) -> tuple[np.ndarray, float]:
    """``(e^{i alpha P/n} e^{i beta Q/n})^n`` against ``e^{i(alpha P + beta Q)}``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = as_hermitian(p)
    q = as_hermitian(q)
    step = exp_hermitian(alpha * p / n) @ exp_hermitian(beta * q / n)
    approx = as_unitary(np.linalg.matrix_power(step, n))
    return approx, distance(approx, exp_hermitian(alpha * p + beta * q))


def trotter_commutator(p, q, n: int) -> tuple[np.ndarray, float]:
    """``(e^{-iP/s} e^{iQ/s} e^{iP/s} e^{-iQ/s})^n``, ``s = sqrt(n)``, against ``e^{[P,Q]}``.

    ``e^{[P,Q]} = exp(i * i[Q,P])``, i.e. ``exp_hermitian(commutator_i(q, p))``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = as_hermitian(p)
    q = as_hermitian(q)
    s = math.sqrt(n)
    step = (
        exp_hermitian(-p / s) @ exp_hermitian(q / s) @ exp_hermitian(p / s) @ exp_hermitian(-q / s)
    )
    approx = as_unitary(np.linalg.matrix_power(step, n))
    return approx, distance(approx, exp_hermitian(commutator_i(q, p)))


@dataclass(frozen=True)
class GateWord:
    """Letters over {U, V}, ``V = T U T``; realized as ``M[0] @ M[1] @ ...``."""

    letters: str
    realized: np.ndarray

    def __len__(self) -> int:
        return len(self.letters)


def realize(letters: str, gate) -> np.ndarray:
    u = as_unitary(gate)
    mats = {"U": u, "V": TWIST @ u @ TWIST}
    out = np.eye(4, dtype=complex)
    for ch in letters:
        out = out @ mats[ch]
    return as_unitary(out)


@dataclass(frozen=True)
class SynthesisResult:
    target: np.ndarray
    best_word: GateWord
    achieved_distance: float
    depth: int


def enumerate_words(gate, max_len: int) -> tuple[list[str], np.ndarray]:
    """All words of length <= max_len, shortest first, U before V."""
    u = as_unitary(gate)
    v = TWIST @ u @ TWIST
    words = [""]
    mats = [np.eye(4, dtype=complex)[None]]
    layer_words, layer = [""], mats[0]
    for _ in range(max_len):
        layer_words = [w + "U" for w in layer_words] + [w + "V" for w in layer_words]
        layer = np.concatenate([layer @ u, layer @ v])
        words += layer_words
        mats.append(layer)
    return words, np.concatenate(mats)


def _as_real(m: np.ndarray) -> np.ndarray:
    flat = m.reshape(len(m), 16)
    return np.concatenate([flat.real, flat.imag], axis=1)


def _best_split(prefixes, suffixes, target, phase_invariant: bool) -> tuple[int, int, float]:
    """Maximize the overlap Tr((p s)^dag X) = Tr(p^dag X s^dag) over all pairs."""
    queries = target[None] @ suffixes.conj().transpose(0, 2, 1)
    best = (-np.inf, 0, 0)
    if phase_invariant:
        pc = prefixes.reshape(len(prefixes), 16).conj()
    else:
        pr = _as_real(prefixes)
    for start in range(0, len(queries), _CHUNK):
        block = queries[start : start + _CHUNK]
        if phase_invariant:
            scores = np.abs(pc @ block.reshape(len(block), 16).T)
        else:
            scores = pr @ _as_real(block).T
        i, j = np.unravel_index(int(np.argmax(scores)), scores.shape)
        if scores[i, j] > best[0]:
            best = (float(scores[i, j]), int(i), start + int(j))
    return best[1], best[2], best[0]


def synthesize(target, gate, depth: int, phase_invariant: bool = False) -> SynthesisResult:
    """Best word of length <= depth over {U, TUT} approximating ``target``.

    Meet in the middle: prefixes up to ceil(depth/2) letters, suffixes up to
    floor(depth/2). The metric is affine in a real inner product of the
    flattened matrices, so each suffix block is scored against every prefix
    with one matrix product; the search is exact.
    """
    if depth > MAX_DEPTH:
        raise ResourceError(f"depth {depth} exceeds the limit of {MAX_DEPTH}")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    target = as_unitary(target)
    pw, pm = enumerate_words(gate, (depth + 1) // 2)
    sw, sm = enumerate_words(gate, depth // 2)
    return _search(target, pw, pm, sw, sm, depth, phase_invariant)


def _search(target, pw, pm, sw, sm, depth, phase_invariant) -> SynthesisResult:
    i, j, _ = _best_split(pm, sm, target, phase_invariant)
    realized = as_unitary(pm[i] @ sm[j])
    metric = phase_invariant_distance if phase_invariant else distance
    word = GateWord(pw[i] + sw[j], realized)
    return SynthesisResult(target, word, metric(realized, target), depth)


@dataclass(frozen=True)
class DecayTable:
    rows: tuple  # (depth, mean best distance)
    slope: float  # least-squares slope of log(mean distance) against depth

    def to_dict(self) -> dict:
        return {
            "rows": [{"depth": d, "mean_best_distance": m} for d, m in self.rows],
            "slope": self.slope,
        }


def decay_experiment(
    gate,
    n_targets: int,
    depth_max: int,
    seed: int,
    depths=DECAY_DEPTHS,
    phase_invariant: bool = False,
) -> DecayTable:
    """Mean best synthesis distance to seeded Haar targets at each depth."""
    depths = [d for d in depths if d <= depth_max]
    if depth_max > MAX_DEPTH:
        raise ResourceError(f"depth {depth_max} exceeds the limit of {MAX_DEPTH}")
    if n_targets <= 0 or not depths:
        return DecayTable((), float("nan"))
    targets = [haar_random_unitary(rng) for rng in streams(seed, n_targets)]
    top = max(depths)
    pw, pm = enumerate_words(gate, (top + 1) // 2)
    rows = []
    for d in depths:
        # words are ordered by length, so length-limited sets are prefixes
        n_pre = 2 ** ((d + 1) // 2 + 1) - 1
        n_suf = 2 ** (d // 2 + 1) - 1
        dists = [
            _search(t, pw, pm[:n_pre], pw, pm[:n_suf], d, phase_invariant).achieved_distance
            for t in targets
        ]
        rows.append((d, float(np.mean(dists))))
    x = np.array([d for d, _ in rows], dtype=float)
    y = np.log([m for _, m in rows])
    slope = float(np.polyfit(x, y, 1)[0]) if len(rows) > 1 else float("nan")
    return DecayTable(tuple(rows), slope)
