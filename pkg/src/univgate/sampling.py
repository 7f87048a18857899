"""Seeded Haar-random gates and population experiments.

Randomness comes from numpy's PCG64 seeded through ``SeedSequence``.
Each sample ``i`` of an experiment with seed ``s`` draws from the stream
``SeedSequence(s).spawn(n)[i]``, so results do not depend on evaluation
order or on how the work is split between workers.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from univgate.classifier import Verdict, classify
from univgate.linalg import as_unitary, exp_hermitian, from_pauli_coefficients, log_unitary

HISTOGRAM_EDGES = np.logspace(-12, 0, 21)


class PreconditionError(ValueError):
    pass


def streams(seed: int, n: int) -> list[np.random.Generator]:
    return [np.random.Generator(np.random.PCG64(s)) for s in np.random.SeedSequence(seed).spawn(n)]


def haar_random_unitary(rng: np.random.Generator) -> np.ndarray:
    """Ginibre matrix, QR, then fix column phases so diag(R) > 0."""
    z = (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return as_unitary(q * (d / np.abs(d)))


def haar_samples(n: int, seed: int) -> list[np.ndarray]:
    return [haar_random_unitary(rng) for rng in streams(seed, n)]


@dataclass(frozen=True)
class SurveyResult:
    n_samples: int
    n_universal_by_scheme: int
    n_universal: int
    sv_ratio_histogram: tuple
    seed: int

    @property
    def fraction_by_scheme(self) -> float:
        return self.n_universal_by_scheme / self.n_samples

    @property
    def fraction_universal(self) -> float:
        return self.n_universal / self.n_samples

    def to_dict(self) -> dict:
        return {
            "n_samples": self.n_samples,
            "n_universal_by_scheme": self.n_universal_by_scheme,
            "n_universal": self.n_universal,
            "fraction_by_scheme": self.fraction_by_scheme,
            "fraction_universal": self.fraction_universal,
            "sv_ratio_histogram": {
                "edges": HISTOGRAM_EDGES.tolist(),
                "counts": list(self.sv_ratio_histogram),
            },
            "seed": self.seed,
        }


def histogram_bucket(ratio: float) -> int:
    """Bucket in 20 log-spaced bins on [1e-12, 1]; out-of-range values clamp."""
    if not ratio > HISTOGRAM_EDGES[0]:
        return 0
    return int(min(np.searchsorted(HISTOGRAM_EDGES, ratio, side="right") - 1, 19))


def survey(n: int, seed: int) -> SurveyResult:
    if n < 1:
        raise ValueError("survey needs n >= 1")
    counts = [0] * 20
    by_scheme = universal = 0
    for u in haar_samples(n, seed):
        report = classify(u)
        by_scheme += report.verdict is Verdict.UNIVERSAL_BY_SCHEME
        universal += report.verdict.is_universal
        counts[histogram_bucket(report.scheme_sv_ratio)] += 1
    return SurveyResult(n, by_scheme, universal, tuple(counts), seed)


def random_direction(rng: np.random.Generator) -> np.ndarray:
    """Hermitian matrix of unit Frobenius norm, isotropic in Pauli coordinates."""
    c = rng.standard_normal(16)
    return from_pauli_coefficients(c / np.linalg.norm(c))


def perturbation_fraction(u, radius: float, n: int, seed: int) -> float:
    """Fraction of ``exp(i(H1 + d))``, ``|d|_F = radius``, judged universal."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    h1 = log_unitary(u)
    hits = 0
    for rng in streams(seed, n):
        g = exp_hermitian(h1 + radius * random_direction(rng))
        hits += classify(g).verdict.is_universal
    return hits / n


def neighborhood_probe(u, radius: float, n: int, seed: int) -> float:
    """Universal fraction of random generators at distance ``radius`` from ``log(u)``.

    Raises PreconditionError unless ``u`` itself classifies as universal.
    """
    verdict = classify(u).verdict
    if not verdict.is_universal:
        raise PreconditionError(f"gate is not certified universal (verdict {verdict.value})")
    return perturbation_fraction(u, radius, n, seed)
