"""Built-in claim suite run by ``univgate verify-paper``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from univgate.gates import CNOT, barenco
from univgate.linalg import log_unitary
from univgate.sampling import perturbation_fraction, random_direction, streams, survey
from univgate.scheme import build_scheme, build_simple_scheme, family_generator, verify_polynomial_degree
from univgate.synthesis import decay_experiment, trotter_commutator, trotter_sum

REFERENCE_GATE = (0.3, 0.4, 0.5)


@dataclass(frozen=True)
class Claim:
    name: str
    measured: object
    threshold: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "measured": self.measured,
            "threshold": self.threshold,
            "pass": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _reference_generator() -> np.ndarray:
    return log_unitary(barenco(*REFERENCE_GATE))


def claim_scheme(seed: int) -> Claim:
    s = build_scheme(_reference_generator())
    return Claim("scheme", s.sv_ratio, "sigma16/sigma1 > 1e-7", s.sv_ratio > 1e-7,
                 f"rank {s.rank}, numerical rank {s.numerical_rank}")


def claim_simple_scheme(seed: int) -> Claim:
    s = build_simple_scheme(_reference_generator())
    return Claim("simple-scheme", s.sv_ratio, "sigma16/sigma1 < 1e-10", s.sv_ratio < 1e-10,
                 f"rank {s.rank}")


def claim_delta(seed: int) -> Claim:
    h1, h1a = log_unitary(CNOT), _reference_generator()
    check = verify_polynomial_degree(h1, h1a)
    at_one = build_scheme(family_generator(h1, h1a, 1.0))
    nonzero = at_one.numerical_rank == 16
    return Claim(
        "delta",
        {"residual": check.max_relative_residual, "delta_1": at_one.determinant,
         "degenerate": check.degenerate},
        "residual <= 1e-3 and Delta(1) != 0",
        bool(check.is_polynomial and nonzero),
        f"numerical rank at k=1: {at_one.numerical_rank}",
    )


def trotter_ratios(seed: int, n_pairs: int = 20, n: int = 256) -> tuple[float, float]:
    """Mean error(2n)/error(n) for sums and error(4n)/error(n) for commutators."""
    sums, comms = [], []
    for rng in streams(seed, n_pairs):
        p, q = random_direction(rng), random_direction(rng)
        sums.append(trotter_sum(p, q, 1, 1, 2 * n)[1] / trotter_sum(p, q, 1, 1, n)[1])
        comms.append(trotter_commutator(p, q, 4 * n)[1] / trotter_commutator(p, q, n)[1])
    return float(np.mean(sums)), float(np.mean(comms))


def claim_trotter(seed: int) -> Claim:
    r_sum, r_comm = trotter_ratios(seed)
    ok = 0.4 <= r_sum <= 0.6 and 0.35 <= r_comm <= 0.65
    return Claim("trotter", {"sum_ratio": r_sum, "commutator_ratio": r_comm},
                 "sum in [0.4, 0.6], commutator in [0.35, 0.65]", ok)


def claim_survey(seed: int) -> Claim:
    res = survey(1000, seed)
    return Claim("survey", res.fraction_by_scheme, "UniversalByScheme fraction >= 0.999",
                 res.fraction_by_scheme >= 0.999,
                 f"any universal verdict: {res.fraction_universal:.4f}")


def claim_neighborhood(seed: int) -> Claim:
    frac = perturbation_fraction(barenco(*REFERENCE_GATE), 1e-3, 200, seed)
    return Claim("neighborhood", frac, "fraction == 1.0", frac == 1.0)


def claim_decay(seed: int) -> Claim:
    table = decay_experiment(barenco(*REFERENCE_GATE), 20, 20, seed)
    return Claim("decay", table.slope, "slope < 0", table.slope < 0,
                 ", ".join(f"d={d}: {m:.4f}" for d, m in table.rows))


CLAIMS: dict[str, Callable[[int], Claim]] = {
    "scheme": claim_scheme,
    "simple-scheme": claim_simple_scheme,
    "delta": claim_delta,
    "trotter": claim_trotter,
    "survey": claim_survey,
    "neighborhood": claim_neighborhood,
    "decay": claim_decay,
}


def run_claims(seed: int = 42, skip=()) -> list[Claim]:
    out = []
    for name, fn in CLAIMS.items():
        if name in skip:
            continue
        t0 = time.perf_counter()
        claim = fn(seed)
        out.append(Claim(claim.name, claim.measured, claim.threshold, claim.passed,
                         claim.detail, time.perf_counter() - t0))
    return out
