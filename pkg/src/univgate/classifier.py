"""Universality verdicts for two-qubit gates."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from univgate.linalg import (
    PAULI_BASIS,
    RANK_RTOL,
    as_unitary,
    commutator_i,
    log_unitary,
    pauli_coefficients,
)
from univgate.scheme import build_scheme, twist_conjugate

CLASSICAL_ATOL = 1e-10
LOCAL_RTOL = 1e-9
MAX_DENOMINATOR = 1000
RATIONAL_ATOL = 1e-9
CLOSURE_RTOL = RANK_RTOL


class Verdict(str, enum.Enum):
    UNIVERSAL_BY_SCHEME = "UniversalByScheme"
    UNIVERSAL_BY_CLOSURE = "UniversalByClosure"
    UNIVERSAL_UP_TO_PHASE = "UniversalUpToPhase"
    NON_UNIVERSAL_CLASSICAL = "ConjecturedNonUniversalClassical"
    NON_UNIVERSAL_LOCAL = "ConjecturedNonUniversalLocal"
    INCONCLUSIVE = "Inconclusive"

    @property
    def is_universal(self) -> bool:
        return self.value.startswith("Universal")

    @property
    def is_non_universal(self) -> bool:
        return self.value.startswith("ConjecturedNonUniversal")


def detect_classical(u) -> bool:
    """True for monomial matrices: each basis state goes to one basis state."""
    u = as_unitary(u)
    return bool(np.all(np.sum(np.abs(u) > CLASSICAL_ATOL, axis=0) == 1))


def is_permutation(u) -> bool:
    """Strict classical reading: a 0/1 permutation matrix, no phases."""
    u = as_unitary(u)
    return detect_classical(u) and bool(
        np.all(np.abs(u[np.abs(u) > CLASSICAL_ATOL] - 1) <= CLASSICAL_ATOL)
    )


def operator_schmidt_values(u) -> np.ndarray:
    """Singular values of the realigned matrix M[(j,k),(l,m)] = u[(j,l),(k,m)]."""
    u = np.asarray(u, dtype=complex)
    m = u.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    return np.linalg.svd(m, compute_uv=False)


def detect_local(u) -> bool:
    """True iff ``u`` is a product of single-qubit gates (up to phase)."""
    s = operator_schmidt_values(as_unitary(u))
    return bool(s[1] <= LOCAL_RTOL * s[0])


def rational_approximation(x: float) -> tuple[bool, tuple[int, int]]:
    frac = Fraction(x).limit_denominator(MAX_DENOMINATOR)
    ok = bool(abs(x - frac.numerator / frac.denominator) <= RATIONAL_ATOL)
    return ok, (frac.numerator, frac.denominator)


@dataclass(frozen=True)
class EigenphaseAnalysis:
    phases: tuple
    rational_flags: tuple
    approximations: tuple
    # (i, j, rational, (p, q)) for phases[i] / phases[j], both nonzero
    pairwise: tuple = ()


def eigenphase_analysis(u) -> EigenphaseAnalysis:
    h = log_unitary(u)
    phases = np.sort(np.linalg.eigvalsh(h))
    flags, approx = [], []
    for ph in phases:
        ok, pq = rational_approximation(ph / np.pi)
        flags.append(ok)
        approx.append(pq)
    pairs = []
    nz = [i for i, ph in enumerate(phases) if abs(ph) > RATIONAL_ATOL]
    for a in nz:
        for b in nz:
            if a < b:
                ok, pq = rational_approximation(phases[a] / phases[b])
                pairs.append((a, b, ok, pq))
    return EigenphaseAnalysis(
        tuple(float(p) for p in phases), tuple(flags), tuple(approx), tuple(pairs)
    )


def _structure_constants() -> np.ndarray:
    n = len(PAULI_BASIS)
    f = np.zeros((n, n, n))
    for a in range(n):
        for b in range(n):
            f[a, b] = pauli_coefficients(commutator_i(PAULI_BASIS[a], PAULI_BASIS[b]))
    return f


# i[B_a, B_b] = sum_c STRUCTURE[a, b, c] B_c
STRUCTURE = _structure_constants()
STRUCTURE.setflags(write=False)


def _orthonormal_rows(v: np.ndarray, rtol: float = CLOSURE_RTOL) -> np.ndarray:
    if len(v) == 0:
        return np.zeros((0, 16))
    _, s, vt = np.linalg.svd(v, full_matrices=False)
    if s[0] == 0:
        return np.zeros((0, 16))
    return vt[s > rtol * s[0]]


class Closure(NamedTuple):
    dimension: int
    basis: np.ndarray  # orthonormal rows of Pauli coefficients


def lie_closure(seeds) -> Closure:
    """Real span of ``seeds`` closed under ``i[., .]``."""
    seeds = list(seeds)
    if not seeds:
        raise ValueError("lie_closure needs at least one seed")
    basis = _orthonormal_rows(np.array([pauli_coefficients(h) for h in seeds]))
    while 0 < len(basis) < 16:
        n = len(basis)
        comms = np.einsum("ai,bj,ijk->abk", basis, basis, STRUCTURE)
        rows = list(basis)
        for a in range(n):
            for b in range(a + 1, n):
                c = comms[a, b]
                q = np.array(rows)
                r = c - q.T @ (q @ c)
                r -= q.T @ (q @ r)
                rn = np.linalg.norm(r)
                # relative to the unit-norm elements being commuted, so a
                # roundoff-sized commutator never spawns a direction
                if rn > CLOSURE_RTOL:
                    rows.append(r / rn)
                    if len(rows) == 16:
                        break
            if len(rows) == 16:
                break
        if len(rows) == n:
            break
        basis = np.array(rows)
    return Closure(len(basis), basis)


def traceless_dimension(basis: np.ndarray) -> int:
    """Dimension of the closure projected onto the traceless part of u(4)."""
    if len(basis) == 0:
        return 0
    return len(_orthonormal_rows(np.asarray(basis)[:, 1:]))


@dataclass(frozen=True)
class UniversalityReport:
    verdict: Verdict
    closure_dimension: int
    scheme_sv_ratio: float
    classical: bool
    local: bool
    eigenphases: EigenphaseAnalysis
    permutation: bool = False
    scheme_rank: int = 0
    scheme_numerical_rank: int = 0
    scheme_borderline: bool = False
    traceless_dimension: int = 0
    closure_basis: np.ndarray = field(default=None, repr=False)

    def to_dict(self) -> dict:
        ep = self.eigenphases
        return {
            "verdict": self.verdict.value,
            "closure_dimension": self.closure_dimension,
            "traceless_dimension": self.traceless_dimension,
            "scheme_sv_ratio": self.scheme_sv_ratio,
            "scheme_rank": self.scheme_rank,
            "scheme_numerical_rank": self.scheme_numerical_rank,
            "scheme_borderline": self.scheme_borderline,
            "classical": self.classical,
            "permutation": self.permutation,
            "local": self.local,
            "eigenphases": {
                "phases": [float(p) for p in ep.phases],
                "rational": list(ep.rational_flags),
                "approximations": [list(pq) for pq in ep.approximations],
                "pairwise": [
                    {"i": i, "j": j, "rational": ok, "approximation": list(pq)}
                    for i, j, ok, pq in ep.pairwise
                ],
            },
        }


def _non_universal(classical: bool, local: bool, permutation: bool) -> Verdict:
    if classical and local:
        # identity and other bare permutations read as classical
        return Verdict.NON_UNIVERSAL_CLASSICAL if permutation else Verdict.NON_UNIVERSAL_LOCAL
    return Verdict.NON_UNIVERSAL_CLASSICAL if classical else Verdict.NON_UNIVERSAL_LOCAL


def classify(u) -> UniversalityReport:
    u = as_unitary(u)
    classical = detect_classical(u)
    local = detect_local(u)
    permutation = is_permutation(u)

    h1 = log_unitary(u)
    h2 = twist_conjugate(h1)
    scheme = build_scheme(h1)
    closure = lie_closure([h1, h2])
    tdim = traceless_dimension(closure.basis)

    # flags are exact facts; certificates on the principal generator can
    # overcount for rational-phase gates, so flags win any conflict
    if classical or local:
        verdict = _non_universal(classical, local, permutation)
    elif scheme.is_full_rank:
        verdict = Verdict.UNIVERSAL_BY_SCHEME
    elif closure.dimension == 16:
        verdict = Verdict.UNIVERSAL_BY_CLOSURE
    elif tdim == 15:
        verdict = Verdict.UNIVERSAL_UP_TO_PHASE
    else:
        verdict = Verdict.INCONCLUSIVE

    return UniversalityReport(
        verdict=verdict,
        closure_dimension=closure.dimension,
        scheme_sv_ratio=scheme.sv_ratio,
        classical=classical,
        local=local,
        eigenphases=eigenphase_analysis(u),
        permutation=permutation,
        scheme_rank=scheme.rank,
        scheme_numerical_rank=scheme.numerical_rank,
        scheme_borderline=scheme.borderline,
        traceless_dimension=tdim,
        closure_basis=closure.basis,
    )
