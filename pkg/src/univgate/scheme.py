"""Commutator schemes that grow sixteen generators out of one.

Generators are numbered 1..16 as in the usual statement of the scheme and
stored 0-based, so ``generators[j - 1]`` holds generator ``j``::

    H2  = T H1 T
    Hj  = i[H1, H(j-1)]      j = 3..14
    H15 = i[H2, H3]
    H16 = i[H2, H5]

Generators are never normalized: the determinant of the coefficient matrix
is then a polynomial of degree 100 in the entries of ``H1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from univgate.gates import SWAP
from univgate.linalg import (
    RankAnalysis,
    as_hermitian,
    commutator_i,
    pauli_coefficients,
    rank_analysis,
)

TWIST = SWAP

# numpy.linalg.matrix_rank's default tolerance for a 16x16 matrix
NUMERICAL_RANK_RTOL = 16 * np.finfo(float).eps

N_CHEBYSHEV = 101
N_HELD_OUT = 20
DEGREE_RTOL = 1e-3


def twist_conjugate(h) -> np.ndarray:
    """``T h T``: the same gate with its two input (and output) qubits exchanged."""
    h = as_hermitian(h)
    # T is a permutation, so conjugation is an exact reindexing
    p = [0, 2, 1, 3]
    return as_hermitian(h[np.ix_(p, p)])


@dataclass(frozen=True)
class GeneratorScheme:
    generators: tuple
    coeff_matrix: np.ndarray = field(repr=False)
    determinant: float
    singular_values: np.ndarray = field(repr=False)

    @property
    def analysis(self) -> RankAnalysis:
        return RankAnalysis(self.determinant, self.singular_values)

    @property
    def sv_ratio(self) -> float:
        """sigma_16 / sigma_1 of the raw coefficient matrix."""
        return self.analysis.ratio

    @property
    def rank(self) -> int:
        return self.analysis.rank

    @property
    def is_full_rank(self) -> bool:
        return self.rank == 16

    @property
    def borderline(self) -> bool:
        return self.analysis.borderline

    @property
    def numerical_rank(self) -> int:
        """Rank of the row-equilibrated matrix at the 16*eps roundoff level.

        Row scaling leaves linear independence unchanged but removes the
        norm growth of nested commutators, so this separates exactly
        singular schemes from merely ill-conditioned ones.
        """
        m = self.coeff_matrix
        norms = np.linalg.norm(m, axis=1)
        m = m[norms > 0] / norms[norms > 0, None]
        if len(m) == 0:
            return 0
        s = np.linalg.svd(m, compute_uv=False)
        return int(np.sum(s > NUMERICAL_RANK_RTOL * s[0]))


def _finish(generators: list) -> GeneratorScheme:
    m = np.array([pauli_coefficients(h) for h in generators])
    ra = rank_analysis(m)
    m.setflags(write=False)
    return GeneratorScheme(tuple(generators), m, ra.determinant, ra.singular_values)


def build_scheme(h1) -> GeneratorScheme:
    h1 = as_hermitian(h1)
    gens = [h1, twist_conjugate(h1)]
    for _ in range(3, 15):
        gens.append(commutator_i(h1, gens[-1]))
    gens.append(commutator_i(gens[1], gens[2]))
    gens.append(commutator_i(gens[1], gens[4]))
    return _finish(gens)


def build_simple_scheme(h1) -> GeneratorScheme:
    """Variant that keeps nesting ``i[H1, .]`` up to generator 16."""
    h1 = as_hermitian(h1)
    gens = [h1, twist_conjugate(h1)]
    for _ in range(3, 17):
        gens.append(commutator_i(h1, gens[-1]))
    return _finish(gens)


def family_generator(h1, h1a, k: float) -> np.ndarray:
    h1 = np.asarray(h1, dtype=complex)
    return as_hermitian(h1 + k * (np.asarray(h1a, dtype=complex) - h1))


def delta_of_k(h1, h1a, k: float) -> float:
    """Scheme determinant along ``H1 + k (H1a - H1)``."""
    return build_scheme(family_generator(h1, h1a, k)).determinant


def chebyshev_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """First-kind Chebyshev nodes on [-1, 1] and their barycentric weights."""
    j = np.arange(n)
    angle = (2 * j + 1) * np.pi / (2 * n)
    return np.cos(angle), (-1.0) ** j * np.sin(angle)


def barycentric(x, nodes, weights, values) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(x)
    for i, xi in enumerate(x):
        d = xi - nodes
        hit = np.flatnonzero(d == 0)
        if hit.size:
            out[i] = values[hit[0]]
        else:
            t = weights / d
            out[i] = np.dot(t, values) / np.sum(t)
    return out


@dataclass(frozen=True)
class DegreeCheck:
    is_polynomial: bool
    max_relative_residual: float
    degenerate: bool
    nodes: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)


def verify_polynomial_degree(h1, h1a) -> DegreeCheck:
    """Check that Delta(k) is a polynomial of degree <= 100 on [-1, 1].

    Samples at 101 Chebyshev nodes, interpolates, and compares against 20
    held-out equispaced points. A family is degenerate when ``h1 == h1a``
    or every sampled scheme is numerically singular.
    """
    h1 = as_hermitian(h1)
    h1a = as_hermitian(h1a)
    nodes, weights = chebyshev_nodes(N_CHEBYSHEV)
    empty = np.empty(0)
    if np.array_equal(h1, h1a):
        return DegreeCheck(False, float("nan"), True, nodes, empty)

    schemes = [build_scheme(family_generator(h1, h1a, k)) for k in nodes]
    values = np.array([s.determinant for s in schemes])
    if all(s.numerical_rank < 16 for s in schemes):
        return DegreeCheck(False, float("nan"), True, nodes, values)

    held_out = np.linspace(-1.0, 1.0, N_HELD_OUT)
    truth = np.array([delta_of_k(h1, h1a, k) for k in held_out])
    approx = barycentric(held_out, nodes, weights, values)
    scale = np.max(np.abs(truth))
    resid = float(np.max(np.abs(truth - approx)) / scale) if scale > 0 else float("inf")
    return DegreeCheck(resid <= DEGREE_RTOL, resid, False, nodes, values)
