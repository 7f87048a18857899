"""Dense 4x4 complex linear algebra for two-qubit gates.

Gates are plain ``complex128`` arrays of shape ``(4, 4)``; validated values
are returned read-only. Generators follow the convention ``U = exp(iH)``.
"""
from __future__ import annotations

import warnings
from typing import NamedTuple

import numpy as np
import scipy.linalg

UNITARY_ATOL = 1e-10
HERMITIAN_ATOL = 1e-10

RANK_RTOL = 1e-7
BORDERLINE_RTOL = 1e-10

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# B[4*j + k] = (sigma_j kron sigma_k) / 2, orthonormal under Tr(A^dag B)
PAULI_BASIS = np.array([np.kron(a, b) / 2 for a in PAULI for b in PAULI])
PAULI_BASIS.setflags(write=False)


class NotUnitaryError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


def _matrix4(m) -> np.ndarray:
    a = np.array(m, dtype=complex)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def unitary_violation(m) -> float:
    a = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))


def as_unitary(m, atol: float = UNITARY_ATOL) -> np.ndarray:
    """Validate ``m`` as a 4x4 unitary and return a read-only copy."""
    a = _matrix4(m)
    err = unitary_violation(a)
    if err > atol:
        raise NotUnitaryError(f"matrix is not unitary: max|U^dag U - I| = {err:.3g}")
    a.setflags(write=False)
    return a


def as_hermitian(m, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Validate ``m`` as a 4x4 Hermitian matrix and return a read-only copy."""
    a = _matrix4(m)
    err = float(np.max(np.abs(a - a.conj().T)))
    if err > atol:
        raise NotHermitianError(f"matrix is not Hermitian: max|H - H^dag| = {err:.3g}")
    a.setflags(write=False)
    return a


def unitary_eigh(u) -> tuple[np.ndarray, np.ndarray]:
    """Eigenphases in (-pi, pi] and a unitary eigenvector matrix of ``u``.

    Uses the complex Schur form, which is diagonal for normal matrices and
    keeps the eigenvectors orthonormal inside degenerate eigenspaces.
    """
    u = as_unitary(u)
    t, z = scipy.linalg.schur(u, output="complex")
    phases = np.angle(np.diag(t))
    # eigenvalue -1 (up to roundoff) goes to +pi
    phases[phases <= -np.pi + 1e-12] = np.pi
    return phases, z


def log_unitary(u) -> np.ndarray:
    """Principal generator ``H`` with ``exp(iH) = u``, eigenvalues in (-pi, pi]."""
    phases, z = unitary_eigh(u)
    h = (z * phases) @ z.conj().T
    return as_hermitian((h + h.conj().T) / 2)


def exp_hermitian(h) -> np.ndarray:
    """Return ``exp(iH)`` for Hermitian ``h``."""
    h = as_hermitian(h)
    w, v = np.linalg.eigh(h)
    return as_unitary((v * np.exp(1j * w)) @ v.conj().T)


def commutator_i(a, b) -> np.ndarray:
    """``i(ab - ba)``; Hermitian whenever ``a`` and ``b`` are."""
    a = as_hermitian(a)
    b = as_hermitian(b)
    x = a @ b
    # ba = (ab)^dag for Hermitian a, b, so this is Hermitian to the last bit
    return as_hermitian(1j * (x - x.conj().T))


def pauli_coefficients(h) -> np.ndarray:
    """Real coefficients ``c[4j+k] = Tr(B_jk h)`` in the Pauli product basis."""
    h = as_hermitian(h)
    return np.einsum("kij,ji->k", PAULI_BASIS, h).real


def from_pauli_coefficients(c) -> np.ndarray:
    return np.einsum("k,kij->ij", np.asarray(c, dtype=float), PAULI_BASIS)


class RankAnalysis(NamedTuple):
    """Determinant and descending singular values of a 16x16 real matrix."""

    determinant: float
    singular_values: np.ndarray

    @property
    def ratio(self) -> float:
        s = self.singular_values
        return 0.0 if s[0] == 0 else float(s[-1] / s[0])

    @property
    def rank(self) -> int:
        s = self.singular_values
        if s[0] == 0:
            return 0
        return int(np.sum(s / s[0] > RANK_RTOL))

    @property
    def borderline(self) -> bool:
        """Some singular value falls in the ambiguous band [1e-10, 1e-7]."""
        s = self.singular_values
        if s[0] == 0:
            return False
        r = s / s[0]
        return bool(np.any((r >= BORDERLINE_RTOL) & (r <= RANK_RTOL)))


def lu_determinant(m) -> float:
    m = np.asarray(m, dtype=float)
    with warnings.catch_warnings():
        # exactly singular input is a valid case here, det = 0
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(m, check_finite=True)
    sign = (-1) ** int(np.sum(piv != np.arange(len(piv))))
    return float(sign * np.prod(np.diag(lu)))


def rank_analysis(m) -> RankAnalysis:
    m = np.asarray(m, dtype=float)
    if m.shape != (16, 16):
        raise ValueError(f"expected a 16x16 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    s = np.linalg.svd(m, compute_uv=False)
    return RankAnalysis(lu_determinant(m), s)


def distance(p, q) -> float:
    """Gate metric ``sqrt(1 - Re Tr(p^dag q) / 4)``.

    Evaluated as ``|p - q|_F / sqrt(8)``, equal for unitaries and free of
    the cancellation that limits the trace form to ~1e-8 near ``p == q``.
    """
    p = as_unitary(p)
    q = as_unitary(q)
    return float(np.linalg.norm(p - q) / np.sqrt(8))


def phase_invariant_distance(p, q) -> float:
    """``sqrt(1 - |Tr(p^dag q)| / 4)``; blind to global phase."""
    p = as_unitary(p)
    q = as_unitary(q)
    overlap = np.vdot(q, p)
    phase = overlap / abs(overlap) if overlap != 0 else 1.0
    return float(np.linalg.norm(p - phase * q) / np.sqrt(8))
