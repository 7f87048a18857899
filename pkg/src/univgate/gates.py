"""Named two-qubit gates in the computation basis |00>, |01>, |10>, |11>."""
import numpy as np

from univgate.linalg import as_unitary

IDENTITY = as_unitary(np.eye(4))
# qubit exchange, also the twist T
SWAP = as_unitary(np.eye(4)[[0, 2, 1, 3]])
CNOT = as_unitary(np.eye(4)[[0, 1, 3, 2]])
CZ = as_unitary(np.diag([1, 1, 1, -1]))


def barenco(phi: float, alpha: float, theta: float) -> np.ndarray:
    """Controlled gate A(phi, alpha, theta): identity on |0x>, a 2x2 rotation on |1x>."""
    m = np.eye(4, dtype=complex)
    c, s = np.cos(theta), np.sin(theta)
    m[2, 2] = np.exp(1j * alpha) * c
    m[2, 3] = -1j * np.exp(1j * (alpha - phi)) * s
    m[3, 2] = -1j * np.exp(1j * (alpha + phi)) * s
    m[3, 3] = np.exp(1j * alpha) * c
    return as_unitary(m)


def diag_phases(p0: float, p1: float, p2: float, p3: float) -> np.ndarray:
    return as_unitary(np.diag(np.exp(1j * np.array([p0, p1, p2, p3]))))


def zyz(a: float, b: float, c: float, phase: float) -> np.ndarray:
    """Single-qubit ``e^{i phase} Rz(a) Ry(b) Rz(c)``."""
    rz = lambda t: np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])
    ry = np.array([[np.cos(b / 2), -np.sin(b / 2)], [np.sin(b / 2), np.cos(b / 2)]])
    return np.exp(1j * phase) * rz(a) @ ry @ rz(c)


def kron_gate(*params: float) -> np.ndarray:
    """Product gate from 8 reals: ZYZ angles and phase of qubit 1, then qubit 2."""
    if len(params) != 8:
        raise ValueError("kron_gate takes 8 parameters")
    return as_unitary(np.kron(zyz(*params[:4]), zyz(*params[4:])))
