"""Numerical checks of two-qubit gate universality."""
from univgate.classifier import Verdict, classify, lie_closure
from univgate.gateio import emit_gate, parse_gate
from univgate.linalg import commutator_i, distance, exp_hermitian, log_unitary, pauli_coefficients
from univgate.scheme import build_scheme, build_simple_scheme, twist_conjugate

__all__ = [
    "Verdict",
    "build_scheme",
    "build_simple_scheme",
    "classify",
    "commutator_i",
    "distance",
    "emit_gate",
    "exp_hermitian",
    "lie_closure",
    "log_unitary",
    "parse_gate",
    "pauli_coefficients",
    "twist_conjugate",
]
