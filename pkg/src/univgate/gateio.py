"""Text format for two-qubit gates.

A gate is either a named constructor, e.g. ``barenco(0.3, 0.4, 0.5)`` or
``swap``, or a literal of four lines, one per matrix row, each holding eight
reals read as (re, im) pairs::

    1.0 0.0 0.0 0.0 0.0 0.0 0.0 0.0
    0.0 0.0 0.0 0.0 1.0 0.0 0.0 0.0
    0.0 0.0 1.0 0.0 0.0 0.0 0.0 0.0
    0.0 0.0 0.0 0.0 0.0 0.0 1.0 0.0

Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import ast
import math
import operator
import re
import warnings

import numpy as np

from univgate import gates
from univgate.linalg import UNITARY_ATOL, as_unitary, unitary_violation

ACCEPT_ATOL = 1e-8
REJECT_ATOL = 1e-4

NAMED = {
    "identity": (0, lambda: gates.IDENTITY),
    "swap": (0, lambda: gates.SWAP),
    "cnot": (0, lambda: gates.CNOT),
    "cz": (0, lambda: gates.CZ),
    "barenco": (3, gates.barenco),
    "diag": (4, gates.diag_phases),
    "kron": (8, gates.kron_gate),
}

_NAMED_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*(?:\((.*)\))?\s*$", re.S)

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_UNOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}


class GateParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class GateValidationError(ValueError):
    pass


class ProjectionWarning(UserWarning):
    pass


def _eval_number(node: ast.AST) -> float:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id in ("pi", "π"):
        return math.pi
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_number(node.left), _eval_number(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
        return _UNOPS[type(node.op)](_eval_number(node.operand))
    raise ValueError("unsupported expression")


def _parse_args(text: str, offset: int) -> list[float]:
    if not text.strip():
        return []
    args, col = [], offset
    for piece in text.split(","):
        try:
            node = ast.parse(piece.strip(), mode="eval").body
            args.append(_eval_number(node))
        except (SyntaxError, ValueError, ZeroDivisionError):
            raise GateParseError(f"bad argument {piece.strip()!r}", 1, col + 1) from None
        col += len(piece) + 1
    return args


def _parse_named(text: str) -> np.ndarray:
    m = _NAMED_RE.match(text)
    if not m:
        raise GateParseError("expected name(args...) or a 4-line matrix literal")
    name = m.group(1).lower()
    if name not in NAMED:
        raise GateParseError(f"unknown gate {m.group(1)!r}", 1, m.start(1) + 1)
    arity, ctor = NAMED[name]
    args = _parse_args(m.group(2) or "", m.start(2) if m.group(2) is not None else 0)
    if len(args) != arity:
        raise GateParseError(f"{name} takes {arity} argument(s), got {len(args)}", 1, m.start(1) + 1)
    return np.array(ctor(*args), dtype=complex)


def _parse_literal(text: str) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = []
        for tok in re.finditer(r"\S+", line):
            try:
                values.append(float(tok.group()))
            except ValueError:
                raise GateParseError(f"not a number: {tok.group()!r}", lineno, tok.start() + 1) from None
        if len(values) != 8:
            raise GateParseError(f"expected 8 reals per row, got {len(values)}", lineno, 1)
        rows.append(np.array(values[0::2]) + 1j * np.array(values[1::2]))
        if len(rows) > 4:
            raise GateParseError("more than 4 matrix rows", lineno, 1)
    if len(rows) != 4:
        raise GateParseError(f"expected 4 matrix rows, got {len(rows)}", max(1, len(text.splitlines())), 1)
    return np.array(rows)


def polar_unitary(m: np.ndarray) -> np.ndarray:
    """Nearest unitary in Frobenius norm, ``W V^dag`` from ``m = W S V^dag``."""
    w, _, vh = np.linalg.svd(m)
    return w @ vh


def validate(m: np.ndarray) -> np.ndarray:
    err = unitary_violation(m)
    if err > REJECT_ATOL:
        raise GateValidationError(f"matrix is not unitary (max|U^dag U - I| = {err:.3g})")
    if err > ACCEPT_ATOL:
        warnings.warn(
            f"matrix is {err:.3g} from unitary; projected to the nearest unitary",
            ProjectionWarning,
            stacklevel=3,
        )
    if err > UNITARY_ATOL:
        m = polar_unitary(m)
    return as_unitary(m)


def parse_gate(text: str) -> np.ndarray:
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if len(body) == 1 and _NAMED_RE.match(body[0]) and not re.match(r"^\s*[-+.\d]", body[0]):
        m = _parse_named(body[0])
    else:
        m = _parse_literal(text)
    if not np.all(np.isfinite(m)):
        raise GateParseError("non-finite entry")
    return validate(m)


def emit_gate(u) -> str:
    """Four-line literal; shortest round-trip reprs (at most 17 significant digits)."""
    u = np.asarray(u, dtype=complex)
    lines = []
    for row in u:
        parts = []
        for z in row:
            parts += [repr(float(z.real)), repr(float(z.imag))]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
