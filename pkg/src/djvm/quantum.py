"""Sign-exact single- and multi-qubit Hadamard simulation.

Everything here is integer arithmetic: normalization constants are dropped,
so a superposition is just an ordered list of (sign, index) pairs with all
signs in {-1, +1}. The 2x2 float Hadamard matrix exists only for display
and verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DataError

SQRT_HALF = 1.0 / math.sqrt(2.0)


def define_h_gate() -> list[list[float]]:
    """Return the 2x2 Hadamard matrix [[1,1],[1,-1]] scaled by 1/sqrt(2)."""
    return [[SQRT_HALF, SQRT_HALF], [SQRT_HALF, -SQRT_HALF]]


def _check_bit(b, what: str = "qubit") -> int:
    if isinstance(b, bool) or not isinstance(b, int) or b not in (0, 1):
        raise DataError(f"{what} must be 0 or 1, got {b!r}")
    return b


@dataclass(frozen=True)
class SignedBasisState:
    sign: int
    index: int


@dataclass(frozen=True)
class Superposition:
    """Unnormalized superposition over ``width`` qubits.

    Terms are dense and ascending by basis index; term k always has index k.
    """

    width: int
    terms: tuple[SignedBasisState, ...]

    def __post_init__(self):
        if self.width < 1:
            raise DataError("superposition width must be positive")
        if len(self.terms) != 2 ** self.width:
            raise DataError("superposition must have 2**width terms")
        for k, t in enumerate(self.terms):
            if t.index != k or t.sign not in (-1, 1):
                raise DataError("superposition terms must be ascending with signs in {-1,+1}")
        if self.terms[0].sign != 1:
            raise DataError("first term must have sign +1")

    def sign(self, z: int) -> int:
        return self.terms[z].sign

    def signs(self) -> list[int]:
        return [t.sign for t in self.terms]

    def render(self) -> str:
        """Render as e.g. '000 +001 +010 ...' (leading sign omitted)."""
        out = []
        for t in self.terms:
            label = format(t.index, f"0{self.width}b")
            if t.index == 0:
                out.append(label)
            else:
                out.append(("+" if t.sign > 0 else "-") + label)
        return " ".join(out)


def apply_h_gate(b) -> Superposition:
    """Hadamard action on |0> or |1>, up to normalization.

    Returns terms [(+1, 0), (s, 1)] with s = +1 for input 0 and -1 for 1.
    """
    b = _check_bit(b)
    s = 1 if b == 0 else -1
    return Superposition(1, (SignedBasisState(1, 0), SignedBasisState(s, 1)))


def tensor_extend(acc: Superposition, b) -> Superposition:
    """Tensor a one-qubit Hadamard image onto ``acc`` (acc on the left)."""
    low = apply_h_gate(b)
    terms = []
    for t in acc.terms:
        for j in (0, 1):
            terms.append(SignedBasisState(t.sign * low.sign(j), 2 * t.index + j))
    return Superposition(acc.width + 1, tuple(terms))


def hadamard_transform(bits) -> Superposition:
    """n-qubit Hadamard transform of the basis state given by ``bits`` (MSB first).

    The sign of index z equals (-1)**popcount(x AND z) where x is the decimal
    value of ``bits``; built as a left fold of tensor_extend so the two
    construction paths coincide by definition.
    """
    bits = list(bits)
    if not bits:
        raise DataError("hadamard_transform needs at least one qubit")
    acc = apply_h_gate(bits[0])
    for b in bits[1:]:
        acc = tensor_extend(acc, b)
    return acc


def answer_phase(fval) -> int:
    """Phase kicked back by the answer register: (-1)**f(x)."""
    fval = _check_bit(fval, "oracle value")
    return 1 if fval == 0 else -1


def convert_to_binary(values) -> list[list[int]]:
    """Render non-negative integers in a common width, MSB first.

    Width is the bit length of the maximum value (1 when all values are 0).
    """
    values = list(values)
    if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in values):
        raise DataError("convert_to_binary takes non-negative integers")
    width = max(1, max(values, default=0).bit_length())
    return [[(v >> (width - 1 - i)) & 1 for i in range(width)] for v in values]


def decimal(bits) -> int:
    """Decimal value of an MSB-first bit sequence."""
    n = 0
    for b in bits:
        n = 2 * n + _check_bit(b)
    return n
