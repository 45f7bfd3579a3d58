"""Deutsch-Jozsa circuit driver with pluggable oracles.

The driver enumerates every query-register state x, computes the
label-weighted row phase(x) * sign_x(z) * z, and decides constant vs
balanced from the column sums. Oracles may perform machine side effects,
but only on register cells indexed by the current state (cell x+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import DataError, OracleContractError
from .machine import SUPERPOSED, MachineState, cells_equal, is_number
from .quantum import answer_phase, convert_to_binary, decimal, hadamard_transform

CONSTANT_EVENT = "QUERY REGISTER IN 0 STATE"
BALANCED_EVENT = "QUERY REGISTER EVALUATED IN SUPERPOSITION OF THESE STATES"


@dataclass(frozen=True)
class RegisterBinding:
    """Left/right operands passed through to the oracle; meaning is oracle-specific."""

    r1: int = 0
    r0: int = 0


@dataclass(frozen=True)
class Oracle:
    name: str
    evaluate: Callable[[MachineState, list, RegisterBinding], int]


@dataclass(frozen=True)
class PConvMatrix:
    """qrsize x qrsize integer matrix; row x holds phase(x) * sign_x(z) * z."""

    n: int
    rows: tuple

    def entry(self, x: int, z: int) -> int:
        return self.rows[x][z]

    def column_sums(self) -> list[int]:
        size = 2 ** self.n
        return [sum(row[z] for row in self.rows) for z in range(size)]


@dataclass(frozen=True)
class DjOutcome:
    detected: frozenset = frozenset()

    @property
    def is_constant(self) -> bool:
        return not self.detected

    @property
    def is_balanced(self) -> bool:
        return bool(self.detected)

    @staticmethod
    def constant() -> "DjOutcome":
        return DjOutcome()

    @staticmethod
    def balanced(states) -> "DjOutcome":
        states = frozenset(states)
        if not states or 0 in states:
            raise DataError("balanced outcome needs nonzero detected states")
        return DjOutcome(states)


@dataclass
class DjResult:
    outcome: DjOutcome
    matrix: PConvMatrix
    events: list = field(default_factory=list)


def decide(totals) -> DjOutcome:
    """Constant iff every column total is zero, else balanced on the nonzero ones."""
    nonzero = {z for z, t in enumerate(totals) if t != 0}
    if not nonzero:
        return DjOutcome.constant()
    return DjOutcome.balanced(nonzero)


def run_djbox(machine: MachineState, oracle: Oracle,
              binding: RegisterBinding = RegisterBinding()) -> DjResult:
    """Run the DJ circuit over all query states and classify the oracle.

    Loads the query register per state, evaluates the oracle, and leaves the
    register holding all zeros (constant) or all superposition markers
    (balanced). Main memory is never touched.
    """
    cfg = machine.config
    rows = []
    for x in range(cfg.qrsize):
        bits = [(x >> (cfg.qr - 1 - i)) & 1 for i in range(cfg.qr)]
        machine.load_query_register(bits)
        sup = hadamard_transform(bits)
        fval = oracle.evaluate(machine, bits, binding)
        if fval not in (0, 1) or isinstance(fval, bool):
            raise OracleContractError(
                f"oracle {oracle.name} returned {fval!r}, expected 0 or 1"
            )
        phase = answer_phase(fval)
        rows.append(tuple(phase * sup.sign(z) * z for z in range(cfg.qrsize)))

    matrix = PConvMatrix(cfg.qr, tuple(rows))
    outcome = decide(matrix.column_sums())
    events = []
    if outcome.is_constant:
        machine.load_query_register([0] * cfg.qr)
        events.append(CONSTANT_EVENT)
    else:
        labels = [
            "".join(str(b) for b in word)
            for word in convert_to_binary(sorted(outcome.detected))
        ]
        machine.load_query_register([SUPERPOSED] * cfg.qr)
        events.append(f"{BALANCED_EVENT} {' '.join(labels)}")
    return DjResult(outcome, matrix, events)


# -- machine-effectful oracles ---------------------------------------------


def oracle_f3() -> Oracle:
    """Compare two vector register cells, write 0/1 to V3 at the same cell.

    Binding operands are zero-origin register indices: r0 names the register
    whose Empty cell short-circuits, r1 the register compared against.
    The cell for query state x is x+1 (1-based). Always returns 1.
    """

    def evaluate(m: MachineState, bits, binding: RegisterBinding) -> int:
        cell = decimal(bits) + 1
        left = m.vr_get(binding.r0 + 1, cell)
        if left is None:
            return 1
        right = m.vr_get(binding.r1 + 1, cell)
        m.vr_set(3, cell, 0 if cells_equal(left, right) else 1)
        return 1

    return Oracle("F3", evaluate)


def reducer_oracle(name: str, fold: Callable[[list], float]) -> Oracle:
    """Fold the part staged in DJ register x+1, write the total to vr[r1][x+1].

    binding.r0 is the 1-based column of the length cell (the pipeline binds 1),
    binding.r1 the 1-based target vector register (the pipeline binds 3).
    Always returns 1; skips when the length cell is Empty.
    """

    def evaluate(m: MachineState, bits, binding: RegisterBinding) -> int:
        reg = decimal(bits) + 1
        count = m.djvr_get(reg, binding.r0)
        if count is None:
            return 1
        if not isinstance(count, int) or isinstance(count, bool) or count < 1:
            raise DataError(f"DJ register {reg} length cell is not a positive integer")
        values = []
        for i in range(1, count + 1):
            v = m.djvr_get(reg, 1 + i)
            if not is_number(v):
                raise DataError(f"DJ register {reg} cell {1 + i} is not numeric")
            values.append(v)
        m.vr_set(binding.r1, reg, fold(values))
        return 1

    return Oracle(name, evaluate)


def oracle_f2() -> Oracle:
    """The summing reducer oracle."""
    return reducer_oracle("F2", sum)


# -- pure test oracles ------------------------------------------------------


def _pure(name: str, fn: Callable[[int], int]) -> Oracle:
    def evaluate(m: MachineState, bits, binding: RegisterBinding) -> int:
        return fn(decimal(bits))

    return Oracle(name, evaluate)


def constant_zero() -> Oracle:
    return _pure("constant0", lambda x: 0)


def constant_one() -> Oracle:
    return _pure("constant1", lambda x: 1)


def balanced_mask(mask: int) -> Oracle:
    """f(x) = parity of popcount(x AND mask); balanced for any mask != 0."""
    if not isinstance(mask, int) or mask == 0:
        raise DataError("mask must be a nonzero integer")
    return _pure(f"mask:{mask}", lambda x: bin(x & mask).count("1") % 2)


def table_oracle(bits) -> Oracle:
    """Truth-table oracle with no promise check (table length must be a power of two)."""
    bits = list(bits)
    if not bits or len(bits) & (len(bits) - 1):
        raise DataError("table length must be a power of two")
    for b in bits:
        if b not in (0, 1):
            raise DataError("table entries must be bits")
    return _pure("table:" + "".join(str(b) for b in bits), lambda x: bits[x])


def balanced_table(bits) -> Oracle:
    """Truth-table oracle that must contain exactly half ones."""
    bits = list(bits)
    oracle = table_oracle(bits)
    if sum(bits) * 2 != len(bits):
        raise DataError("table is not balanced")
    return oracle
