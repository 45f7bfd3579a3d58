"""Built-in worked example: 10 rows binned A/B/C, summed per part, with a
self-check of the expected end-of-run machine state."""

from __future__ import annotations

from dataclasses import dataclass

from .djbox import CONSTANT_EVENT
from .machine import define_machine
from .partition import calc_with_partitions

DEMO_ROWS = [
    ("A", 100), ("A", 100), ("A", 20), ("A", 400),
    ("B", 30), ("B", 200), ("B", 300),
    ("C", 100), ("C", 100), ("C", 100),
]

EXPECTED_TOTALS = [620, 530, 300]
EXPECTED_MM_2_7 = [10, 26, 76, 0, 86, 54]
EXPECTED_PV = [1, 0, 0, 0, 1, 0, 0, 1, 0, 0]
EXPECTED_V3 = [620, 530, 300, 0, 1, 0, 0, 1]
EXPECTED_DJVR = [
    [4, 100, 100, 20, 400],
    [3, 30, 200, 300],
    [3, 100, 100, 100],
]
EXPECTED_CONSTANT_EVENTS = 3


@dataclass
class DemoResult:
    ok: bool
    failures: list
    dump: str
    totals: list
    events: list


def run_demo(ascii_mode: bool = False, corrupt: bool = False) -> DemoResult:
    """Run the pipeline on the built-in dataset and verify the final state.

    ``corrupt`` deliberately breaks one expectation so the self-check wiring
    itself can be exercised.
    """
    machine = define_machine(3)
    result = calc_with_partitions(machine, DEMO_ROWS, "sum")

    expected_totals = list(EXPECTED_TOTALS)
    if corrupt:
        expected_totals[0] += 1

    failures = []

    def check(label, actual, expected):
        if actual != expected:
            failures.append(f"{label}: expected {expected}, got {actual}")

    check("totals", result.totals, expected_totals)
    check("mm[51..53]", [machine.mm_get(a) for a in range(51, 54)], expected_totals)
    check("mm[2..7]", [machine.mm_get(a) for a in range(2, 8)], EXPECTED_MM_2_7)
    check("mm[76..85]", [machine.mm_get(a) for a in range(76, 86)], EXPECTED_PV)
    check("V3", [machine.vr_get(3, i) for i in range(1, 9)], EXPECTED_V3)
    for reg, expected in enumerate(EXPECTED_DJVR, start=1):
        actual = [machine.djvr_get(reg, i) for i in range(1, len(expected) + 1)]
        check(f"DJ register {reg}", actual, expected)
    check(
        "constant events",
        sum(1 for e in result.events if e == CONSTANT_EVENT),
        EXPECTED_CONSTANT_EVENTS,
    )

    return DemoResult(
        ok=not failures,
        failures=failures,
        dump=machine.render(ascii_mode=ascii_mode),
        totals=result.totals,
        events=result.events,
    )
