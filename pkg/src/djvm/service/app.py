"""FastAPI service wrapping the simulator core."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..demo import run_demo
from ..djbox import (
    Oracle,
    balanced_mask,
    constant_one,
    constant_zero,
    run_djbox,
    table_oracle,
)
from ..errors import ConfigurationError, DataError, SimulatorError
from ..machine import define_machine
from ..partition import calc_with_partitions, get_partition, reduce_with_vector
from .models import (
    DemoRequest,
    DemoResponse,
    DjRequest,
    DjResponse,
    MachineShowResponse,
    PartitionRequest,
    PartitionResponse,
    ReduceRequest,
    ReduceResponse,
)

app = FastAPI(title="djvm", description="Vector machine with a Deutsch-Jozsa coprocessor")


@app.exception_handler(SimulatorError)
def simulator_error_handler(request, exc: SimulatorError):
    return JSONResponse(
        status_code=400,
        content={"category": exc.category, "message": str(exc)},
    )


def parse_oracle_spec(spec: str, n: int) -> tuple[Oracle, bool]:
    """Build an oracle from its CLI spelling.

    Returns (oracle, promise_violated): the flag is set for a table that is
    neither constant nor balanced, which the DJ guarantee does not cover.
    """
    if spec == "constant0":
        return constant_zero(), False
    if spec == "constant1":
        return constant_one(), False
    if spec.startswith("mask:"):
        try:
            mask = int(spec[5:])
        except ValueError:
            raise ConfigurationError(f"bad mask oracle spec: {spec!r}")
        if not 1 <= mask < 2 ** n:
            raise ConfigurationError(f"mask must be in 1..{2 ** n - 1}, got {mask}")
        return balanced_mask(mask), False
    if spec.startswith("table:"):
        word = spec[6:]
        if len(word) != 2 ** n or any(c not in "01" for c in word):
            raise ConfigurationError(
                f"table must be {2 ** n} bits of 0/1, got {word!r}"
            )
        bits = [int(c) for c in word]
        ones = sum(bits)
        violated = ones not in (0, len(bits), len(bits) // 2)
        return table_oracle(bits), violated
    raise ConfigurationError(f"unknown oracle spec: {spec!r}")


@app.get("/machine", response_model=MachineShowResponse)
def machine_show(qr: int = 3, ascii_mode: bool = False):
    machine = define_machine(qr)
    return MachineShowResponse(dump=machine.render(ascii_mode=ascii_mode))


@app.post("/dj", response_model=DjResponse)
def dj(req: DjRequest):
    oracle, violated = parse_oracle_spec(req.oracle, req.n)
    machine = define_machine(req.n)
    result = run_djbox(machine, oracle)
    detected = [
        format(z, f"0{req.n}b") for z in sorted(result.outcome.detected)
    ]
    return DjResponse(
        outcome="constant" if result.outcome.is_constant else "balanced",
        detected=detected,
        promise_violated=violated,
        matrix=[list(row) for row in result.matrix.rows] if req.show_matrix else None,
        events=result.events,
    )


def _coerce_bins(raw) -> list:
    # JSON has no single-character type; accept strings and numbers as-is
    bins = []
    for b in raw:
        if isinstance(b, float) and b.is_integer():
            b = int(b)
        bins.append(b)
    return bins


@app.post("/partition", response_model=PartitionResponse)
def partition(req: PartitionRequest):
    machine = define_machine(req.qr)
    bits = get_partition(machine, _coerce_bins(req.bins))
    return PartitionResponse(
        bits=bits,
        parts=sum(bits),
        dump=machine.render(ascii_mode=req.ascii_mode) if req.show_machine else None,
    )


@app.post("/reduce", response_model=ReduceResponse)
def reduce_(req: ReduceRequest):
    machine = define_machine(req.qr)
    if req.pv is not None:
        result = reduce_with_vector(machine, req.values, req.pv, req.op)
    elif req.bins is not None:
        if len(req.bins) != len(req.values):
            raise DataError("bins and values differ in length")
        rows = list(zip(_coerce_bins(req.bins), req.values))
        result = calc_with_partitions(machine, rows, req.op)
    else:
        raise DataError("either bins or an explicit partition vector is required")
    return ReduceResponse(
        totals=result.totals,
        dump=machine.render(ascii_mode=req.ascii_mode) if req.show_machine else None,
    )


@app.post("/demo", response_model=DemoResponse)
def demo(req: DemoRequest):
    result = run_demo(ascii_mode=req.ascii_mode, corrupt=req.corrupt)
    return DemoResponse(
        ok=result.ok,
        failures=result.failures,
        totals=result.totals,
        events=result.events,
        dump=result.dump,
    )
