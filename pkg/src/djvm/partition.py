"""Partition-vector pipelines: derive part boundaries with the DJ machinery
(F3), split a data column, and reduce each part with a DJ reducer round (F2).

The memory script is fixed: bins at 26, rotated bins at 51 (phase 1), data
at 26 and per-part results at 51 (phase 2), partition vector at 76, counts
and pointers in cells 2..7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .djbox import RegisterBinding, oracle_f3, reducer_oracle, run_djbox
from .errors import CapacityError, DataError
from .machine import MachineState, is_number, is_symbol

MAX_DATA_LEN = 25  # the 26-50 / 51-75 / 76-100 memory windows

REDUCERS = {
    "sum": sum,
    "product": math.prod,
    "min": min,
    "max": max,
    "count": len,
}


@dataclass
class PartitionedData:
    parts: list
    lengths: list


@dataclass
class ReduceResult:
    totals: list
    partition_bits: list
    events: list


def _check_bins(bins) -> list:
    bins = list(bins)
    if not bins:
        raise DataError("bins must be non-empty")
    if len(bins) > MAX_DATA_LEN:
        raise CapacityError(f"at most {MAX_DATA_LEN} rows fit the memory layout")
    if all(is_symbol(b) and len(b) == 1 for b in bins):
        return bins
    if all(is_number(b) for b in bins):
        return bins
    raise DataError("bins must be all single-character symbols or all numbers")


def _check_sorted(bins) -> None:
    # equal bins must be adjacent (caller pre-sorts)
    seen = []
    for b in bins:
        if not seen or b != seen[-1]:
            if b in seen:
                raise DataError("equal bins must be adjacent (input not sorted)")
            seen.append(b)


def classical_partition_oracle(bins) -> list[int]:
    """Run-boundary oracle: 1 where a bin differs from its predecessor."""
    bins = list(bins)
    if not bins:
        raise DataError("bins must be non-empty")
    bits = [1]
    for prev, cur in zip(bins, bins[1:]):
        bits.append(0 if cur == prev else 1)
    return bits


def classical_segmented_reduce(values, pv, reducer) -> list:
    """Apply ``reducer`` to each maximal run delimited by the partition vector."""
    values = list(values)
    pv = list(pv)
    if len(values) != len(pv):
        raise DataError("values and partition vector differ in length")
    if not pv or pv[0] != 1 or any(b not in (0, 1) for b in pv):
        raise DataError("partition vector must be 0/1 bits starting with 1")
    fold = REDUCERS[reducer] if isinstance(reducer, str) else reducer
    out = []
    part = []
    for v, b in zip(values, pv):
        if b == 1 and part:
            out.append(fold(part))
            part = []
        part.append(v)
    out.append(fold(part))
    return out


def _partition_phase(machine: MachineState, bins) -> list[str]:
    """Phase 1 memory script; leaves the partition vector at 76 and its
    1-count in pvct and at cell 5. Returns the DJ event lines."""
    length = len(bins)
    rotated = [bins[-1]] + bins[:-1]
    machine.set_memory(26, bins)
    machine.set_memory(51, rotated)
    machine.set_memory(2, [length])
    machine.set_memory(3, [26])
    machine.set_memory(4, [51])
    machine.set_memory(5, [length])
    machine.set_memory(6, [76])
    machine.load_pvct(5)
    events = []
    while True:
        machine.load_vct(2)
        if machine.vct == 0:
            break
        machine.load_vector(1, 3, 1)
        machine.load_vector(2, 4, 1)
        result = run_djbox(machine, oracle_f3(), RegisterBinding(r1=1, r0=0))
        events.extend(result.events)
        machine.store_vector(3, 6, 1)
    # The rotate trick compares element 1 with element L, which yields 0 when
    # they are equal; a partition vector's first bit is 1 by definition.
    if machine.mm_get(76) == 0:
        machine.mm_set(76, 1)
    count_partitions(machine, 6, 1)
    machine.set_memory(5, [machine.pvct])
    return events


def get_partition(machine: MachineState, bins) -> list[int]:
    """Compute the partition vector of a bins column via the F3 DJ rounds."""
    bins = _check_bins(bins)
    _partition_phase(machine, bins)
    return [machine.mm_get(76 + i) for i in range(len(bins))]


def count_partitions(machine: MachineState, ptr_addr: int, stride: int) -> None:
    """pvct <- number of 1s in the stored partition vector.

    The pointer at ``ptr_addr`` sits one past the vector (advanced by the
    store loop); pvct still holds the consumed length, so the base is
    mm[ptr_addr] - pvct. The count is the maximum of the running bit sum.
    """
    base = machine._mm_number(ptr_addr) - machine.pvct
    total = 0
    best = 0
    for i in range(machine.pvct):
        bit = machine.mm_get(base + stride * i)
        if bit not in (0, 1):
            raise DataError(f"partition vector cell at {base + stride * i} is not a bit")
        total += bit
        best = max(best, total)
    machine.pvct = best


def calc_partitions(machine: MachineState, len_addr: int, data_addr: int,
                    pv_addr: int, stride: int) -> PartitionedData:
    """Split the data column by the stored partition vector; no pointers move."""
    length = machine._mm_number(len_addr)
    data_base = machine._mm_number(data_addr)
    pv_base = machine._mm_number(pv_addr)
    data = [machine.mm_get(data_base + stride * i) for i in range(length)]
    pv = [machine.mm_get(pv_base + stride * i) for i in range(length)]
    if any(b not in (0, 1) for b in pv):
        raise DataError("partition vector contains non-bit cells")
    parts = []
    lengths = []
    current = []
    for v, b in zip(data, pv):
        if b == 1 and current:
            parts.append(current)
            lengths.append(len(current))
            current = []
        current.append(v)
    if current:
        parts.append(current)
        lengths.append(len(current))
    return PartitionedData(parts, lengths)


def prepare_t_partitions(lp: int, parts, lengths, pss: int):
    """Window of at most ``pss`` parts for round ``lp`` (0-based)."""
    if lp < 0:
        raise DataError("round counter must be non-negative")
    lo = lp * pss
    return list(parts[lo:lo + pss]), list(lengths[lo:lo + pss])


def calc_with_partitions(machine: MachineState, rows, reducer) -> ReduceResult:
    """Full pipeline: partition by bins (F3 rounds), then reduce each part
    (F2-style rounds). Results land at memory address 51 and are returned."""
    rows = list(rows)
    bins = _check_bins([b for b, _ in rows])
    values = [v for _, v in rows]
    if any(not is_number(v) for v in values):
        raise DataError("data values must be numeric")
    _check_sorted(bins)
    fold = REDUCERS.get(reducer) if isinstance(reducer, str) else reducer
    if fold is None:
        raise DataError(f"unknown reducer: {reducer!r}")

    events = _partition_phase(machine, bins)
    length = len(rows)
    pv = [machine.mm_get(76 + i) for i in range(length)]

    machine.set_memory(26, values)
    machine.set_memory(2, [length])
    machine.set_memory(3, [26])
    machine.set_memory(4, [76])
    machine.set_memory(7, [51])
    partitioned = calc_partitions(machine, 2, 3, 4, 1)
    events.extend(_reduce_rounds(machine, partitioned, fold, str(reducer)))

    totals = [machine.mm_get(51 + i) for i in range(len(partitioned.parts))]
    return ReduceResult(totals, pv, events)


def reduce_with_vector(machine: MachineState, values, pv, reducer) -> ReduceResult:
    """Phase 2 only, with an explicitly supplied partition vector."""
    values = list(values)
    pv = list(pv)
    if len(values) != len(pv):
        raise DataError("values and partition vector differ in length")
    if not pv or pv[0] != 1 or any(b not in (0, 1) for b in pv):
        raise DataError("partition vector must be 0/1 bits starting with 1")
    if len(values) > MAX_DATA_LEN:
        raise CapacityError(f"at most {MAX_DATA_LEN} rows fit the memory layout")
    if any(not is_number(v) for v in values):
        raise DataError("data values must be numeric")
    fold = REDUCERS.get(reducer) if isinstance(reducer, str) else reducer
    if fold is None:
        raise DataError(f"unknown reducer: {reducer!r}")

    length = len(values)
    machine.set_memory(26, values)
    machine.set_memory(76, pv)
    machine.set_memory(2, [length])
    machine.set_memory(3, [26])
    machine.set_memory(4, [76])
    machine.set_memory(5, [sum(pv)])
    machine.set_memory(7, [51])
    partitioned = calc_partitions(machine, 2, 3, 4, 1)
    events = _reduce_rounds(machine, partitioned, fold, str(reducer))
    totals = [machine.mm_get(51 + i) for i in range(len(partitioned.parts))]
    return ReduceResult(totals, pv, events)


def _reduce_rounds(machine: MachineState, partitioned: PartitionedData,
                   fold, name: str) -> list[str]:
    """The strip-mined F2 loop: stage at most pss parts per DJ round."""
    events = []
    lp = 0
    oracle = reducer_oracle(name, fold)
    while True:
        machine.load_lpvct(5)
        if machine.pvct == 0:
            break
        sub_parts, sub_lengths = prepare_t_partitions(
            lp, partitioned.parts, partitioned.lengths, machine.config.pss
        )
        machine.load_partitions_into_djvr(sub_parts, sub_lengths)
        result = run_djbox(machine, oracle, RegisterBinding(r1=3, r0=1))
        events.extend(result.events)
        machine.pstore_vector(3, 7, 1)
        lp += 1
    return events
