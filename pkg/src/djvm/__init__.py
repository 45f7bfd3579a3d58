"""Deterministic vector-machine simulator with a Deutsch-Jozsa coprocessor."""

from .djbox import DjOutcome, Oracle, PConvMatrix, RegisterBinding, run_djbox
from .machine import MachineConfig, MachineState, define_machine
from .partition import (
    calc_with_partitions,
    classical_partition_oracle,
    classical_segmented_reduce,
    get_partition,
)
from .quantum import (
    apply_h_gate,
    answer_phase,
    convert_to_binary,
    define_h_gate,
    hadamard_transform,
    tensor_extend,
)

__all__ = [
    "DjOutcome",
    "MachineConfig",
    "MachineState",
    "Oracle",
    "PConvMatrix",
    "RegisterBinding",
    "answer_phase",
    "apply_h_gate",
    "calc_with_partitions",
    "classical_partition_oracle",
    "classical_segmented_reduce",
    "convert_to_binary",
    "define_h_gate",
    "define_machine",
    "get_partition",
    "hadamard_transform",
    "run_djbox",
    "tensor_extend",
]
