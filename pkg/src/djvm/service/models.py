"""Pydantic request/response models for the service endpoints."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ErrorBody(BaseModel):
    category: str
    message: str


class MachineShowResponse(BaseModel):
    dump: str


class DjRequest(BaseModel):
    n: int = Field(default=3, description="query register width")
    oracle: str = Field(description="constant0 | constant1 | mask:M | table:BITS")
    show_matrix: bool = False


class DjResponse(BaseModel):
    outcome: str  # "constant" or "balanced"
    detected: list[str] = []  # binary labels, ascending
    promise_violated: bool = False
    matrix: list[list[int]] | None = None
    events: list[str] = []


class PartitionRequest(BaseModel):
    bins: list[str | int | float]
    qr: int = 3
    show_machine: bool = False
    ascii_mode: bool = False


class PartitionResponse(BaseModel):
    bits: list[int]
    parts: int
    dump: str | None = None


class ReduceRequest(BaseModel):
    values: list[int | float]
    bins: list[str | int | float] | None = None
    pv: list[int] | None = None
    op: str = "sum"
    qr: int = 3
    show_machine: bool = False
    ascii_mode: bool = False


class ReduceResponse(BaseModel):
    totals: list[int | float]
    dump: str | None = None


class DemoRequest(BaseModel):
    ascii_mode: bool = False
    corrupt: bool = False


class DemoResponse(BaseModel):
    ok: bool
    failures: list[str] = []
    totals: list[int | float] = []
    events: list[str] = []
    dump: str
