"""Vector machine state: main memory, vector registers, DJ registers.

Memory cells hold exactly one of: Empty (None), a number (int/float), or a
single-character symbol. Addressing is 1-based everywhere in the public
surface; internal lists are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapacityError, ConfigurationError, DataError

Cell = None | int | float | str

EMPTY: Cell = None
SUPERPOSED = "⊗"  # query-register marker for a balanced outcome

MAX_QR = 6  # keeps DJ register width (2*qrsize) and dump lines bounded


def is_number(c: Cell) -> bool:
    return isinstance(c, (int, float)) and not isinstance(c, bool)


def is_symbol(c: Cell) -> bool:
    return isinstance(c, str)


def cells_equal(a: Cell, b: Cell) -> bool:
    """Numbers compare by value, symbols by character; Empty or mixed tags never match."""
    if is_number(a) and is_number(b):
        return a == b
    if is_symbol(a) and is_symbol(b):
        return a == b
    return False


def check_cell(value) -> Cell:
    if value is None or is_number(value):
        return value
    if isinstance(value, str):
        if len(value) != 1:
            raise DataError(f"symbol cells hold a single character, got {value!r}")
        return value
    raise DataError(f"not a valid cell value: {value!r}")


def render_cell(c: Cell, ascii_mode: bool = False) -> str:
    if c is None:
        return "."
    if c == SUPERPOSED:
        return "@" if ascii_mode else SUPERPOSED
    if isinstance(c, float):
        return format(c, "g")
    return str(c)


@dataclass(frozen=True)
class MachineConfig:
    qr: int
    mm_size: int = 100

    def __post_init__(self):
        if not isinstance(self.qr, int) or not 1 <= self.qr <= MAX_QR:
            raise ConfigurationError(f"query register width must be in 1..{MAX_QR}, got {self.qr}")
        if self.mm_size < 100:
            raise ConfigurationError("main memory size must be at least 100")

    @property
    def qrsize(self) -> int:
        return 2 ** self.qr

    @property
    def ss(self) -> int:
        """Section size: the length of each vector register."""
        return self.qrsize

    @property
    def pss(self) -> int:
        """Partition section size: parts staged per DJ round."""
        return self.qr


@dataclass
class MachineState:
    config: MachineConfig
    mm: list = field(default_factory=list)
    vr: list = field(default_factory=list)
    djq: list = field(default_factory=list)
    djvr: list = field(default_factory=list)
    vct: int = 0
    pvct: int = 0

    # -- accessors ---------------------------------------------------------

    def _mm_index(self, addr: int) -> int:
        if not isinstance(addr, int) or not 1 <= addr <= self.config.mm_size:
            raise DataError(f"memory address out of range: {addr}")
        return addr - 1

    def mm_get(self, addr: int) -> Cell:
        return self.mm[self._mm_index(addr)]

    def mm_set(self, addr: int, value) -> None:
        self.mm[self._mm_index(addr)] = check_cell(value)

    def _mm_number(self, addr: int) -> int:
        v = self.mm_get(addr)
        if not is_number(v):
            raise DataError(f"memory cell {addr} does not hold a number: {v!r}")
        return v

    def _check_vreg(self, v: int) -> int:
        if not isinstance(v, int) or not 1 <= v <= 5:
            raise DataError(f"vector register number out of range: {v}")
        return v

    def vr_get(self, v: int, cell: int) -> Cell:
        row = self.vr[self._check_vreg(v) - 1]
        if not 1 <= cell <= self.config.ss:
            raise DataError(f"vector register cell out of range: {cell}")
        return row[cell - 1]

    def vr_set(self, v: int, cell: int, value) -> None:
        row = self.vr[self._check_vreg(v) - 1]
        if not 1 <= cell <= self.config.ss:
            raise DataError(f"vector register cell out of range: {cell}")
        row[cell - 1] = check_cell(value)

    def djvr_get(self, reg: int, cell: int) -> Cell:
        if not 1 <= reg <= self.config.qrsize:
            raise DataError(f"DJ vector register number out of range: {reg}")
        row = self.djvr[reg - 1]
        if not 1 <= cell <= 2 * self.config.qrsize:
            raise DataError(f"DJ vector register cell out of range: {cell}")
        return row[cell - 1]

    def djvr_set(self, reg: int, cell: int, value) -> None:
        if not 1 <= reg <= self.config.qrsize:
            raise DataError(f"DJ vector register number out of range: {reg}")
        row = self.djvr[reg - 1]
        if not 1 <= cell <= 2 * self.config.qrsize:
            raise DataError(f"DJ vector register cell out of range: {cell}")
        row[cell - 1] = check_cell(value)

    # -- memory operations ---------------------------------------------------

    def set_memory(self, addr: int, values) -> None:
        """Write ``values`` to consecutive cells starting at ``addr``."""
        values = [check_cell(v) for v in values]
        i = self._mm_index(addr)
        if addr + len(values) - 1 > self.config.mm_size:
            raise CapacityError(
                f"write of {len(values)} cells at {addr} exceeds memory size {self.config.mm_size}"
            )
        self.mm[i:i + len(values)] = values

    def clear_memory(self, start: int, end: int) -> None:
        s, e = self._mm_index(start), self._mm_index(end)
        if s > e:
            raise DataError(f"bad clear range: {start}..{end}")
        for i in range(s, e + 1):
            self.mm[i] = EMPTY

    # -- counter loads ---------------------------------------------------------

    def load_vct(self, addr: int) -> None:
        """vct <- min(ss, mm[addr]); drain that amount from the count cell."""
        count = self._mm_number(addr)
        if count < 0:
            raise DataError(f"negative count at address {addr}")
        self.vct = min(self.config.ss, count)
        self.mm_set(addr, count - self.vct)

    def load_pvct(self, addr: int) -> None:
        """pvct <- mm[addr]; zero the cell."""
        self.pvct = self._mm_number(addr)
        self.mm_set(addr, 0)

    def load_lpvct(self, addr: int) -> None:
        """pvct <- min(pss, mm[addr]); drain that amount from the count cell."""
        count = self._mm_number(addr)
        if count < 0:
            raise DataError(f"negative count at address {addr}")
        self.pvct = min(self.config.pss, count)
        self.mm_set(addr, count - self.pvct)

    # -- strided vector transfer --------------------------------------------

    def _strided_addresses(self, ptr_addr: int, stride: int, count: int) -> list[int]:
        if not isinstance(stride, int) or stride < 1:
            raise DataError(f"stride must be a positive integer, got {stride}")
        base = self._mm_number(ptr_addr)
        addrs = [base + stride * i for i in range(count)]
        if addrs and (addrs[0] < 1 or addrs[-1] > self.config.mm_size):
            raise CapacityError(
                f"strided access {addrs[0]}..{addrs[-1]} out of memory bounds"
            )
        return addrs

    def load_vector(self, v: int, ptr_addr: int, stride: int) -> None:
        """Fill the first vct cells of register v from memory; advance the pointer.

        Cells past vct keep their previous (stale) contents.
        """
        self._check_vreg(v)
        addrs = self._strided_addresses(ptr_addr, stride, self.vct)
        for i, a in enumerate(addrs, start=1):
            self.vr_set(v, i, self.mm_get(a))
        self.mm_set(ptr_addr, self._mm_number(ptr_addr) + self.vct)

    def store_vector(self, v: int, ptr_addr: int, stride: int) -> None:
        """Store the first vct cells of register v to memory; advance the pointer."""
        self._check_vreg(v)
        addrs = self._strided_addresses(ptr_addr, stride, self.vct)
        for i, a in enumerate(addrs, start=1):
            self.mm_set(a, self.vr_get(v, i))
        self.mm_set(ptr_addr, self._mm_number(ptr_addr) + self.vct)

    def pstore_vector(self, v: int, ptr_addr: int, stride: int) -> None:
        """Like store_vector but transfers pvct cells (per-partition results)."""
        self._check_vreg(v)
        addrs = self._strided_addresses(ptr_addr, stride, self.pvct)
        for i, a in enumerate(addrs, start=1):
            self.mm_set(a, self.vr_get(v, i))
        self.mm_set(ptr_addr, self._mm_number(ptr_addr) + self.pvct)

    # -- DJ registers ----------------------------------------------------------

    def load_query_register(self, values) -> None:
        values = list(values)
        if len(values) > self.config.qr:
            raise CapacityError(
                f"query register holds {self.config.qr} cells, got {len(values)}"
            )
        for v in values:
            if v not in (0, 1, SUPERPOSED):
                raise DataError(f"query register cells hold 0, 1 or {SUPERPOSED}: {v!r}")
        for i, v in enumerate(values):
            self.djq[i] = v

    def load_partitions_into_djvr(self, parts, lengths) -> None:
        """Stage parts into DJ vector registers: length cell then elements."""
        parts = [list(p) for p in parts]
        lengths = list(lengths)
        if len(parts) != len(lengths):
            raise DataError("parts and lengths differ in count")
        if len(parts) > self.config.qrsize:
            raise CapacityError(
                f"at most {self.config.qrsize} parts fit in the DJ vector registers"
            )
        for part, ln in zip(parts, lengths):
            if ln != len(part) or ln < 1:
                raise DataError("each length must match its part and be positive")
            if ln > 2 * self.config.qrsize - 1:
                raise CapacityError(
                    f"part of length {ln} exceeds DJ register capacity "
                    f"{2 * self.config.qrsize - 1}"
                )
        for i, (part, ln) in enumerate(zip(parts, lengths), start=1):
            self.djvr_set(i, 1, ln)
            for j, value in enumerate(part, start=2):
                self.djvr_set(i, j, value)

    # -- rendering ----------------------------------------------------------

    def render(self, ascii_mode: bool = False) -> str:
        cfg = self.config
        lines = [f"MAIN MEMORY  VCT={self.vct} PVCT={self.pvct}"]
        for row_start in range(0, cfg.mm_size, 25):
            cells = self.mm[row_start:row_start + 25]
            body = " ".join(render_cell(c, ascii_mode) for c in cells)
            lines.append(f"{row_start + 1:>3} : {body}")
        lines.append("")
        lines.append("VECTOR REGISTERS")
        for i, row in enumerate(self.vr, start=1):
            lines.append(f"V{i} : " + " ".join(render_cell(c, ascii_mode) for c in row))
        lines.append("")
        lines.append("DJ QUERY REGISTER")
        lines.append("Q1 : " + " ".join(render_cell(c, ascii_mode) for c in self.djq))
        lines.append("")
        lines.append("DJ VECTOR REGISTERS")
        for i, row in enumerate(self.djvr, start=1):
            lines.append(f"V{i} : " + " ".join(render_cell(c, ascii_mode) for c in row))
        return "\n".join(lines) + "\n"


def define_machine(qr: int, mm_size: int = 100) -> MachineState:
    """Fresh machine: all cells Empty, both counters zero."""
    cfg = MachineConfig(qr=qr, mm_size=mm_size)
    return MachineState(
        config=cfg,
        mm=[EMPTY] * cfg.mm_size,
        vr=[[EMPTY] * cfg.ss for _ in range(5)],
        djq=[EMPTY] * cfg.qr,
        djvr=[[EMPTY] * (2 * cfg.qrsize) for _ in range(cfg.qrsize)],
    )
