"""Dense (0,1)-matrices with bit-packed rows.

Each row is stored as one arbitrary-precision Python int whose bit j holds
column j, so popcounts, row masking and window extraction are single int
operations. Bits at or above ``cols`` are always zero; the constructor
enforces this so ``int.bit_count`` totals are exact.

Indexing is 0-based everywhere in this package. Anything user-facing
(CLI output, error messages, JSON reports) converts to 1-based at the edge.
Instances are frozen and hashable, hence safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

MAX_SIDE = 1 << 16


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed."""


class Position(NamedTuple):
    """A (row, col) coordinate, 0-based."""

    row: int
    col: int


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (1 <= self.rows <= MAX_SIDE and 1 <= self.cols <= MAX_SIDE):
            raise ValueError(
                f"dimensions must be within [1, {MAX_SIDE}] per side, got {self.rows}x{self.cols}"
            )
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} packed rows, got {len(self.bits)}")
        limit = 1 << self.cols
        for i, row in enumerate(self.bits):
            if not 0 <= row < limit:
                raise ValueError(f"row {i + 1} has bits outside the declared {self.cols} columns")

    # -- entry access ----------------------------------------------------

    def get(self, i: int, j: int) -> int:
        """Entry at (i, j) as 0 or 1."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"position ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return (self.bits[i] >> j) & 1

    def ones_count(self) -> int:
        return sum(row.bit_count() for row in self.bits)

    def zeros_count(self) -> int:
        return self.rows * self.cols - self.ones_count()

    def iter_ones(self) -> Iterator[Position]:
        """Positions of 1-entries in row-major order."""
        for i, row in enumerate(self.bits):
            while row:
                low = row & -row
                yield Position(i, low.bit_length() - 1)
                row ^= low

    # -- shape transforms ------------------------------------------------

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, row in enumerate(self.bits):
            while row:
                low = row & -row
                out[low.bit_length() - 1] |= 1 << i
                row ^= low
        return BitMatrix(self.cols, self.rows, tuple(out))

    def reflect_h(self) -> "BitMatrix":
        """Reverse the row order: entry (i, j) moves to (rows-1-i, j)."""
        return BitMatrix(self.rows, self.cols, tuple(reversed(self.bits)))

    def reflect_v(self) -> "BitMatrix":
        """Reverse the column order: entry (i, j) moves to (i, cols-1-j)."""
        n = self.cols
        out = []
        for row in self.bits:
            rev = 0
            while row:
                low = row & -row
                rev |= 1 << (n - low.bit_length())
                row ^= low
            out.append(rev)
        return BitMatrix(self.rows, n, tuple(out))

    # -- selection -------------------------------------------------------

    def submatrix(self, row_sel: Sequence[int], col_sel: Sequence[int]) -> "BitMatrix":
        """Submatrix on strictly increasing row and column selections."""
        _check_selection(row_sel, self.rows, "row")
        _check_selection(col_sel, self.cols, "column")
        out = []
        for i in row_sel:
            src = self.bits[i]
            packed = 0
            for x, j in enumerate(col_sel):
                packed |= ((src >> j) & 1) << x
            out.append(packed)
        return BitMatrix(len(row_sel), len(col_sel), tuple(out))

    def window(self, r0: int, c0: int, height: int, width: int) -> "BitMatrix":
        """Contiguous height x width block with upper-left corner (r0, c0)."""
        if height < 1 or width < 1:
            raise ValueError("window dimensions must be positive")
        if not (0 <= r0 <= self.rows - height and 0 <= c0 <= self.cols - width):
            raise ValueError(
                f"window {height}x{width} at ({r0 + 1}, {c0 + 1}) exceeds "
                f"the {self.rows}x{self.cols} matrix"
            )
        mask = (1 << width) - 1
        return BitMatrix(
            height, width, tuple((self.bits[r0 + y] >> c0) & mask for y in range(height))
        )

    def __str__(self) -> str:
        return "\n".join(_row_text(row, self.cols) for row in self.bits)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, {'/'.join(_row_text(r, self.cols) for r in self.bits)})"


def _check_selection(sel: Sequence[int], bound: int, what: str) -> None:
    if len(sel) == 0:
        raise ValueError(f"{what} selection is empty")
    prev = -1
    for v in sel:
        if v <= prev or v >= bound:
            raise ValueError(
                f"{what} selection must be strictly increasing within [1, {bound}]"
            )
        prev = v


def _row_text(row: int, cols: int) -> str:
    return "".join("1" if (row >> j) & 1 else "0" for j in range(cols))


# -- constructors ----------------------------------------------------------


def make(rows: int, cols: int, fill: int = 0) -> BitMatrix:
    """Constant matrix filled with 0s or 1s."""
    if fill not in (0, 1):
        raise ValueError("fill must be 0 or 1")
    row = (1 << cols) - 1 if fill else 0
    return BitMatrix(rows, cols, (row,) * rows)


def identity(k: int) -> BitMatrix:
    """k x k matrix with 1s on the main diagonal."""
    return BitMatrix(k, k, tuple(1 << i for i in range(k)))


def hankel(k: int) -> BitMatrix:
    """k x k matrix with 1s on the anti-diagonal."""
    return BitMatrix(k, k, tuple(1 << (k - 1 - i) for i in range(k)))


def direct_sum(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Block-diagonal stack: a in the upper left, b in the lower right."""
    rows = list(a.bits) + [row << a.cols for row in b.bits]
    return BitMatrix(a.rows + b.rows, a.cols + b.cols, tuple(rows))


def entrywise_leq(a: BitMatrix, b: BitMatrix) -> bool:
    """True when every 1-entry of a is also a 1-entry of b (same shape)."""
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(
            f"shape mismatch: {a.rows}x{a.cols} versus {b.rows}x{b.cols}"
        )
    return all(ra & ~rb == 0 for ra, rb in zip(a.bits, b.bits))


# -- text format -----------------------------------------------------------
#
# One matrix row per line as a string of '0'/'1' characters, optionally
# preceded by a header line "rows cols". serialize always emits the header;
# parse accepts either form.


def parse(text: str) -> BitMatrix:
    lines = text.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty matrix text")

    declared: tuple[int, int] | None = None
    if " " in lines[0]:
        parts = lines[0].split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MatrixFormatError(f"malformed header line {lines[0]!r}, expected 'rows cols'")
        declared = (int(parts[0]), int(parts[1]))
        if declared[0] < 1 or declared[1] < 1:
            raise MatrixFormatError("header dimensions must be positive")
        lines = lines[1:]
        if not lines:
            raise MatrixFormatError("header present but no matrix rows follow")

    width = len(lines[0])
    packed = []
    for k, line in enumerate(lines):
        if len(line) != width:
            raise MatrixFormatError(f"row {k + 1} has {len(line)} columns, expected {width}")
        row = 0
        for j, ch in enumerate(line):
            if ch == "1":
                row |= 1 << j
            elif ch != "0":
                raise MatrixFormatError(f"row {k + 1} column {j + 1}: invalid character {ch!r}")
        packed.append(row)

    if declared is not None and declared != (len(packed), width):
        raise MatrixFormatError(
            f"header declares {declared[0]}x{declared[1]} but body is {len(packed)}x{width}"
        )
    return BitMatrix(len(packed), width, tuple(packed))


def serialize(mat: BitMatrix) -> str:
    body = "\n".join(_row_text(row, mat.cols) for row in mat.bits)
    return f"{mat.rows} {mat.cols}\n{body}\n"
