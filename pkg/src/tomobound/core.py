"""Domain types shared by the reconstruction, padding and oracle code.

Row and column indices are 1-based in every public function, with row 1 at
the top (matrix orientation). Internally, images are stored as 0-based
numpy boolean arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotMonotone, OutOfRange, SumMismatch

MAX_DIM = 10_000


def _non_increasing(seq: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class LineSums:
    """Target row sums ``rows`` (length m) and column sums ``cols`` (length n)."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __init__(self, rows: Iterable[int], cols: Iterable[int]):
        object.__setattr__(self, "rows", tuple(int(r) for r in rows))
        object.__setattr__(self, "cols", tuple(int(c) for c in cols))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.cols)

    @property
    def row_total(self) -> int:
        return sum(self.rows)

    @property
    def col_total(self) -> int:
        return sum(self.cols)

    @property
    def monotone(self) -> bool:
        return _non_increasing(self.rows) and _non_increasing(self.cols)

    def transpose(self) -> LineSums:
        return LineSums(self.cols, self.rows)


@dataclass(frozen=True)
class ConjugateProfile:
    """Conjugate vector ``b`` of the column sums and deficit ``d = b - rows``."""

    b: tuple[int, ...]
    d: tuple[int, ...]

    def b_at(self, i: int) -> int:
        """1-based access with the sentinel ``b[m+1] = 0``."""
        return self.b[i - 1] if 1 <= i <= len(self.b) else 0

    def d_at(self, i: int) -> int:
        return self.d[i - 1] if 1 <= i <= len(self.d) else 0


class BinaryImage:
    """Immutable m x n grid of zeros and ones.

    ``cells`` is a read-only boolean array indexed ``[i-1, j-1]``.
    """

    __slots__ = ("cells",)

    def __init__(self, cells):
        arr = np.array(cells, dtype=bool, copy=True)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d grid, got shape {arr.shape}")
        arr.setflags(write=False)
        self.cells = arr

    @classmethod
    def zeros(cls, m: int, n: int) -> BinaryImage:
        return cls(np.zeros((m, n), dtype=bool))

    @classmethod
    def from_ones(cls, m: int, n: int, ones: Iterable[tuple[int, int]]) -> BinaryImage:
        arr = np.zeros((m, n), dtype=bool)
        for i, j in ones:
            arr[i - 1, j - 1] = True
        return cls(arr)

    @property
    def m(self) -> int:
        return self.cells.shape[0]

    @property
    def n(self) -> int:
        return self.cells.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"cell ({i}, {j}) outside {self.m}x{self.n} image")
        return int(self.cells[i - 1, j - 1])

    def ones(self) -> list[tuple[int, int]]:
        """1-based coordinates of all ones, in row-major order."""
        return [(int(i) + 1, int(j) + 1) for i, j in np.argwhere(self.cells)]

    def column_ones(self, j: int) -> frozenset[int]:
        return frozenset(int(i) + 1 for i in np.flatnonzero(self.cells[:, j - 1]))

    def transpose(self) -> BinaryImage:
        return BinaryImage(self.cells.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return self.cells.shape == other.cells.shape and bool(np.array_equal(self.cells, other.cells))

    def __hash__(self) -> int:
        return hash((self.cells.shape, self.cells.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryImage({self.m}x{self.n}, ones={int(self.cells.sum())})"

    def __str__(self) -> str:
        return "\n".join("".join("#" if v else "." for v in row) for row in self.cells)


@dataclass(frozen=True)
class BoundaryReport:
    l_h: int
    l_v: int

    @property
    def total(self) -> int:
        return self.l_h + self.l_v


def require_monotone(line_sums: LineSums) -> LineSums:
    """Check shape, non-negativity and monotonicity, but not the upper range."""
    m, n = line_sums.m, line_sums.n
    if m < 1 or n < 1:
        raise OutOfRange(f"need at least one row and one column, got m={m}, n={n}")
    if m > MAX_DIM or n > MAX_DIM:
        raise OutOfRange(f"dimensions {m}x{n} exceed the limit of {MAX_DIM}")
    for name, seq in (("row", line_sums.rows), ("column", line_sums.cols)):
        if min(seq) < 0:
            raise OutOfRange(f"{name} sums must be non-negative, got {min(seq)}")
        for k in range(1, len(seq)):
            if seq[k] > seq[k - 1]:
                raise NotMonotone(
                    f"{name} sums increase at position {k + 1}: {seq[k - 1]} < {seq[k]}"
                )
    return line_sums


def validate(line_sums: LineSums) -> LineSums:
    """Check that ``line_sums`` is a usable monotone instance and return it.

    Zero sums are allowed. A mismatch between the row total and the column
    total is *not* an error here; consistency is decided separately.
    """
    require_monotone(line_sums)
    m, n = line_sums.m, line_sums.n
    for name, seq, cap in (("row", line_sums.rows, n), ("column", line_sums.cols, m)):
        for k, v in enumerate(seq, start=1):
            if v > cap:
                raise OutOfRange(f"{name} sum #{k} = {v} is outside [0, {cap}]")
    return line_sums


def conjugate(cols: Sequence[int], m: int) -> tuple[int, ...]:
    """``b[i] = #{j : cols[j] >= i}`` for i = 1..m (the transposed partition)."""
    hist = [0] * (m + 2)
    for c in cols:
        hist[min(max(c, 0), m + 1)] += 1
    b = [0] * m
    acc = hist[m + 1]
    for i in range(m, 0, -1):
        acc += hist[i]
        b[i - 1] = acc
    return tuple(b)


def profile(rows: Sequence[int], cols: Sequence[int]) -> ConjugateProfile:
    b = conjugate(cols, len(rows))
    return ConjugateProfile(b, tuple(bi - ri for bi, ri in zip(b, rows)))


def alpha(line_sums: LineSums) -> int:
    """Number of ones the construction has to move: sum of the positive deficits."""
    if line_sums.row_total != line_sums.col_total:
        raise SumMismatch(
            f"row total {line_sums.row_total} != column total {line_sums.col_total}"
        )
    return sum(d for d in profile(line_sums.rows, line_sums.cols).d if d > 0)


def boundary(image: BinaryImage) -> BoundaryReport:
    """Horizontal and vertical boundary lengths against an all-zero background.

    ``l_h`` counts differing pairs inside a column (vertically adjacent
    cells), ``l_v`` differing pairs inside a row.
    """
    a = np.pad(image.cells, 1).astype(np.int8)
    l_h = int(np.count_nonzero(np.diff(a, axis=0)))
    l_v = int(np.count_nonzero(np.diff(a, axis=1)))
    return BoundaryReport(l_h, l_v)


def margins(image: BinaryImage) -> LineSums:
    return LineSums(image.cells.sum(axis=1).tolist(), image.cells.sum(axis=0).tolist())
