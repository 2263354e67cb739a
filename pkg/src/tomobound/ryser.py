"""Consistency of monotone line sums and the column-prefix image F1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import BinaryImage, LineSums, conjugate, require_monotone, validate


@dataclass(frozen=True)
class Consistency:
    """Verdict of :func:`is_consistent`.

    On failure exactly one of ``prefix`` (first k whose prefix sum of the
    conjugate falls short of the row prefix sum) or ``sum_mismatch`` is set.
    """

    consistent: bool
    prefix: Optional[int] = None
    sum_mismatch: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.consistent

    @property
    def reason(self) -> str:
        if self.consistent:
            return "consistent"
        if self.sum_mismatch is not None:
            r, c = self.sum_mismatch
            return f"row total {r} != column total {c}"
        return f"prefix condition fails at k={self.prefix}"


def is_consistent(line_sums: LineSums) -> Consistency:
    """Ryser's prefix test; sums larger than the opposite dimension simply fail it."""
    require_monotone(line_sums)
    if line_sums.row_total != line_sums.col_total:
        return Consistency(False, sum_mismatch=(line_sums.row_total, line_sums.col_total))
    b = conjugate(line_sums.cols, line_sums.m)
    pb = pr = 0
    for k, (bi, ri) in enumerate(zip(b, line_sums.rows), start=1):
        pb += bi
        pr += ri
        if pb < pr:
            return Consistency(False, prefix=k)
    return Consistency(True)


def canonical_neighbour(line_sums: LineSums) -> BinaryImage:
    """Image whose column j holds ones exactly in rows 1..c_j.

    Depends only on the column sums and m, so it is defined for
    inconsistent input too. Its row sums are ``conjugate(cols, m)``.
    """
    validate(line_sums)
    col = np.asarray(line_sums.cols)
    cells = np.arange(line_sums.m)[:, None] < col[None, :]
    return BinaryImage(cells)
