"""Reconstruction for arbitrary monotone sums via a full padding row and column.

Prepending a full row and a full column turns any monotone instance into
one with r1 = n and c1 = m, without changing alpha. The padded row gets
n + 1 ones and the padded column m + 1 ones, because the corner cell is
shared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .construction import reconstruct
from .core import BinaryImage, BoundaryReport, LineSums, alpha, boundary, validate
from .errors import Inconsistent, InternalInvariantViolation, NotPadded
from .ryser import is_consistent


@dataclass(frozen=True)
class BoundReport:
    """Measured boundary lengths next to the guaranteed upper bounds."""

    alpha: int
    l_h: int
    l_v: int
    l_h_bound: int
    l_v_bound: int
    direct: bool

    @property
    def ok(self) -> bool:
        return self.l_h <= self.l_h_bound and self.l_v <= self.l_v_bound

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "l_h": self.l_h,
            "l_v": self.l_v,
            "l_h_bound": self.l_h_bound,
            "l_v_bound": self.l_v_bound,
            "direct": self.direct,
        }


def pad(line_sums: LineSums) -> LineSums:
    validate(line_sums)
    m, n = line_sums.m, line_sums.n
    return LineSums(
        (n + 1,) + tuple(r + 1 for r in line_sums.rows),
        (m + 1,) + tuple(c + 1 for c in line_sums.cols),
    )


def pad_embed(image: BinaryImage) -> BinaryImage:
    """Concrete counterpart of :func:`pad`: the image with a full first row and column."""
    cells = np.ones((image.m + 1, image.n + 1), dtype=bool)
    cells[1:, 1:] = image.cells
    return BinaryImage(cells)


def strip(image: BinaryImage) -> BinaryImage:
    if image.m < 2 or image.n < 2:
        raise NotPadded(f"a {image.m}x{image.n} image has nothing left after stripping")
    if not image.cells[0, :].all() or not image.cells[:, 0].all():
        raise NotPadded("first row or first column contains a zero")
    return BinaryImage(image.cells[1:, 1:])


def general_bounds(line_sums: LineSums, a: int) -> tuple[int, int]:
    r1, c1, n = line_sums.rows[0], line_sums.cols[0], line_sums.n
    return min(2 * r1 + 2 * a, 2 * r1 + 2 * n - 2), 2 * c1 + 2 * a


def reconstruct_general(line_sums: LineSums) -> tuple[BinaryImage, BoundaryReport, BoundReport]:
    """Reconstruct any monotone consistent instance, padding when r1 != n or c1 != m."""
    verdict = is_consistent(line_sums)
    if not verdict:
        raise Inconsistent(verdict.reason, witness=verdict)
    validate(line_sums)

    direct = line_sums.rows[0] == line_sums.n and line_sums.cols[0] == line_sums.m
    if direct:
        image = reconstruct(line_sums).image
    else:
        image = strip(reconstruct(pad(line_sums)).image)

    a = alpha(line_sums)
    measured = boundary(image)
    lh_bound, lv_bound = general_bounds(line_sums, a)
    report = BoundReport(a, measured.l_h, measured.l_v, lh_bound, lv_bound, direct)
    if not report.ok:
        raise InternalInvariantViolation(f"boundary bound violated: {report}")
    return image, measured, report


def alpha_bound_general(line_sums: LineSums) -> int:
    """Return floor(mn/4), after checking alpha against it (and the sharper bound when r1 = n, c1 = m)."""
    verdict = is_consistent(line_sums)
    if not verdict:
        raise Inconsistent(verdict.reason, witness=verdict)
    validate(line_sums)
    m, n = line_sums.m, line_sums.n
    a = alpha(line_sums)
    if 4 * a > m * n:
        raise InternalInvariantViolation(f"alpha = {a} exceeds mn/4 for {m}x{n}")
    if line_sums.rows[0] == n and line_sums.cols[0] == m and 4 * a > (m - 1) * (n - 1):
        raise InternalInvariantViolation(f"alpha = {a} exceeds (m-1)(n-1)/4 for {m}x{n}")
    return m * n // 4
