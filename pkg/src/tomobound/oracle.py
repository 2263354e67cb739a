"""Exhaustive ground truth for small instances.

Images are enumerated column by column from left to right. Within a column
the set of one-rows is chosen in lexicographic order, and a branch is cut
as soon as the residual row sums and the remaining columns fail the
Gale-Ryser test. Nothing here depends on the construction code.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from .core import BinaryImage, BoundaryReport, LineSums, boundary
from .errors import BudgetExceeded, InstanceTooLarge, NoSolution, SumMismatch

log = logging.getLogger(__name__)

OBJECTIVES = ("min_lh", "min_lv", "min_total", "count", "exists")
MAX_CELLS_ENV = "TOMOBOUND_MAX_CELLS"
PROGRESS_EVERY = 1_000_000


@dataclass(frozen=True)
class OracleLimits:
    max_cells: int = 49
    max_nodes: int = 10**8
    objective: str = "min_total"

    def __post_init__(self):
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}, got {self.objective!r}")

    @classmethod
    def from_env(cls, **kwargs) -> OracleLimits:
        """Limits whose cell cap honours ``TOMOBOUND_MAX_CELLS`` when set."""
        env = os.environ.get(MAX_CELLS_ENV)
        if env and "max_cells" not in kwargs:
            kwargs["max_cells"] = int(env)
        return cls(**kwargs)


@dataclass
class EnumerationResult:
    count: int
    nodes: int
    complete: bool = True


class _Stop(Exception):
    pass


def _suffix_caps(cols, m):
    """caps[j][k] = sum over columns j.. of min(c, k), for k = 0..m."""
    n = len(cols)
    caps = [[0] * (m + 1) for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        c = cols[j]
        nxt = caps[j + 1]
        caps[j] = [nxt[k] + min(c, k) for k in range(m + 1)]
    return caps


def _feasible(resid, cap):
    acc = 0
    for k, r in enumerate(sorted(resid, reverse=True), start=1):
        acc += r
        if acc > cap[k]:
            return False
    return acc == cap[-1]


def enumerate_images(
    line_sums: LineSums,
    limits: Optional[OracleLimits] = None,
    visitor: Optional[Callable[[BinaryImage], object]] = None,
) -> EnumerationResult:
    """Visit every image with exactly the given margins, each once, in a fixed order.

    A visitor returning a truthy value stops the walk early; the result is
    then marked incomplete. Exhausting the node budget raises
    :class:`BudgetExceeded` carrying the partial :class:`EnumerationResult`.
    """
    limits = limits or OracleLimits()
    rows, cols = list(line_sums.rows), list(line_sums.cols)
    m, n = len(rows), len(cols)
    if m * n > limits.max_cells:
        raise InstanceTooLarge(
            f"{m}x{n} = {m * n} cells exceeds the oracle cap of {limits.max_cells}",
            partial=EnumerationResult(0, 0, False),
        )
    if sum(rows) != sum(cols):
        raise SumMismatch(f"row total {sum(rows)} != column total {sum(cols)}")

    result = EnumerationResult(0, 0, True)
    if any(r < 0 or r > n for r in rows) or any(c < 0 or c > m for c in cols):
        return result

    caps = _suffix_caps(cols, m)
    resid = rows[:]
    grid = np.zeros((m, n), dtype=bool)

    def walk(j):
        if j == n:
            result.count += 1
            if visitor is not None and visitor(BinaryImage(grid)):
                raise _Stop
            return
        eligible = [i for i in range(m) if resid[i] > 0]
        for chosen in combinations(eligible, cols[j]):
            if result.nodes >= limits.max_nodes:
                result.complete = False
                raise BudgetExceeded(
                    f"node budget of {limits.max_nodes} exhausted after {result.count} images",
                    partial=result,
                )
            result.nodes += 1
            if result.nodes % PROGRESS_EVERY == 0:
                log.info("oracle: %d nodes, %d images so far", result.nodes, result.count)
            for i in chosen:
                resid[i] -= 1
            if _feasible(resid, caps[j + 1]):
                grid[chosen, j] = True
                walk(j + 1)
                grid[chosen, j] = False
            for i in chosen:
                resid[i] += 1

    if _feasible(resid, caps[0]):
        try:
            walk(0)
        except _Stop:
            result.complete = False
    return result


def exists(line_sums: LineSums, limits: Optional[OracleLimits] = None) -> bool:
    found = []
    enumerate_images(line_sums, limits, lambda img: found.append(img) or True)
    return bool(found)


def count(line_sums: LineSums, limits: Optional[OracleLimits] = None) -> int:
    return enumerate_images(line_sums, limits).count


@dataclass
class Minima:
    """Exact minima over all reconstructions; each minimum keeps its first attaining image."""

    count: int
    min_l_h: int
    min_l_v: int
    min_total: int
    argmin_l_h: BinaryImage
    argmin_l_v: BinaryImage
    argmin_total: BinaryImage
    nodes: int = 0

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "min_l_h": self.min_l_h,
            "min_l_v": self.min_l_v,
            "min_total": self.min_total,
            "nodes": self.nodes,
        }


class _Tracker:
    def __init__(self):
        self.best = {}
        self.boundaries = []

    def see(self, img: BinaryImage, b: BoundaryReport):
        for key, val in (("l_h", b.l_h), ("l_v", b.l_v), ("total", b.total)):
            if key not in self.best or val < self.best[key][0]:
                self.best[key] = (val, img)


def min_boundaries(line_sums: LineSums, limits: Optional[OracleLimits] = None) -> Minima:
    tracker = _Tracker()

    def visit(img):
        tracker.see(img, boundary(img))

    res = enumerate_images(line_sums, limits, visit)
    if res.count == 0:
        raise NoSolution("no image has these line sums")
    best = tracker.best
    return Minima(
        res.count,
        best["l_h"][0],
        best["l_v"][0],
        best["total"][0],
        best["l_h"][1],
        best["l_v"][1],
        best["total"][1],
        res.nodes,
    )


@dataclass
class ConjectureReport:
    """Whether some single image meets l_h <= 4n-4 and l_v <= 4m-4 at once."""

    line_sums: LineSums
    l_h_bound: int
    l_v_bound: int
    minima: Minima
    witness: Optional[BinaryImage] = None
    witness_boundary: Optional[BoundaryReport] = None
    table: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.witness is not None

    def as_dict(self) -> dict:
        return {
            "rows": list(self.line_sums.rows),
            "cols": list(self.line_sums.cols),
            "l_h_bound": self.l_h_bound,
            "l_v_bound": self.l_v_bound,
            "holds": self.holds,
            "witness": str(self.witness) if self.witness is not None else None,
            "minima": self.minima.as_dict(),
            "boundary_table": {f"{lh},{lv}": k for (lh, lv), k in sorted(self.table.items())},
        }


def probe_conjecture(line_sums: LineSums, limits: Optional[OracleLimits] = None) -> ConjectureReport:
    """Search every reconstruction for one satisfying both linear bounds.

    ``table`` maps each attained (l_h, l_v) pair to how many images attain
    it, which doubles as the counterexample certificate when no witness
    exists.
    """
    m, n = line_sums.m, line_sums.n
    lh_bound, lv_bound = 4 * n - 4, 4 * m - 4
    tracker = _Tracker()
    table: dict[tuple[int, int], int] = {}
    witness: list = []

    def visit(img):
        b = boundary(img)
        tracker.see(img, b)
        table[(b.l_h, b.l_v)] = table.get((b.l_h, b.l_v), 0) + 1
        if not witness and b.l_h <= lh_bound and b.l_v <= lv_bound:
            witness.append((img, b))

    res = enumerate_images(line_sums, limits, visit)
    if res.count == 0:
        raise NoSolution("no image has these line sums")
    best = tracker.best
    minima = Minima(
        res.count,
        best["l_h"][0],
        best["l_v"][0],
        best["total"][0],
        best["l_h"][1],
        best["l_v"][1],
        best["total"][1],
        res.nodes,
    )
    report = ConjectureReport(line_sums, lh_bound, lv_bound, minima, table=table)
    if witness:
        report.witness, report.witness_boundary = witness[0]
    return report
