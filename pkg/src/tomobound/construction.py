"""Small-boundary reconstruction for monotone line sums with r1 = n and c1 = m.

Starting from the column-prefix image F1, each step rewrites one column so
that it moves ones from rows with surplus (positive deficit ``d``) into rows
that lack ones (negative ``d``), freezes that column and removes it from the
residual problem. When the residual deficits are all zero, the remaining
columns are plain prefixes and the frozen columns are written back at their
original positions.

The residual state always keeps the *target* row sums of the columns that
are still in play; the remaining columns themselves are never modified, so
the remaining configuration is by construction the column-prefix image of
the residual sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Union

import numpy as np

from .core import ConjugateProfile, BinaryImage, LineSums, margins, profile, validate
from .errors import (
    Inconsistent,
    InternalInvariantViolation,
    MalformedProfile,
    PreconditionViolated,
)
from .ryser import is_consistent

TRACE_AUTO_LIMIT = 64


class Regions(NamedTuple):
    """First run of positive deficits [i1, i2] and first negative run [i3, i4]."""

    i1: int
    i2: int
    i3: int
    i4: int

    @property
    def plus(self) -> tuple[int, int]:
        return (self.i1, self.i2)

    @property
    def minus(self) -> tuple[int, int]:
        return (self.i3, self.i4)


class Selection(NamedTuple):
    rows: tuple[int, ...]
    split: Optional[tuple[int, int, int]] = None


@dataclass(frozen=True)
class FrozenColumn:
    original_index: int
    one_rows: frozenset[int]


@dataclass(frozen=True)
class StepRecord:
    kind: str
    chosen_column: int
    column_sum: int
    region_plus: tuple[int, int]
    region_minus: tuple[int, int]
    s: int
    i_set: tuple[int, ...]
    split: Optional[tuple[int, int, int]]
    rows_before: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "column": self.chosen_column,
            "column_sum": self.column_sum,
            "R_plus": list(self.region_plus),
            "R_minus": list(self.region_minus),
            "s": self.s,
            "I": list(self.i_set),
            "split": list(self.split) if self.split else None,
        }


@dataclass(frozen=True)
class ReconState:
    target_rows: tuple[int, ...]
    remaining_cols: tuple[tuple[int, int], ...]
    profile: ConjugateProfile

    @classmethod
    def build(cls, rows: Sequence[int], remaining: Sequence[tuple[int, int]]) -> ReconState:
        rows = tuple(rows)
        remaining = tuple(remaining)
        return cls(rows, remaining, profile(rows, [c for _, c in remaining]))

    @classmethod
    def initial(cls, line_sums: LineSums) -> ReconState:
        return cls.build(line_sums.rows, list(enumerate(line_sums.cols, start=1)))

    @property
    def m(self) -> int:
        return len(self.target_rows)


class Reconstruction(NamedTuple):
    image: BinaryImage
    trace: Optional[list[StepRecord]]


def _row_getter(rows: Sequence[int]):
    m = len(rows)
    return lambda i: rows[i - 1] if 1 <= i <= m else 0


def find_regions(prof: Union[ConjugateProfile, Sequence[int]]) -> Optional[Regions]:
    """Locate the first positive and first negative runs of the deficit vector.

    Returns ``None`` when all deficits vanish.
    """
    d = prof.d if isinstance(prof, ConjugateProfile) else tuple(prof)
    m = len(d)
    first = next((i for i, v in enumerate(d, start=1) if v != 0), None)
    if first is None:
        return None
    if d[first - 1] < 0:
        raise MalformedProfile(f"first nonzero deficit at row {first} is negative")
    i1 = i2 = first
    while i2 < m and d[i2] > 0:
        i2 += 1
    i3 = next((i for i in range(i2 + 1, m + 1) if d[i - 1] < 0), None)
    if i3 is None:
        raise MalformedProfile("positive deficits without a matching negative run")
    i4 = i3
    while i4 < m and d[i4] < 0:
        i4 += 1
    return Regions(i1, i2, i3, i4)


def select_i_a(rows: Sequence[int], i3: int, i4: int, s: int) -> Selection:
    """Pick s target rows inside [i3, i4] to receive the moved ones.

    Any row of the result whose successor is not in the result has a
    strictly larger target than that successor, so decrementing keeps the
    row sums non-increasing.
    """
    r = _row_getter(rows)
    last = i3 + s - 1
    if s < 1 or last > i4:
        raise InternalInvariantViolation(f"A-step cannot place {s} ones in [{i3}, {i4}]")
    if r(last) > r(last + 1):
        return Selection(tuple(range(i3, last + 1)))
    v = r(last)
    t1 = next(t for t in range(i3, last + 1) if r(t) == v)
    t2 = last + 1
    while r(t2 + 1) == v:
        t2 += 1
    if t2 > i4:
        raise InternalInvariantViolation(f"equal run of value {v} leaves R- at row {t2}")
    t3 = t2 + t1 - i3 - s + 1
    return Selection(tuple(range(i3, t1)) + tuple(range(t3, t2 + 1)), (t1, t2, t3))


def select_i_b(rows: Sequence[int], i1: int, i2: int, s: int) -> Selection:
    """Pick s rows inside [i1, i2] that lose their one; mirror image of :func:`select_i_a`.

    Any row of the result whose predecessor is not in the result has a
    strictly smaller target than that predecessor. The base block is the
    bottom ``s`` rows of [i1, i2]; when the row just above it carries the
    same target, the top part of the block is shifted up to the start of
    that equal run.
    """
    r = _row_getter(rows)
    first = i2 - s + 1
    if s < 1 or first < i1:
        raise InternalInvariantViolation(f"B-step cannot take {s} ones from [{i1}, {i2}]")
    if first == i1 or r(first - 1) > r(first):
        return Selection(tuple(range(first, i2 + 1)))
    v = r(first)
    top = first
    while top < i2 and r(top + 1) == v:
        top += 1
    start = first
    while start > i1 and r(start - 1) == v:
        start -= 1
    end = start + (top - first)
    return Selection(tuple(range(start, end + 1)) + tuple(range(top + 1, i2 + 1)), (top, start, end))


def _check_state(rows: Sequence[int], prof: ConjugateProfile) -> None:
    for k in range(1, len(rows)):
        if rows[k] > rows[k - 1]:
            raise InternalInvariantViolation(f"residual row sums increase at row {k + 1}")
    acc = 0
    for k, dk in enumerate(prof.d, start=1):
        acc += dk
        if acc < 0:
            raise InternalInvariantViolation(f"residual sums inconsistent at prefix {k}")
    if acc != 0:
        raise InternalInvariantViolation("residual totals differ")


def phi_step(state: ReconState) -> Optional[tuple[ReconState, FrozenColumn, StepRecord]]:
    """Apply one A-step or B-step; ``None`` once the residual deficits are all zero."""
    regions = find_regions(state.profile)
    if regions is None:
        return None
    i1, i2, i3, i4 = regions
    rows = state.target_rows
    cols = state.remaining_cols

    if i2 - i1 <= i4 - i3:
        kind = "A"
        pos = next((k for k in range(len(cols) - 1, -1, -1) if i1 <= cols[k][1] <= i2), None)
        if pos is None:
            raise InternalInvariantViolation(f"no column with sum in R+ = [{i1}, {i2}]")
        cj = cols[pos][1]
        s = cj - i1 + 1
        sel = select_i_a(rows, i3, i4, s)
        one_rows = frozenset(range(1, i1)) | frozenset(sel.rows)
    else:
        kind = "B"
        pos = next((k for k in range(len(cols)) if i3 <= cols[k][1] + 1 <= i4), None)
        if pos is None:
            raise InternalInvariantViolation(f"no column with sum + 1 in R- = [{i3}, {i4}]")
        cj = cols[pos][1]
        s = i4 - cj
        sel = select_i_b(rows, i1, i2, s)
        one_rows = (frozenset(range(1, cj + 1)) - frozenset(sel.rows)) | frozenset(
            range(cj + 1, i4 + 1)
        )

    if len(one_rows) != cj:
        raise InternalInvariantViolation(f"frozen column has {len(one_rows)} ones, expected {cj}")
    new_rows = [r - 1 if i in one_rows else r for i, r in enumerate(rows, start=1)]
    new_state = ReconState.build(new_rows, cols[:pos] + cols[pos + 1 :])
    _check_state(new_state.target_rows, new_state.profile)

    orig = cols[pos][0]
    record = StepRecord(
        kind=kind,
        chosen_column=orig,
        column_sum=cj,
        region_plus=(i1, i2),
        region_minus=(i3, i4),
        s=s,
        i_set=sel.rows,
        split=sel.split,
        rows_before=rows,
    )
    return new_state, FrozenColumn(orig, one_rows), record


def iterate_steps(line_sums: LineSums) -> Iterator[tuple[ReconState, FrozenColumn, StepRecord]]:
    """Yield every step of the construction, without precondition checks."""
    state = ReconState.initial(line_sums)
    while True:
        out = phi_step(state)
        if out is None:
            return
        yield out
        state = out[0]


def check_preconditions(line_sums: LineSums) -> None:
    verdict = is_consistent(line_sums)
    if not verdict:
        raise Inconsistent(verdict.reason, witness=verdict)
    validate(line_sums)
    if line_sums.rows[0] != line_sums.n or line_sums.cols[0] != line_sums.m:
        raise PreconditionViolated(
            f"direct construction needs r1 = n and c1 = m, got r1={line_sums.rows[0]}, "
            f"n={line_sums.n}, c1={line_sums.cols[0]}, m={line_sums.m}"
        )


def reconstruct(line_sums: LineSums, trace: Optional[bool] = None) -> Reconstruction:
    """Build the small-boundary image F2 for monotone, consistent sums with r1 = n, c1 = m.

    ``trace`` keeps the list of :class:`StepRecord`; by default it is kept
    for n <= 64.
    """
    check_preconditions(line_sums)
    if trace is None:
        trace = line_sums.n <= TRACE_AUTO_LIMIT
    m, n = line_sums.m, line_sums.n

    records = [] if trace else None
    frozen = []
    state = ReconState.initial(line_sums)
    while True:
        out = phi_step(state)
        if out is None:
            break
        state, col, rec = out
        frozen.append(col)
        if records is not None:
            records.append(rec)

    cells = np.zeros((m, n), dtype=bool)
    for orig, c in state.remaining_cols:
        cells[:c, orig - 1] = True
    for col in frozen:
        cells[[i - 1 for i in col.one_rows], col.original_index - 1] = True
    image = BinaryImage(cells)

    if margins(image) != line_sums:
        raise InternalInvariantViolation("reassembled image misses the requested line sums")
    return Reconstruction(image, records)


def validate_trace(trace: Sequence[StepRecord]) -> None:
    """Raise if any recorded step breaks the size or descent rules of its kind."""
    for k, rec in enumerate(trace, start=1):
        r = _row_getter(rec.rows_before)
        i1, i2 = rec.region_plus
        i3, i4 = rec.region_minus
        chosen = set(rec.i_set)
        if len(chosen) != rec.s:
            raise InternalInvariantViolation(f"step {k}: |I| = {len(chosen)} but s = {rec.s}")
        if rec.kind == "A":
            if not i2 - i1 <= i4 - i3:
                raise InternalInvariantViolation(f"step {k}: A-step with |R+| > |R-|")
            if not chosen <= set(range(i3, i4 + 1)) or rec.s != rec.column_sum - i1 + 1:
                raise InternalInvariantViolation(f"step {k}: A-step I-set or s out of place")
            bad = [i for i in chosen if i + 1 not in chosen and not r(i) > r(i + 1)]
        elif rec.kind == "B":
            if not i2 - i1 > i4 - i3:
                raise InternalInvariantViolation(f"step {k}: B-step with |R+| <= |R-|")
            if not chosen <= set(range(i1, i2 + 1)) or rec.s != i4 - rec.column_sum:
                raise InternalInvariantViolation(f"step {k}: B-step I-set or s out of place")
            bad = [i for i in chosen if i - 1 not in chosen and not r(i - 1) > r(i)]
        else:
            raise InternalInvariantViolation(f"step {k}: unknown kind {rec.kind!r}")
        if bad:
            raise InternalInvariantViolation(f"step {k}: descent property fails at rows {bad}")
