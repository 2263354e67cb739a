"""Exit criteria for the package, one test per criterion.

Every test appends a PASS/FAIL line that is echoed in the pytest terminal
summary. All checks are exact integer comparisons unless a runtime limit is
stated.
"""

import itertools
import time
from contextlib import contextmanager

import numpy as np
import pytest

from tomobound import (
    LineSums,
    alpha,
    boundary,
    conjugate,
    is_consistent,
    margins,
    pad,
    profile,
    reconstruct,
    reconstruct_general,
    strip,
    validate_trace,
)
from tomobound.families import family
from tomobound.oracle import OracleLimits, exists, min_boundaries, probe_conjecture

from conftest import ACCEPTANCE_LINES, WORKED

SEED = 20240917


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"[FAIL] {number:>2}. {title}: {exc}")
        raise
    ACCEPTANCE_LINES.append(f"[PASS] {number:>2}. {title} ({time.perf_counter() - start:.2f} s)")


def _random_suite(count, max_dim, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        m, n = rng.integers(1, max_dim + 1, size=2)
        grid = rng.random((m, n)) < rng.random()
        out.append(
            LineSums(
                sorted(grid.sum(axis=1).tolist(), reverse=True),
                sorted(grid.sum(axis=0).tolist(), reverse=True),
            )
        )
    return out


@pytest.fixture(scope="module")
def suite():
    """10,000 random instances with their reconstructions (criteria 2 to 5)."""
    instances = _random_suite(10_000, 12, SEED)
    start = time.perf_counter()
    results = [reconstruct_general(s) for s in instances]
    elapsed = time.perf_counter() - start
    return instances, results, elapsed


def test_01_worked_example_trace():
    with criterion(1, "worked example: 5 steps A,A,B,B,A on columns 11,10,3,4,9"):
        reconstruct(WORKED)
        timings = []
        for _ in range(5):
            t = time.perf_counter()
            image, trace = reconstruct(WORKED)
            timings.append(time.perf_counter() - t)
        assert [r.kind for r in trace] == ["A", "A", "B", "B", "A"]
        assert [r.chosen_column for r in trace] == [11, 10, 3, 4, 9]
        assert [set(r.i_set) for r in trace] == [{7, 8}, {7, 8, 10, 11}, {3, 6}, {4, 6}, {11, 12}]
        validate_trace(trace)
        assert margins(image) == WORKED
        assert min(timings) < 0.010, f"runtime {min(timings) * 1e3:.2f} ms"


def test_02_line_sums_satisfied(suite):
    instances, results, elapsed = suite
    with criterion(2, f"10,000 random instances reconstruct with exact margins in {elapsed:.2f} s < 30 s"):
        assert len(instances) == 10_000
        for sums, (image, _, _) in zip(instances, results):
            assert margins(image) == sums
        assert elapsed < 30.0, f"took {elapsed:.1f} s"


def test_03_boundary_bounds(suite):
    instances, results, _ = suite
    with criterion(3, "l_h <= 2n+2a, l_v <= 2m+2a (direct); padded-case bounds on all"):
        direct = 0
        for sums, (_, measured, report) in zip(instances, results):
            m, n, a = sums.m, sums.n, report.alpha
            r1, c1 = sums.rows[0], sums.cols[0]
            if r1 == n and c1 == m:
                direct += 1
                assert measured.l_h <= 2 * n + 2 * a
                assert measured.l_v <= 2 * m + 2 * a
            assert measured.l_h <= min(2 * r1 + 2 * a, 2 * r1 + 2 * n - 2)
            assert measured.l_v <= 2 * c1 + 2 * a
        assert direct > 0


def test_04_horizontal_linear_bound(suite):
    instances, results, _ = suite
    with criterion(4, "l_h <= 4n-4 on direct instances and on ex53 (k 1..4, n 3..8)"):
        for sums, (_, measured, _) in zip(instances, results):
            if sums.rows[0] == sums.n and sums.cols[0] == sums.m and sums.n >= 2:
                assert measured.l_h <= 4 * sums.n - 4
        for k in range(1, 5):
            for n in range(3, 9):
                image, _ = reconstruct(family("ex53", k, n).line_sums)
                assert boundary(image).l_h <= 4 * n - 4


def test_05_alpha_bounds(suite):
    instances, results, _ = suite
    with criterion(5, "a <= (m-1)(n-1)/4 direct, a <= mn/4 general, a = k^2 on ex54 k 1..10"):
        for sums, (_, _, report) in zip(instances, results):
            m, n, a = sums.m, sums.n, report.alpha
            assert 4 * a <= m * n
            if sums.rows[0] == n and sums.cols[0] == m:
                assert 4 * a <= (m - 1) * (n - 1)
        for k in range(1, 11):
            sums = family("ex54", k).line_sums
            assert alpha(sums) == k * k
            assert 4 * k * k == (sums.m - 1) * (sums.n - 1)


def test_06_reference_values():
    with criterion(6, "ex51 n=9 26/26, ex52 n=9 32/32, ex55 k=3 l_v=50, l_v=4k^2+4k+2 for k 1..5"):
        rep = boundary(reconstruct(family("ex51", 9).line_sums).image)
        assert (rep.l_h, rep.l_v) == (26, 26)
        rep = boundary(reconstruct(family("ex52", 9).line_sums).image)
        assert (rep.l_h, rep.l_v) == (32, 32)
        rep = boundary(reconstruct(family("ex55", 3).line_sums).image)
        assert rep.l_v == 50 and rep.l_h <= 4 * 9 - 4
        for k in range(1, 6):
            rep = boundary(reconstruct(family("ex55", k).line_sums).image)
            assert rep.l_v == 4 * k * k + 4 * k + 2


@pytest.mark.parametrize("name, n", [("ex51", 3), ("ex51", 5), ("ex52", 3), ("ex52", 4), ("ex52", 5)])
def test_07_oracle_minimality(name, n):
    expected = 3 * n - 1 if name == "ex51" else 4 * n - 4
    with criterion(7, f"{name} n={n}: construction attains exact minimum {expected} of l_h and l_v"):
        sums = family(name, n).line_sums
        start = time.perf_counter()
        mins = min_boundaries(sums, OracleLimits(max_cells=49))
        elapsed = time.perf_counter() - start
        rep = boundary(reconstruct(sums).image)
        assert mins.min_l_h == mins.min_l_v == expected
        assert rep.l_h == mins.min_l_h and rep.l_v == mins.min_l_v
        assert elapsed < 60.0


def _monotone_sequences(length, top):
    for seq in itertools.combinations_with_replacement(range(top, -1, -1), length):
        yield seq


def test_08_ryser_cross_validation():
    with criterion(8, "Ryser test agrees with exhaustive existence for all m,n <= 4, entries <= 4"):
        start = time.perf_counter()
        checked = disagreements = 0
        probed = holds = 0
        degenerate = 0
        for m, n in itertools.product(range(1, 5), repeat=2):
            for rows in _monotone_sequences(m, 4):
                for cols in _monotone_sequences(n, 4):
                    if sum(rows) != sum(cols):
                        continue
                    sums = LineSums(rows, cols)
                    verdict = bool(is_consistent(sums))
                    found = exists(sums)
                    checked += 1
                    disagreements += verdict != found
                    if found and rows[0] == n and cols[0] == m:
                        if min(m, n) == 1:
                            degenerate += 1
                            continue
                        probed += 1
                        holds += probe_conjecture(sums).holds
        for k in (1, 2):
            probed += 1
            holds += probe_conjecture(family("ex55", k).line_sums).holds
        elapsed = time.perf_counter() - start
        ACCEPTANCE_LINES.append(
            f"       conjecture probe (recorded, not asserted): witness for {holds}/{probed} "
            f"direct instances with m, n >= 2 ({degenerate} single-line instances skipped)"
        )
        assert checked > 0 and disagreements == 0, f"{disagreements} of {checked} disagree"
        assert elapsed < 60.0


def test_09_padding():
    with criterion(9, "alpha(pad) = alpha and strip(reconstruct(pad)) keeps margins on 1,000 instances"):
        for sums in _random_suite(1_000, 12, SEED + 1):
            assert alpha(pad(sums)) == alpha(sums)
            assert margins(strip(reconstruct(pad(sums)).image)) == sums


def test_10_worked_example_vectors():
    with criterion(10, "worked example: alpha = 12, b and d vectors reproduced"):
        assert alpha(WORKED) == 12
        assert conjugate(WORKED.cols, WORKED.m) == (11, 11, 11, 10, 10, 10, 3, 2, 2, 2, 1, 1)
        assert profile(WORKED.rows, WORKED.cols).d == (0, 1, 3, 2, 2, 4, -3, -4, -1, -1, -2, -1)
