import pytest
from hypothesis import given, strategies as st

from tomobound import LineSums, alpha, canonical_neighbour, conjugate, is_consistent, margins
from tomobound.errors import NotMonotone

from conftest import monotone_consistent
from naive import brute_force_consistent


def test_worked_example_is_consistent(worked):
    assert is_consistent(worked)


def test_prefix_witness():
    # b = (2, 1): prefix sums 2, 3 against 2, 4
    verdict = is_consistent(LineSums((2, 2), (3, 1)))
    assert not verdict
    assert verdict.prefix == 2
    assert verdict.sum_mismatch is None


def test_single_cell_consistent():
    assert is_consistent(LineSums((1,), (1,)))


def test_sum_mismatch_is_a_verdict_not_an_error():
    verdict = is_consistent(LineSums((2, 1), (1, 1)))
    assert not verdict
    assert verdict.sum_mismatch == (3, 2)
    assert verdict.prefix is None


def test_not_monotone_propagates():
    with pytest.raises(NotMonotone):
        is_consistent(LineSums((1, 2), (2, 1)))


@given(
    st.lists(st.integers(0, 4), min_size=1, max_size=4),
    st.lists(st.integers(0, 4), min_size=1, max_size=4),
)
def test_agrees_with_brute_force(rows, cols):
    rows = sorted(rows, reverse=True)
    cols = sorted(cols, reverse=True)
    if sum(rows) != sum(cols):
        return
    expected = brute_force_consistent(rows, cols) and all(c <= len(rows) for c in cols)
    assert bool(is_consistent(LineSums(rows, cols))) == expected


@given(monotone_consistent(), st.integers(0, 2), st.integers(0, 2))
def test_invariant_under_zero_padding(sums, extra_rows, extra_cols):
    padded = LineSums(sums.rows + (0,) * extra_rows, sums.cols + (0,) * extra_cols)
    assert bool(is_consistent(padded)) == bool(is_consistent(sums))


def test_canonical_neighbour_column_prefixes():
    img = canonical_neighbour(LineSums((1, 1, 1), (3,)))
    assert img.ones() == [(1, 1), (2, 1), (3, 1)]


def test_canonical_neighbour_of_square_family():
    img = canonical_neighbour(LineSums((4, 2, 2, 2), (4, 2, 2, 2)))
    assert margins(img).rows == (4, 4, 1, 1)


@given(monotone_consistent())
def test_canonical_neighbour_margins(sums):
    mg = margins(canonical_neighbour(sums))
    assert mg.cols == sums.cols
    assert mg.rows == conjugate(sums.cols, sums.m)


@given(monotone_consistent())
def test_alpha_zero_means_f1_already_fits(sums):
    if alpha(sums) == 0:
        assert margins(canonical_neighbour(sums)) == sums
