"""Slow, obviously-correct reference implementations used only by the tests."""

import itertools

import numpy as np


def naive_conjugate(cols, m):
    return tuple(sum(1 for c in cols if c >= i) for i in range(1, m + 1))


def naive_boundary(cells):
    """Scan every 4-neighbour pair of Z^2 that touches the image."""
    cells = np.asarray(cells, dtype=bool)
    m, n = cells.shape

    def val(i, j):
        return bool(0 <= i < m and 0 <= j < n and cells[i, j])

    l_h = l_v = 0
    for i in range(-1, m):
        for j in range(-1, n + 1):
            if val(i, j) != val(i + 1, j):
                l_h += 1
    for i in range(-1, m + 1):
        for j in range(-1, n):
            if val(i, j) != val(i, j + 1):
                l_v += 1
    return l_h, l_v


def all_grids(m, n):
    for bits in itertools.product((0, 1), repeat=m * n):
        yield np.array(bits, dtype=bool).reshape(m, n)


def brute_force_images(rows, cols):
    """All grids with the given margins, by trying every one of the 2^(mn) grids."""
    m, n = len(rows), len(cols)
    out = []
    for g in all_grids(m, n):
        if tuple(g.sum(axis=1)) == tuple(rows) and tuple(g.sum(axis=0)) == tuple(cols):
            out.append(g)
    return out


def brute_force_consistent(rows, cols):
    """Existence by row-by-row search over all row patterns."""
    n = len(cols)
    patterns = {}
    for r in set(rows):
        patterns[r] = [p for p in itertools.product((0, 1), repeat=n) if sum(p) == r]
    target = tuple(cols)

    def go(k, acc):
        if k == len(rows):
            return acc == target
        if any(a > t for a, t in zip(acc, target)):
            return False
        return any(go(k + 1, tuple(a + b for a, b in zip(acc, p))) for p in patterns[rows[k]])

    if any(r > n for r in rows):
        return False
    return go(0, (0,) * n)
