"""The five parametrised instance families with known alpha and boundary values."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import LineSums
from .errors import BadParameter

FAMILIES = ("ex51", "ex52", "ex53", "ex54", "ex55")


@dataclass(frozen=True)
class Expected:
    """A known value and where it comes from (``"reference"`` or ``"formula"``)."""

    value: int
    source: str


@dataclass(frozen=True)
class FamilySpec:
    """One family member.

    ``parameter`` is n for ex51/ex52 and k for ex53/ex54/ex55; ex53 also
    needs ``n`` (its row count kn - k + 1 is derived).
    """

    family: str
    parameter: int
    n: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParameter(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        p = self.parameter
        if self.family == "ex51" and (p < 3 or p % 2 == 0):
            raise BadParameter(f"ex51 needs an odd n >= 3, got {p}")
        if self.family == "ex52" and p < 2:
            raise BadParameter(f"ex52 needs n >= 2, got {p}")
        if self.family in ("ex53", "ex54", "ex55") and p < 1:
            raise BadParameter(f"{self.family} needs k >= 1, got {p}")
        if self.family == "ex53" and (self.n is None or self.n < 2):
            raise BadParameter(f"ex53 needs n >= 2 in addition to k, got n={self.n}")


@dataclass(frozen=True)
class FamilyInstance:
    spec: FamilySpec
    line_sums: LineSums
    expected: dict[str, Expected] = field(default_factory=dict)


def _ex51(n):
    sums = [n]
    for v in range(n - 1, 1, -2):
        sums += [v, v]
    exp = {
        "alpha": Expected((n - 1) // 2, "formula"),
        "min_l_h": Expected(3 * n - 1, "formula"),
        "min_l_v": Expected(3 * n - 1, "formula"),
        "l_h": Expected(3 * n - 1, "reference" if n == 9 else "formula"),
        "l_v": Expected(3 * n - 1, "reference" if n == 9 else "formula"),
    }
    return LineSums(sums, sums), exp


def _ex52(n):
    sums = [n] + [2] * (n - 1)
    exp = {
        "alpha": Expected(n - 2, "formula"),
        "min_l_h": Expected(4 * n - 4, "formula"),
        "min_l_v": Expected(4 * n - 4, "formula"),
        "l_h": Expected(4 * n - 4, "reference" if n == 9 else "formula"),
        "l_v": Expected(4 * n - 4, "reference" if n == 9 else "formula"),
    }
    return LineSums(sums, sums), exp


def _ex53(k, n):
    m = k * n - k + 1
    cols = [m] + [k + 1] * (n - 1)
    rows = [n] + [2] * (m - 1)
    exp = {
        "alpha": Expected(k * (n - 2), "formula"),
        "min_l_h": Expected(4 * n - 4, "formula"),
        "l_h": Expected(4 * n - 4, "formula"),
    }
    return LineSums(rows, cols), exp


def _ex54(k):
    sums = [2 * k + 1] + [k + 1] * (2 * k)
    return LineSums(sums, sums), {"alpha": Expected(k * k, "formula")}


def _ex55(k):
    cols = [3 * k + 1] + [k + 1] * (3 * k - 1)
    rows = [3 * k] + [k + 1] * (2 * k) + [k] * k
    exp = {
        "alpha": Expected(2 * k * k - k, "formula"),
        "l_v": Expected(4 * k * k + 4 * k + 2, "reference" if k == 3 else "formula"),
        "l_h_bound": Expected(4 * (3 * k) - 4, "formula"),
    }
    return LineSums(rows, cols), exp


def generate(spec: FamilySpec) -> FamilyInstance:
    if spec.family == "ex51":
        sums, exp = _ex51(spec.parameter)
    elif spec.family == "ex52":
        sums, exp = _ex52(spec.parameter)
    elif spec.family == "ex53":
        sums, exp = _ex53(spec.parameter, spec.n)
    elif spec.family == "ex54":
        sums, exp = _ex54(spec.parameter)
    else:
        sums, exp = _ex55(spec.parameter)
    return FamilyInstance(spec, sums, exp)


def family(name: str, parameter: int, n: Optional[int] = None) -> FamilyInstance:
    """Shorthand for ``generate(FamilySpec(name, parameter, n))``."""
    return generate(FamilySpec(name, parameter, n))
