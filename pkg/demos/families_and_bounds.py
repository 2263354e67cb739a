"""Boundary lengths of the constructed image across the five instance families."""

from tomobound import alpha, boundary, reconstruct
from tomobound.families import family

cases = [("ex51", 9, None), ("ex52", 9, None), ("ex53", 2, 6), ("ex54", 3, None), ("ex55", 3, None)]

print(f"{'family':8} {'m x n':>7} {'alpha':>6} {'l_h':>5} {'4n-4':>5} {'l_v':>5} {'4m-4':>5}")
for name, p, n in cases:
    inst = family(name, p, n)
    sums = inst.line_sums
    rep = boundary(reconstruct(sums).image)
    print(
        f"{name:8} {sums.m:>3}x{sums.n:<3} {alpha(sums):>6} {rep.l_h:>5} {4 * sums.n - 4:>5}"
        f" {rep.l_v:>5} {4 * sums.m - 4:>5}"
    )

# ex55 is where l_v grows quadratically while l_h stays linear
print()
for k in range(1, 7):
    sums = family("ex55", k).line_sums
    rep = boundary(reconstruct(sums).image)
    print(f"k={k}: l_v = {rep.l_v} = 4k^2+4k+2, l_h = {rep.l_h} <= {12 * k - 4}")
