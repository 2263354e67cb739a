"""Compare the construction with exhaustive minima, then probe the two-sided linear bound."""

from tomobound import boundary, reconstruct
from tomobound.families import family
from tomobound.oracle import min_boundaries, probe_conjecture

for name, n in [("ex51", 3), ("ex51", 5), ("ex52", 4), ("ex52", 5)]:
    sums = family(name, n).line_sums
    mins = min_boundaries(sums)
    rep = boundary(reconstruct(sums).image)
    print(
        f"{name} n={n}: {mins.count} images, min l_h {mins.min_l_h}, min l_v {mins.min_l_v};"
        f" constructed {rep.l_h}/{rep.l_v}"
    )

print()
for k in (1, 2):
    sums = family("ex55", k).line_sums
    report = probe_conjecture(sums)
    print(f"ex55 k={k}: {report.minima.count} images, bounds l_h <= {report.l_h_bound}, l_v <= {report.l_v_bound}")
    print("  witness found" if report.holds else "  no witness")
    if report.holds:
        print(report.witness)
    constructed = boundary(reconstruct(sums).image)
    print(f"  the construction gives l_v = {constructed.l_v}")
