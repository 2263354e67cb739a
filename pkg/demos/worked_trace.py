"""Step through the construction on a 12 x 11 instance and print each column it fixes."""

from tomobound import LineSums, boundary, conjugate, profile, reconstruct

sums = LineSums((11, 10, 8, 8, 8, 6, 6, 6, 3, 3, 3, 2), (12, 10, 7, 6, 6, 6, 6, 6, 6, 6, 3))

prof = profile(sums.rows, sums.cols)
print("rows:", *sums.rows)
print("cols:", *sums.cols)
print("b:   ", *conjugate(sums.cols, sums.m))
print("d:   ", *(f"{v:+d}" if v else "0" for v in prof.d))
print("alpha =", sum(v for v in prof.d if v > 0))
print()

image, trace = reconstruct(sums, trace=True)
for step in trace:
    print(
        f"{step.kind}-step  column {step.chosen_column:>2} (sum {step.column_sum:>2})"
        f"  R+={step.region_plus}  R-={step.region_minus}  I={list(step.i_set)}"
    )

print()
print(image)
rep = boundary(image)
print(f"\nl_h = {rep.l_h}, l_v = {rep.l_v}")
