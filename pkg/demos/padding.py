"""Sums without a full first row or column go through a padded instance."""

from tomobound import LineSums, alpha, pad, reconstruct_general, strip, reconstruct

sums = LineSums((3, 2, 2, 1), (3, 3, 1, 1, 0))
padded = pad(sums)
print("original:", sums.rows, sums.cols)
print("padded:  ", padded.rows, padded.cols)
print("alpha unchanged:", alpha(sums), alpha(padded))

big = reconstruct(padded).image
print()
print(big)
print()
small = strip(big)
print(small)

image, measured, bounds = reconstruct_general(sums)
assert image == small
print()
print(f"path: {'direct' if bounds.direct else 'padded'}")
print(f"l_h = {measured.l_h} <= {bounds.l_h_bound}, l_v = {measured.l_v} <= {bounds.l_v_bound}")
