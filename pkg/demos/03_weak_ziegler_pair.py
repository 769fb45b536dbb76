"""Two real 12-line arrangements with 19 triple and 9 double points each,
non-isomorphic matroids, and different minimal degrees of Jacobian relations
(mdr 6 vs 7): a weak Ziegler pair among arrangements with only double and
triple points.

Run:  python demos/03_weak_ziegler_pair.py   (about 20 seconds)
"""
from arrlab import (matroid_from_arrangement, matroids_isomorphic,
                    resolution_summary, weak_combinatorics)
from arrlab.cli import compare_arrangements
from arrlab.fixtures import load_arrangement

l1 = load_arrangement("l1")   # rational coefficients
l2 = load_arrangement("l2")   # coefficients in Q(sqrt 2)

print("W(L1) =", weak_combinatorics(l1), " W(L2) =", weak_combinatorics(l2))
print("matroids isomorphic:", matroids_isomorphic(
    matroid_from_arrangement(l1), matroid_from_arrangement(l2)) is not None)

for arr in (l1, l2):
    s = resolution_summary(arr)
    sh = s.resolution_shifts()
    print(f"{arr.label}: {s.m}-syzygy, exponents {s.exponents}, mdr {s.mdr}")
    print(f"  0 -> {sh['relations']} -> {sh['generators']} -> {sh['partials']} -> S")

res = compare_arrangements(l1, l2)
print("verdicts:", res["verdicts"])
assert res["verdicts"]["weak_ziegler_pair"] and not res["verdicts"]["ziegler_pair"]
