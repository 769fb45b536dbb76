"""Walk through the combinatorial layer: intersection points, the weak
combinatorics vector W = (d; t_2, ...), the rank-3 characteristic polynomial,
and the two freeness filters that need no syzygy computation at all.

Run:  python demos/01_weak_combinatorics_and_filters.py
"""
from arrlab import (characteristic_polynomial, divisionally_free_rank3,
                    intersection_points, matroid_from_arrangement,
                    nonfree_by_multiplicity, weak_combinatorics)
from arrlab.arrangement import WeakCombinatorics
from arrlab.fixtures import load_arrangement

# The two 13-line arrangements with identical weak combinatorics.  One is
# defined over Q(i), the other over Q(golden ratio) -- all arithmetic exact.
for name in ("qa", "qb"):
    arr = load_arrangement(name)
    pts = intersection_points(arr)
    w = weak_combinatorics(arr)
    print(f"{arr.label}: {len(arr.lines)} lines over {arr.field}")
    print(f"  {len(pts)} intersection points, W = {w}")
    cp = characteristic_polynomial(w)
    print(f"  chi0 = {cp}, integer roots {cp.integer_roots}")
    m = matroid_from_arrangement(arr)
    print(f"  matroid: {len(m.nonbases)} non-bases, "
          f"divisionally free = {divisionally_free_rank3(m)}")

# The same machinery runs on bare weak-combinatorics vectors.  These four
# are the screening cases for ground sets of size 10..13: a high-multiplicity
# point whose m-1 is not a chi0 root certifies that every realization is
# non-free.
print("\nmultiplicity screening on bare W vectors:")
for literal in ("(10;21,1,0,0,0,1)", "(11;19,5,0,0,0,1)",
                "(12;26,4,0,0,0,0,1)", "(13;16,6,4,2)"):
    w = WeakCombinatorics.parse(literal)
    cp = characteristic_polynomial(w)
    print(f"  {literal}: chi0 = {cp} -> {nonfree_by_multiplicity(w)}")
