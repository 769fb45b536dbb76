"""The 13-line pair: identical weak combinatorics (13; 16, 6, 4, 2), yet one
arrangement is free with exponents (6,6) and the other is plus-one-generated
with exponents (5,8,8).  Freeness of a line arrangement is therefore not a
function of the weak combinatorics.

Run:  python demos/02_numerical_terao_counterexample.py   (about 20 seconds)
"""
from arrlab import resolution_summary
from arrlab.cli import compare_arrangements
from arrlab.fixtures import load_arrangement

qa = load_arrangement("qa")
qb = load_arrangement("qb")

for arr in (qa, qb):
    s = resolution_summary(arr)
    sh = s.resolution_shifts()
    print(f"{arr.label}: {s.classification}, exponents {s.exponents}, "
          f"mdr {s.mdr}, tjurina {s.tjurina}")
    print(f"  resolution 0 -> {sh['relations']} -> {sh['generators']} "
          f"-> {sh['partials']} -> S")

res = compare_arrangements(qa, qb)
print("\npair flags:", res["flags"])
print("verdicts:  ", res["verdicts"])
assert res["verdicts"]["ntc_witness"]

# Adding one line to QB makes it free with exponents (5,8): QB is the
# deletion of a free arrangement, which is how plus-one-generation arises.
s = resolution_summary(load_arrangement("qb_plus"))
print(f"\nQB + extra line: {s.classification}, exponents {s.exponents}")
