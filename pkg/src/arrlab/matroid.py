"""Rank-3 matroids on [n] stored by their non-basis triples: validation via
basis exchange, derived weak combinatorics, characteristic polynomials,
combinatorial (non-)freeness filters, and isomorphism with witness.

File format (JSON): {"n": 12, "nonbases": [[1, 2, 3], ...]} with 1-based
sorted triples.  Internally elements are 0-based to match line indices.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path

from .arrangement import Arrangement, WeakCombinatorics, intersection_points
from .errors import InvalidMatroid, MalformedInput, PencilArrangement

Triple = tuple[int, int, int]


class Matroid3:
    """A rank-3 matroid given by its set of non-basis (collinear) triples."""

    __slots__ = ("n", "nonbases", "_flats")

    def __init__(self, n: int, nonbases) -> None:
        nb = set()
        for t in nonbases:
            t = tuple(sorted(t))
            if len(set(t)) != 3 or t[0] < 0 or t[-1] >= n:
                raise MalformedInput(f"bad triple {t} for ground set of size {n}")
            nb.add(t)
        self.n = n
        self.nonbases = frozenset(nb)
        self._flats = None

    @classmethod
    def from_json(cls, source: str | Path | dict) -> Matroid3:
        if isinstance(source, dict):
            obj = source
        else:
            p = Path(source)
            if not p.exists():
                raise MalformedInput(f"no such file: {source}")
            try:
                obj = json.loads(p.read_text())
            except json.JSONDecodeError as e:
                raise MalformedInput(f"invalid JSON: {e}") from e
        try:
            n = int(obj["n"])
            nb = [[int(x) - 1 for x in t] for t in obj["nonbases"]]
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInput("matroid JSON needs 'n' and 'nonbases'") from e
        return cls(n, nb)

    def to_json(self) -> str:
        nb = sorted(tuple(x + 1 for x in t) for t in self.nonbases)
        return json.dumps({"n": self.n, "nonbases": [list(t) for t in nb]},
                          indent=1)

    def bases(self) -> list[Triple]:
        return [t for t in combinations(range(self.n), 3)
                if t not in self.nonbases]

    def rank2_flats(self) -> list[frozenset[int]]:
        """Maximal collinear sets of size >= 3, from merging non-basis triples.

        Triples sharing two elements are merged to a common flat until a
        fixpoint.  Raises InvalidMatroid when a merged flat is missing one of
        its triples from the non-basis list (flat inconsistency).
        """
        if self._flats is not None:
            return self._flats
        flats = [set(t) for t in self.nonbases]
        merged = True
        while merged:
            merged = False
            out: list[set[int]] = []
            for f in flats:
                for g in out:
                    if len(f & g) >= 2:
                        g |= f
                        merged = True
                        break
                else:
                    out.append(f)
            flats = out
        total = 0
        for f in flats:
            for t in combinations(sorted(f), 3):
                if t not in self.nonbases:
                    raise InvalidMatroid(
                        f"elements {sorted(x + 1 for x in f)} are forced collinear "
                        f"but {tuple(x + 1 for x in t)} is a basis")
            total += comb(len(f), 3)
        if total != len(self.nonbases):
            raise InvalidMatroid("non-basis triples not covered by flats")
        self._flats = [frozenset(f) for f in flats]
        return self._flats

    def points_on_line(self, h: int) -> int:
        """Number of rank-2 flats through h, counting implicit 2-point flats."""
        flats = [f for f in self.rank2_flats() if h in f]
        covered = sum(len(f) - 1 for f in flats)
        return len(flats) + (self.n - 1 - covered)

    def relabel(self, perm: tuple[int, ...]) -> Matroid3:
        return Matroid3(self.n, [tuple(perm[x] for x in t) for t in self.nonbases])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matroid3) and self.n == other.n
                and self.nonbases == other.nonbases)

    def __hash__(self) -> int:
        return hash((self.n, self.nonbases))

    def __repr__(self) -> str:
        return f"Matroid3(n={self.n}, nonbases={len(self.nonbases)})"


def matroid_from_arrangement(a: Arrangement) -> Matroid3:
    """Non-bases are the triples of concurrent lines."""
    if len(a.lines) < 3:
        raise InvalidMatroid("need at least 3 lines")
    nb = []
    for pt in intersection_points(a):
        m = pt.multiplicity
        if m == len(a.lines):
            raise PencilArrangement("all lines pass through one point")
        if m >= 3:
            nb.extend(combinations(pt.incident, 3))
    return Matroid3(len(a.lines), nb)


def validate_matroid(m: Matroid3) -> bool:
    """Basis-exchange check over all basis pairs (feasible for n <= 16)."""
    try:
        m.rank2_flats()
    except InvalidMatroid:
        return False
    bases = m.bases()
    if not bases:
        return False
    bset = {t for t in bases}
    for b1 in bases:
        s1 = set(b1)
        for b2 in bases:
            if b1 is b2:
                continue
            s2 = set(b2)
            for x in s1 - s2:
                rest = s1 - {x}
                if not any(tuple(sorted(rest | {y})) in bset for y in s2 - s1):
                    return False
    return True


def weak_combinatorics_of_matroid(m: Matroid3) -> WeakCombinatorics:
    flats = m.rank2_flats()
    t: dict[int, int] = {}
    for f in flats:
        t[len(f)] = t.get(len(f), 0) + 1
    t[2] = comb(m.n, 2) - sum(comb(len(f), 2) for f in flats)
    return WeakCombinatorics(m.n, t)


@dataclass(frozen=True)
class CharPoly:
    """chi = t^3 + chi[1] t^2 + chi[2] t + chi[3]; chi0 = chi / (t - 1)."""

    chi: tuple[int, int, int, int]
    chi0: tuple[int, int, int]
    integer_roots: tuple[int, ...]

    @property
    def factors_over_Z(self) -> bool:
        return len(self.integer_roots) == 2

    def chi0_at(self, t: int) -> int:
        a, b, c = self.chi0
        return a * t * t + b * t + c

    def __str__(self) -> str:
        if self.factors_over_Z:
            r1, r2 = self.integer_roots
            return f"(t-{r1})(t-{r2})" if r1 != r2 else f"(t-{r1})^2"
        b, c = self.chi0[1], self.chi0[2]
        return f"t^2{b:+d}t{c:+d}"


def characteristic_polynomial(w: WeakCombinatorics) -> CharPoly:
    """chi = t^3 - d t^2 + s t - (s + 1 - d) with s = sum (r-1) t_r.

    chi(1) = 0 always, so chi0 = chi/(t-1) = t^2 - (d-1) t + (s + 1 - d);
    integer roots of chi0 are reported when the discriminant is a perfect
    square (it then has automatically integral roots).
    """
    d = w.d
    s = sum((r - 1) * c for r, c in w.t.items())
    chi = (1, -d, s, -(s + 1 - d))
    chi0 = (1, -(d - 1), s + 1 - d)
    assert 1 + chi[1] + chi[2] + chi[3] == 0
    disc = (d - 1) ** 2 - 4 * (s + 1 - d)
    roots: tuple[int, ...] = ()
    if disc >= 0:
        r = math.isqrt(disc)
        if r * r == disc:
            roots = tuple(sorted(((d - 1 - r) // 2, (d - 1 + r) // 2)))
    return CharPoly(chi, chi0, roots)


def nonfree_by_multiplicity(w: WeakCombinatorics) -> str:
    """Verdict "NonFree" | "Inconclusive" from the high-multiplicity test.

    A free arrangement with an m-fold point and 2m >= d+1 must have m-1
    among the roots of chi0; a violating multiplicity certifies non-freeness
    of every realization with these point counts.
    """
    cp = characteristic_polynomial(w)
    for m, c in w.t.items():
        if c > 0 and 2 * m >= w.d + 1 and cp.chi0_at(m - 1) != 0:
            return "NonFree"
    return "Inconclusive"


def divisionally_free_rank3(m: Matroid3) -> bool:
    """True iff some line h has (t - (points_on_line(h) - 1)) dividing chi0.

    Rank-2 restrictions are always free, so in rank 3 a single division step
    along such a line certifies freeness of every realization.
    """
    w = weak_combinatorics_of_matroid(m)
    cp = characteristic_polynomial(w)
    return any(cp.chi0_at(m.points_on_line(h) - 1) == 0 for h in range(m.n))


# ---------------------------------------------------------------------------
# isomorphism


def _invariants(m: Matroid3) -> list[tuple]:
    flats = m.rank2_flats()
    inv = []
    for x in range(m.n):
        sizes = sorted(len(f) for f in flats if x in f)
        inv.append((tuple(sizes), m.points_on_line(x)))
    return inv


def _pair_flat_size(m: Matroid3) -> dict[tuple[int, int], int]:
    size: dict[tuple[int, int], int] = {}
    for f in m.rank2_flats():
        for p in combinations(sorted(f), 2):
            size[p] = len(f)
    return size


def matroids_isomorphic(m1: Matroid3, m2: Matroid3):
    """A ground-set permutation p with p(nonbases(m1)) = nonbases(m2), or None.

    Backtracking over candidate images, refined by per-element flat-size
    invariants and checked incrementally on pairs (common flat sizes must
    agree) and on completed triples.
    """
    if m1.n != m2.n or len(m1.nonbases) != len(m2.nonbases):
        return None
    try:
        inv1, inv2 = _invariants(m1), _invariants(m2)
    except InvalidMatroid:
        raise
    if sorted(inv1) != sorted(inv2):
        return None
    n = m1.n
    ps1, ps2 = _pair_flat_size(m1), _pair_flat_size(m2)
    candidates = [[y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(candidates[x]), -len(inv1[x][0])))
    assign: dict[int, int] = {}
    used = [False] * n

    nb1, nb2 = m1.nonbases, m2.nonbases

    def pair_key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def consistent(x: int, y: int) -> bool:
        items = list(assign.items())
        for a, b in items:
            if ps1.get(pair_key(x, a), 2) != ps2.get(pair_key(y, b), 2):
                return False
        for i in range(len(items)):
            a, b = items[i]
            for j in range(i + 1, len(items)):
                c, e = items[j]
                if ((tuple(sorted((x, a, c))) in nb1)
                        != (tuple(sorted((y, b, e))) in nb2)):
                    return False
        return True

    def extend(i: int):
        if i == n:
            return tuple(assign[x] for x in range(n))
        x = order[i]
        for y in candidates[x]:
            if not used[y] and consistent(x, y):
                assign[x] = y
                used[y] = True
                res = extend(i + 1)
                if res is not None:
                    return res
                del assign[x]
                used[y] = False
        return None

    perm = extend(0)
    if perm is None:
        return None
    mapped = {tuple(sorted(perm[x] for x in t)) for t in nb1}
    assert mapped == set(nb2)
    return perm
