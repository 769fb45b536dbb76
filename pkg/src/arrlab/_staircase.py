"""Graded dimensions of the Jacobian ideal via a degrevlex staircase.

The ideal's graded pieces satisfy J_k = S_1 * J_{k-1} for k > d-1, so an
echelonized basis of J_k is obtained by inserting the x, y, z multiples of
the previous basis into a fresh echelon.  Pivot monomials at each degree are
exactly the degree-k part of the lead-term ideal, and the elimination is
exact linear algebra over the coefficient field (monic rows of mpq pairs).

Once the discovered minimal lead monomials are stable and the current degree
exceeds the largest surviving S-pair degree (Buchberger's coprimality and
chain criteria applied to the lead set), the lead-term ideal is complete and
all higher graded dimensions are counted combinatorially from the staircase,
with no further arithmetic.
"""
from __future__ import annotations

from fractions import Fraction

from .arrangement import dim_forms

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

Mono = tuple[int, int, int]


def monomials_drl(k: int) -> list[Mono]:
    """Degree-k monomials in descending degrevlex order with x > y > z."""
    return [(k - l - j, j, l) for l in range(k + 1) for j in range(k - l + 1)]


def _divides(a: Mono, b: Mono) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def _lcm(a: Mono, b: Mono) -> Mono:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def _pair_degree_bound(leads: list[Mono]) -> int:
    """Largest S-pair degree surviving the coprimality and chain criteria."""
    n = len(leads)
    pairs = []
    for i in range(n):
        for j in range(i):
            big = _lcm(leads[i], leads[j])
            if sum(big) == sum(leads[i]) + sum(leads[j]):
                continue  # coprime leads reduce trivially
            pairs.append((i, j, big))
    bound = 0
    for i, j, big in pairs:
        redundant = False
        for k in range(n):
            if k in (i, j) or not _divides(leads[k], big):
                continue
            lik, ljk = _lcm(leads[i], leads[k]), _lcm(leads[j], leads[k])
            if lik != big and ljk != big and _divides(lik, big) and _divides(ljk, big):
                redundant = True
                break
        if not redundant:
            bound = max(bound, sum(big))
    return bound


class Staircase:
    """Lazy graded dimensions of the ideal (g_1, ..., g_s) in k[x, y, z].

    Generators are sparse dicts mono -> (a, b) mpq pairs over a field with
    alpha^2 = c1*alpha + c0 (pass c1 = c0 = 0 over Q; the pair arithmetic is
    then exact with b = 0 throughout).
    """

    def __init__(self, generators: list[dict[Mono, tuple]], degree: int,
                 c1=_mpq(0), c0=_mpq(0)):
        self.gens = [g for g in generators if g]
        self.gen_degree = degree
        self.c1 = _mpq(c1)
        self.c0 = _mpq(c0)
        self.leads: list[Mono] = []
        self._dims: dict[int, int] = {}
        self._rows: dict[Mono, dict[Mono, tuple]] | None = None
        self._level = degree - 1
        self._certified = False
        for k in range(degree):
            self._dims[k] = 0

    # -- exact elimination ------------------------------------------------

    def _insert(self, pivots: dict, order: dict[Mono, int], row: dict) -> Mono | None:
        c1, c0 = self.c1, self.c0
        while row:
            lead = min(row, key=order.__getitem__)
            piv = pivots.get(lead)
            if piv is None:
                a, b = row[lead]
                n = a * a + c1 * a * b - c0 * b * b
                ia, ib = (a + c1 * b) / n, -b / n
                pivots[lead] = {
                    m: (u * ia + c0 * v * ib, u * ib + v * ia + c1 * v * ib)
                    for m, (u, v) in row.items()}
                return lead
            qa, qb = row[lead]
            for m, (c, d) in piv.items():
                x = row.get(m)
                pa = qa * c + c0 * qb * d
                pb = qa * d + qb * c + c1 * qb * d
                if x is None:
                    if pa or pb:
                        row[m] = (-pa, -pb)
                else:
                    u, v = x[0] - pa, x[1] - pb
                    if u or v:
                        row[m] = (u, v)
                    else:
                        del row[m]
        return None

    def _advance(self) -> None:
        """Eliminate one more degree exactly."""
        k = self._level + 1
        order = {m: i for i, m in enumerate(monomials_drl(k))}
        if self._rows is None:
            rows = [dict(g) for g in self.gens]
        else:
            rows = []
            for piv in self._rows.values():
                for s in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    rows.append({(m[0] + s[0], m[1] + s[1], m[2] + s[2]): c
                                 for m, c in piv.items()})
        pivots: dict[Mono, dict] = {}
        for row in rows:
            lead = self._insert(pivots, order, row)
            if lead is not None and not any(_divides(L, lead) for L in self.leads):
                self.leads.append(lead)
        self._rows = pivots
        self._dims[k] = len(pivots)
        self._level = k
        if self.leads:
            last_lead = max(sum(L) for L in self.leads)
            if k >= max(_pair_degree_bound(self.leads), last_lead):
                self._certified = True
                self._rows = None  # basis no longer needed

    def _lt_dim(self, k: int) -> int:
        n = 0
        for m in monomials_drl(k):
            for L in self.leads:
                if _divides(L, m):
                    n += 1
                    break
        return n

    # -- public -----------------------------------------------------------

    def dim_ideal(self, k: int) -> int:
        """Dimension of the degree-k graded piece of the ideal."""
        if k < 0:
            return 0
        got = self._dims.get(k)
        if got is not None:
            return got
        while not self._certified and self._level < k:
            self._advance()
        if k <= self._level:
            return self._dims[k]
        val = self._lt_dim(k)
        self._dims[k] = val
        return val

    def dim_quotient(self, k: int) -> int:
        if k < 0:
            return 0
        return dim_forms(k) - self.dim_ideal(k)

    @property
    def certified_level(self) -> int:
        return self._level
