"""Exact arithmetic over Q and quadratic extensions Q(alpha), plus exact
linear algebra (rank / kernel bases) used by every other module.

A quadratic field is described by its defining relation alpha^2 = c1*alpha + c0
with rational c1, c0 and t^2 - c1*t - c0 irreducible over Q.  Elements are
pairs a + b*alpha of rationals kept in canonical (fully reduced) form, so
equality is structural.  All arithmetic is exact; there is no floating point
anywhere in this package.

Elimination works over the field with monic pivot rows (each stored pivot row
is scaled so its leading entry is 1).  Pivots are chosen deterministically:
rows are processed in input order and each row is reduced at its leading
position against the stored pivot there, so identical inputs give identical
echelon forms.  Kernel bases are returned in reduced row-echelon form of the
kernel subspace, which makes them canonical (basis-choice independent).
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ReducibleMinimalPolynomial

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a hard dep, but degrade
    _mpq = Fraction

Rational = Fraction

_ZERO = _mpq(0)
_ONE = _mpq(1)


def to_mpq(q):
    """Engine-number from anything rational-like (Fraction, int, mpq)."""
    return _mpq(q.numerator, q.denominator) if not isinstance(q, int) else _mpq(q)


def to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    return rn * rn == n and rd * rd == d


class QuadField:
    """Q or a quadratic extension Q(alpha) with alpha^2 = c1*alpha + c0."""

    __slots__ = ("c1", "c0", "is_rational", "_c1q", "_c0q")

    def __init__(self, c1: Rational | int | str | None = None,
                 c0: Rational | int | str | None = None,
                 rational: bool = False):
        if rational:
            self.is_rational = True
            self.c1 = Fraction(0)
            self.c0 = Fraction(0)
        else:
            if c1 is None or c0 is None:
                raise ValueError("quadratic field needs both c1 and c0")
            self.is_rational = False
            self.c1 = Fraction(c1)
            self.c0 = Fraction(c0)
            disc = self.c1 * self.c1 + 4 * self.c0
            if _is_rational_square(disc):
                raise ReducibleMinimalPolynomial(
                    f"t^2 - ({self.c1})t - ({self.c0}) has a rational root")
        self._c1q = to_mpq(self.c1)
        self._c0q = to_mpq(self.c0)

    @classmethod
    def rationals(cls) -> QuadField:
        return cls(rational=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadField):
            return NotImplemented
        if self.is_rational or other.is_rational:
            return self.is_rational and other.is_rational
        return self.c1 == other.c1 and self.c0 == other.c0

    def __hash__(self) -> int:
        return hash((self.is_rational, self.c1, self.c0))

    def __repr__(self) -> str:
        if self.is_rational:
            return "QQ"
        return f"QQ(alpha: alpha^2 = {self.c1}*alpha + {self.c0})"

    def element(self, a, b=0) -> FieldElement:
        return FieldElement(self, Fraction(a), Fraction(b))

    def zero(self) -> FieldElement:
        return FieldElement(self, Fraction(0), Fraction(0))

    def one(self) -> FieldElement:
        return FieldElement(self, Fraction(1), Fraction(0))

    def alpha(self) -> FieldElement:
        if self.is_rational:
            raise FieldMismatch("QQ has no generator alpha")
        return FieldElement(self, Fraction(0), Fraction(1))


QQ = QuadField.rationals()


class FieldElement:
    """Value a + b*alpha in a fixed QuadField; b = 0 when the field is Q."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadField, a: Fraction, b: Fraction = Fraction(0)):
        if field.is_rational and b:
            raise FieldMismatch("nonzero alpha part in a rational field element")
        self.field = field
        self.a = a
        self.b = b

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (self.field == other.field and self.a == other.a
                and self.b == other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.a - other.a, self.b - other.b)

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, -self.a, -self.b)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        f = self.field
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if f.is_rational:
            return FieldElement(f, a1 * a2, Fraction(0))
        bb = b1 * b2
        return FieldElement(f, a1 * a2 + f.c0 * bb,
                            a1 * b2 + b1 * a2 + f.c1 * bb)

    def norm(self) -> Fraction:
        """Product with the conjugate a + b*(c1 - alpha); a rational."""
        f = self.field
        return self.a * self.a + f.c1 * self.a * self.b - f.c0 * self.b * self.b

    def inverse(self) -> FieldElement:
        if not self:
            raise DivisionByZero("inverse of zero")
        f = self.field
        if f.is_rational:
            return FieldElement(f, 1 / self.a, Fraction(0))
        n = self.norm()
        return FieldElement(f, (self.a + f.c1 * self.b) / n, -self.b / n)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def scale(self, q: Rational | int) -> FieldElement:
        q = Fraction(q)
        return FieldElement(self.field, self.a * q, self.b * q)

    def sort_key(self) -> tuple:
        return (self.a, self.b)

    def __repr__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*alpha"
        return f"{self.a} + {self.b}*alpha"


def element_arithmetic(lhs: FieldElement, rhs: FieldElement, op: str) -> FieldElement:
    """Dispatch add | sub | mul | div on two elements of one field."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# internal elimination engine: rows are flat lists of mpq with stride 1 (over
# Q) or 2 (pairs a, b over a quadratic field)


def _pair_reduce(row, piv, lead, c1, c0):
    qa, qb = row[lead], row[lead + 1]
    n = len(row)
    for j in range(lead, n, 2):
        c, d = piv[j], piv[j + 1]
        if c or d:
            row[j] -= qa * c + c0 * qb * d
            row[j + 1] -= qa * d + qb * c + c1 * qb * d


def _pair_monic(row, lead, c1, c0):
    a, b = row[lead], row[lead + 1]
    n = a * a + c1 * a * b - c0 * b * b
    ia, ib = (a + c1 * b) / n, -b / n
    out = [_ZERO] * len(row)
    for j in range(lead, len(row), 2):
        u, v = row[j], row[j + 1]
        if u or v:
            out[j] = u * ia + c0 * v * ib
            out[j + 1] = u * ib + v * ia + c1 * v * ib
    return out


class _Echelon:
    """Incremental monic row echelon over Q or Q(alpha).

    stride 1: entries are mpq.  stride 2: entries are (a, b) pairs flattened,
    with alpha^2 = c1*alpha + c0.
    """

    def __init__(self, width: int, stride: int, c1=_ZERO, c0=_ZERO):
        self.width = width
        self.stride = stride
        self.c1 = c1
        self.c0 = c0
        self.pivots: dict[int, list] = {}

    def _lead(self, row, start):
        n = self.width
        if self.stride == 1:
            j = start
            while j < n and not row[j]:
                j += 1
            return j
        j = start
        while j < n and not row[j] and not row[j + 1]:
            j += 2
        return j

    def insert(self, row: list) -> int | None:
        """Reduce row against the echelon; store it if independent.

        Returns the new pivot position, or None when the row reduced to zero.
        The stored pivot row is monic.  `row` is consumed.
        """
        lead = self._lead(row, 0)
        n = self.width
        pivots = self.pivots
        if self.stride == 1:
            while lead < n:
                piv = pivots.get(lead)
                if piv is None:
                    inv = 1 / row[lead]
                    pivots[lead] = [v * inv if v else v for v in row]
                    return lead
                q = row[lead]
                for j in range(lead, n):
                    if piv[j]:
                        row[j] -= q * piv[j]
                lead = self._lead(row, lead)
            return None
        while lead < n:
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _pair_monic(row, lead, self.c1, self.c0)
                return lead
            _pair_reduce(row, piv, lead, self.c1, self.c0)
            lead = self._lead(row, lead)
        return None

    def rank(self) -> int:
        return len(self.pivots)

    def reduce_fully(self) -> None:
        """Back-substitute so every pivot row is zero at other pivots."""
        for lead in sorted(self.pivots, reverse=True):
            piv = self.pivots[lead]
            for lead2, row2 in self.pivots.items():
                if lead2 < lead:
                    if self.stride == 1:
                        q = row2[lead]
                        if q:
                            for j in range(lead, self.width):
                                if piv[j]:
                                    row2[j] -= q * piv[j]
                    else:
                        if row2[lead] or row2[lead + 1]:
                            _pair_reduce(row2, piv, lead, self.c1, self.c0)


def _field_consts(field: QuadField):
    return field._c1q, field._c0q


class ExactMatrix:
    """Rectangular matrix of FieldElement entries over one QuadField."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: QuadField, entries: list[list[FieldElement]]):
        self.field = field
        self.entries = entries
        self.nrows = len(entries)
        self.ncols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
            for e in row:
                if e.field != field:
                    raise FieldMismatch("matrix entry in a different field")

    @classmethod
    def from_rows(cls, field: QuadField, rows) -> ExactMatrix:
        ent = [[x if isinstance(x, FieldElement) else field.element(x)
                for x in row] for row in rows]
        return cls(field, ent)

    def _flat_rows(self):
        """Rows as flat mpq lists in the engine layout."""
        if self.field.is_rational:
            return [[to_mpq(e.a) for e in row] for row in self.entries], 1
        out = []
        for row in self.entries:
            fr = []
            for e in row:
                fr.append(to_mpq(e.a))
                fr.append(to_mpq(e.b))
            out.append(fr)
        return out, 2

    def rank(self) -> int:
        rows, stride = self._flat_rows()
        c1, c0 = _field_consts(self.field)
        ech = _Echelon(self.ncols * stride, stride, c1, c0)
        for r in rows:
            ech.insert(r)
        return ech.rank()

    def kernel_basis(self) -> list[list[FieldElement]]:
        """Basis of the right kernel {v : M v = 0}, canonical echelon form."""
        return kernel_basis(self)

    def multiply_vector(self, v: list[FieldElement]) -> list[FieldElement]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        zero = self.field.zero()
        out = []
        for row in self.entries:
            s = zero
            for e, x in zip(row, v):
                if e and x:
                    s = s + e * x
            out.append(s)
        return out


def matrix_rank(m: ExactMatrix) -> int:
    return m.rank()


def kernel_basis(m: ExactMatrix) -> list[list[FieldElement]]:
    """Right-kernel basis of m, deterministic.

    The columns of m (augmented with identity coordinates) are eliminated in
    column order; combinations that die in the matrix part are kernel vectors.
    The collected vectors are then brought to reduced row-echelon form, so the
    output depends only on the kernel subspace and the column order.
    """
    field = m.field
    stride = 1 if field.is_rational else 2
    c1, c0 = _field_consts(field)
    mwidth = m.nrows * stride
    width = mwidth + m.ncols * stride
    ech = _Echelon(mwidth, stride, c1, c0)
    kernel_rows = []
    for j in range(m.ncols):
        row = [_ZERO] * width
        if stride == 1:
            for i in range(m.nrows):
                e = m.entries[i][j]
                if e.a:
                    row[i] = to_mpq(e.a)
            row[mwidth + j] = _ONE
        else:
            for i in range(m.nrows):
                e = m.entries[i][j]
                if e.a or e.b:
                    row[2 * i] = to_mpq(e.a)
                    row[2 * i + 1] = to_mpq(e.b)
            row[mwidth + 2 * j] = _ONE
        # insert, but a row whose matrix part vanishes is a kernel combo
        res = _insert_tracked(ech, row, mwidth)
        if res is not None:
            kernel_rows.append(res[mwidth:])
    # canonicalize: reduced row echelon of the kernel vectors
    kech = _Echelon(m.ncols * stride, stride, c1, c0)
    for row in kernel_rows:
        kech.insert(list(row))
    kech.reduce_fully()
    out = []
    for lead in sorted(kech.pivots):
        row = kech.pivots[lead]
        if stride == 1:
            vec = [FieldElement(field, to_fraction(q)) for q in row]
        else:
            vec = [FieldElement(field, to_fraction(row[2 * i]),
                                to_fraction(row[2 * i + 1]))
                   for i in range(m.ncols)]
        out.append(vec)
    return out


def _insert_tracked(ech: _Echelon, row: list, mwidth: int):
    """Insert into an echelon whose pivots live in the first mwidth slots.

    Reduction applies to the full (augmented) row; returns the reduced row if
    its matrix part vanished, else None after storing it as a pivot.
    """
    stride, n = ech.stride, mwidth
    lead = ech._lead(row, 0)
    pivots = ech.pivots
    if stride == 1:
        while lead < n:
            piv = pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                pivots[lead] = [v * inv if v else v for v in row]
                return None
            q = row[lead]
            for j in range(lead, len(row)):
                if piv[j]:
                    row[j] -= q * piv[j]
            lead = ech._lead(row, lead)
        return row
    while lead < n:
        piv = pivots.get(lead)
        if piv is None:
            pivots[lead] = _pair_monic(row, lead, ech.c1, ech.c0)
            return None
        _pair_reduce(row, piv, lead, ech.c1, ech.c0)
        lead = ech._lead(row, lead)
    return row
