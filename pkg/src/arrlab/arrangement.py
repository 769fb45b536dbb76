"""Line arrangements over an exact field: parsing, intersection-point
combinatorics, defining polynomials, and projective changes of coordinates.

File format (JSON, UTF-8)::

    {
      "label": "QA",
      "field": {"alpha_sq_c1": "0/1", "alpha_sq_c0": "-1/1"},
      "lines": [ [["1/1","0/1"], ["0/1","1/1"], ["0/1","0/1"]], ... ]
    }

The field entry describes alpha^2 = c1*alpha + c0 and is omitted for Q.
Each line is a coefficient triple for a*x + b*y + c*z; each coefficient is a
pair [a, b] meaning a + b*alpha with rationals written as "p/q" strings.
Canonical serialization keeps the key order above, lines in input order, and
all rationals fully reduced.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path

from .errors import (DuplicateLine, MalformedInput, SingularTransform,
                     ZeroLine)
from .exactnum import QQ, FieldElement, QuadField

# monomials of one degree in the fixed deg-lex order with x > y > z


def monomials(k: int) -> list[tuple[int, int, int]]:
    return [(i, j, k - i - j) for i in range(k, -1, -1)
            for j in range(k - i, -1, -1)]


def dim_forms(k: int) -> int:
    """Dimension of the space of degree-k forms in x, y, z."""
    return comb(k + 2, 2) if k >= 0 else 0


class Line:
    """A projective line a*x + b*y + c*z = 0 in canonical form.

    Canonical form scales the triple so its first nonzero coefficient is 1;
    two proportional triples therefore compare equal structurally.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: tuple[FieldElement, FieldElement, FieldElement]):
        first = next((c for c in coeffs if c), None)
        if first is None:
            raise ZeroLine("all three coefficients are zero")
        inv = first.inverse()
        self.coeffs = tuple(c * inv for c in coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Line) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def key(self) -> tuple:
        return tuple(c.sort_key() for c in self.coeffs)

    def evaluate(self, point: tuple[FieldElement, ...]) -> FieldElement:
        a, b, c = self.coeffs
        x, y, z = point
        return a * x + b * y + c * z

    def __repr__(self) -> str:
        a, b, c = self.coeffs
        return f"Line({a}, {b}, {c})"


class Arrangement:
    """An ordered list of pairwise distinct lines over one field."""

    __slots__ = ("field", "lines", "label")

    def __init__(self, field: QuadField, lines: list[Line], label: str = ""):
        seen = {}
        for i, ln in enumerate(lines):
            for c in ln.coeffs:
                if c.field != field:
                    raise MalformedInput("line coefficients outside the declared field")
            k = ln.key()
            if k in seen:
                raise DuplicateLine(f"lines {seen[k] + 1} and {i + 1} coincide")
            seen[k] = i
        self.field = field
        self.lines = tuple(lines)
        self.label = label

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def d(self) -> int:
        return len(self.lines)

    def __repr__(self) -> str:
        return f"Arrangement({self.label or 'unlabeled'}, d={len(self.lines)})"


@dataclass(frozen=True)
class IntersectionPoint:
    point: tuple[FieldElement, FieldElement, FieldElement]
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


class WeakCombinatorics:
    """The vector (d; t_2, ..., t_m): line count and multiple-point counts."""

    __slots__ = ("d", "t")

    def __init__(self, d: int, t: dict[int, int]):
        t = {m: c for m, c in t.items() if c}
        if any(m < 2 for m in t):
            raise MalformedInput("multiplicities start at 2")
        pairs = sum(comb(m, 2) * c for m, c in t.items())
        if pairs != comb(d, 2):
            raise MalformedInput(
                f"pair count {pairs} != C({d},2)={comb(d, 2)}; not a line arrangement")
        self.d = d
        self.t = dict(sorted(t.items()))

    def as_vector(self) -> list[int]:
        """[d, t_2, t_3, ..., t_max] with inner zeros kept, trailing dropped."""
        if not self.t:
            return [self.d]
        mmax = max(self.t)
        return [self.d] + [self.t.get(m, 0) for m in range(2, mmax + 1)]

    def max_multiplicity(self) -> int:
        return max(self.t) if self.t else 0

    def tjurina(self) -> int:
        """Sum of (m-1)^2 over intersection points (ordinary multiple points)."""
        return sum((m - 1) ** 2 * c for m, c in self.t.items())

    @classmethod
    def from_vector(cls, vec: list[int]) -> WeakCombinatorics:
        d, *ts = vec
        return cls(d, {m + 2: c for m, c in enumerate(ts)})

    @classmethod
    def parse(cls, text: str) -> WeakCombinatorics:
        """Parse "(13; 16, 6, 4, 2)" style literals."""
        s = text.strip().strip("()")
        try:
            head, tail = s.split(";")
            vec = [int(head)] + [int(x) for x in tail.replace(",", " ").split()]
        except ValueError as e:
            raise MalformedInput(f"bad weak-combinatorics literal {text!r}") from e
        return cls.from_vector(vec)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, WeakCombinatorics)
                and self.d == other.d and self.t == other.t)

    def __hash__(self) -> int:
        return hash((self.d, tuple(sorted(self.t.items()))))

    def __repr__(self) -> str:
        inner = ", ".join(str(x) for x in self.as_vector()[1:])
        return f"({self.d}; {inner})"


class DensePolynomial:
    """Homogeneous polynomial in x, y, z with exact field coefficients.

    Stored sparsely as exponent-triple -> coefficient with zero coefficients
    omitted; term order for iteration and serialization is deg-lex x > y > z.
    """

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: QuadField, degree: int,
                 coeffs: dict[tuple[int, int, int], FieldElement]):
        self.field = field
        self.degree = degree
        self.coeffs = {m: c for m, c in coeffs.items() if c}
        for m in self.coeffs:
            if sum(m) != degree or min(m) < 0:
                raise ValueError(f"term {m} is not of degree {degree}")

    def terms(self):
        """Terms in deg-lex order (largest first)."""
        return sorted(self.coeffs.items(), key=lambda t: (-t[0][0], -t[0][1]))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, DensePolynomial) and self.field == other.field
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def mul_linear(self, line: Line) -> DensePolynomial:
        a, b, c = line.coeffs
        out: dict[tuple[int, int, int], FieldElement] = {}
        for (i, j, k), co in self.coeffs.items():
            for mono, l in (((i + 1, j, k), a), ((i, j + 1, k), b),
                            ((i, j, k + 1), c)):
                if not l:
                    continue
                v = co * l
                prev = out.get(mono)
                if prev is None:
                    out[mono] = v
                else:
                    s = prev + v
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return DensePolynomial(self.field, self.degree + 1, out)

    def mul(self, other: DensePolynomial) -> DensePolynomial:
        out: dict[tuple[int, int, int], FieldElement] = {}
        for (i, j, k), co in self.coeffs.items():
            for (a, b, c), co2 in other.coeffs.items():
                mono = (i + a, j + b, k + c)
                v = co * co2
                prev = out.get(mono)
                if prev is None:
                    out[mono] = v
                else:
                    s = prev + v
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return DensePolynomial(self.field, self.degree + other.degree, out)

    def partial(self, axis: int) -> DensePolynomial:
        out = {}
        for mono, co in self.coeffs.items():
            e = mono[axis]
            if e:
                m2 = list(mono)
                m2[axis] -= 1
                out[tuple(m2)] = co.scale(e)
        return DensePolynomial(self.field, self.degree - 1, out)

    def shift(self, mono: tuple[int, int, int]) -> DensePolynomial:
        """Multiply by the monomial x^i y^j z^k."""
        i, j, k = mono
        out = {(a + i, b + j, c + k): co for (a, b, c), co in self.coeffs.items()}
        return DensePolynomial(self.field, self.degree + i + j + k, out)

    def add(self, other: DensePolynomial) -> DensePolynomial:
        if self.degree != other.degree and self.coeffs and other.coeffs:
            raise ValueError("adding forms of different degrees")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            prev = out.get(m)
            s = c if prev is None else prev + c
            if s:
                out[m] = s
            elif prev is not None:
                del out[m]
        return DensePolynomial(self.field, max(self.degree, other.degree), out)

    def scale(self, q) -> DensePolynomial:
        return DensePolynomial(self.field, self.degree,
                               {m: c.scale(q) for m, c in self.coeffs.items()})

    def evaluate(self, point) -> FieldElement:
        x, y, z = point
        total = self.field.zero()
        for (i, j, k), co in self.coeffs.items():
            v = co
            for base, e in ((x, i), (y, j), (z, k)):
                for _ in range(e):
                    v = v * base
            total = total + v
        return total

    def __repr__(self) -> str:
        names = "xyz"
        parts = []
        for (i, j, k), co in self.terms()[:8]:
            mono = "".join(f"{n}^{e}" if e > 1 else (n if e else "")
                           for n, e in zip(names, (i, j, k)))
            parts.append(f"({co}){mono}")
        more = " + ..." if len(self.coeffs) > 8 else ""
        return " + ".join(parts) + more


# ---------------------------------------------------------------------------
# operations


def parse_rational(s) -> Fraction:
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedInput(f"bad rational literal {s!r}") from e
    if isinstance(s, int):
        return Fraction(s)
    raise MalformedInput(f"rational must be a 'p/q' string, got {type(s).__name__}")


def _parse_coeff(field: QuadField, c) -> FieldElement:
    if isinstance(c, (str, int)):
        return FieldElement(field, parse_rational(c))
    if isinstance(c, list) and len(c) in (1, 2):
        a = parse_rational(c[0])
        b = parse_rational(c[1]) if len(c) == 2 else Fraction(0)
        if field.is_rational and b:
            raise MalformedInput("alpha coefficient in a Q arrangement")
        return FieldElement(field, a, b)
    raise MalformedInput(f"bad coefficient {c!r}")


def parse_field(obj) -> QuadField:
    if obj is None:
        return QQ
    try:
        c1 = parse_rational(obj["alpha_sq_c1"])
        c0 = parse_rational(obj["alpha_sq_c0"])
    except (KeyError, TypeError) as e:
        raise MalformedInput("field must give alpha_sq_c1 and alpha_sq_c0") from e
    return QuadField(c1, c0)


def parse_arrangement(source: str | Path | dict) -> Arrangement:
    """Parse an arrangement from a JSON file path, JSON text, or dict."""
    if isinstance(source, dict):
        obj = source
    else:
        looks_like_path = isinstance(source, Path) or (
            "\n" not in source and (source.endswith(".json")
                                    or Path(source).exists()))
        if looks_like_path:
            p = Path(source)
            if not p.exists():
                raise MalformedInput(f"no such file: {source}")
            text = p.read_text()
        else:
            text = str(source)
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"invalid JSON: {e}") from e
    if not isinstance(obj, dict) or "lines" not in obj:
        raise MalformedInput("arrangement JSON needs a 'lines' key")
    field = parse_field(obj.get("field"))
    lines = []
    for entry in obj["lines"]:
        if not isinstance(entry, list) or len(entry) != 3:
            raise MalformedInput(f"line must be a coefficient triple, got {entry!r}")
        lines.append(Line(tuple(_parse_coeff(field, c) for c in entry)))
    return Arrangement(field, lines, label=str(obj.get("label", "")))


def _rat_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def serialize_arrangement(a: Arrangement) -> str:
    """Canonical JSON text: fixed key order, reduced rationals."""
    obj: dict = {"label": a.label}
    if not a.field.is_rational:
        obj["field"] = {"alpha_sq_c1": _rat_str(a.field.c1),
                        "alpha_sq_c0": _rat_str(a.field.c0)}
    obj["lines"] = [[[_rat_str(c.a), _rat_str(c.b)] for c in ln.coeffs]
                    for ln in a.lines]
    return json.dumps(obj, indent=1)


def _cross(l1: Line, l2: Line):
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    return (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)


def _canonical_point(p):
    first = next((c for c in p if c), None)
    if first is None:
        return None
    inv = first.inverse()
    return tuple(c * inv for c in p)


def intersection_points(a: Arrangement) -> list[IntersectionPoint]:
    """All pairwise intersection points, deduplicated and sorted.

    Every unordered pair of distinct projective lines meets in exactly one
    point, so the points are the canonicalized pairwise cross products; the
    incidence lists are then recomputed exactly against every line.
    """
    if len(a.lines) < 2:
        return []
    seen: dict[tuple, tuple] = {}
    n = len(a.lines)
    for i in range(n):
        for j in range(i + 1, n):
            p = _canonical_point(_cross(a.lines[i], a.lines[j]))
            key = tuple(c.sort_key() for c in p)
            if key not in seen:
                seen[key] = p
    out = []
    for key in sorted(seen):
        p = seen[key]
        incident = tuple(i for i, ln in enumerate(a.lines) if not ln.evaluate(p))
        out.append(IntersectionPoint(point=p, incident=incident))
    return out


def weak_combinatorics(a: Arrangement) -> WeakCombinatorics:
    t: dict[int, int] = {}
    for pt in intersection_points(a):
        m = pt.multiplicity
        t[m] = t.get(m, 0) + 1
    return WeakCombinatorics(len(a.lines), t)


def defining_polynomial(a: Arrangement) -> DensePolynomial:
    """Exact expansion of the product of all line forms; degree = d."""
    f = DensePolynomial(a.field, 0, {(0, 0, 0): a.field.one()})
    for ln in a.lines:
        f = f.mul_linear(ln)
    return f


def _invert3(field: QuadField, g):
    rows = [[x if isinstance(x, FieldElement) else field.element(x) for x in r]
            for r in g]
    a, b, c = rows[0]
    d, e, f = rows[1]
    gg, h, i = rows[2]
    co = [[e * i - f * h, c * h - b * i, b * f - c * e],
          [f * gg - d * i, a * i - c * gg, c * d - a * f],
          [d * h - e * gg, b * gg - a * h, a * e - b * d]]
    det = a * co[0][0] + b * co[1][0] + c * co[2][0]
    if not det:
        raise SingularTransform("transform has determinant zero")
    inv_det = det.inverse()
    return [[co[r][s] * inv_det for s in range(3)] for r in range(3)]


def transform(a: Arrangement, g) -> Arrangement:
    """Apply the projective change of coordinates given by invertible g.

    Line coefficient vectors map by the inverse-transpose action and are
    re-canonicalized, so intersection combinatorics are preserved exactly.
    """
    ginv = _invert3(a.field, g)
    lines = []
    for ln in a.lines:
        # (g^-1)^T * coeffs  ==  row of coeffs times g^-1
        co = ln.coeffs
        new = tuple(co[0] * ginv[0][s] + co[1] * ginv[1][s] + co[2] * ginv[2][s]
                    for s in range(3))
        lines.append(Line(new))
    return Arrangement(a.field, lines, label=a.label)
