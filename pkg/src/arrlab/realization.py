"""Parametrized realization families of rank-3 matroids: coordinate matrices
whose entries are rational expressions in named parameters, constraint and
exclusion loci, component classification, exact sampling, and a-posteriori
verification that an instantiated arrangement realizes the target matroid.

Matrix entries, constraints, and component equations are stored as expression
strings over the family's parameters (with `alpha` denoting the generator of a
quadratic base field) and parsed into exact polynomial fractions; evaluation
at a parameter point is exact, and a vanishing denominator is an error rather
than a silent division.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement, Line, parse_field, parse_rational
from .errors import (ComponentEmptyOverBaseField, ConstraintViolated,
                     DegenerateLines, DenominatorZero, DuplicateLine,
                     ExcludedParameter, MalformedInput, SizeMismatch,
                     ZeroLine)
from .exactnum import FieldElement, QuadField
from .matroid import Matroid3, matroid_from_arrangement

ParameterPoint = dict[str, FieldElement]

SINGULAR = "SingularLocus"


# ---------------------------------------------------------------------------
# polynomial fractions in named parameters


class PPoly:
    """Polynomial in the family parameters with field coefficients, stored
    as exponent-vector -> coefficient."""

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field: QuadField, nvars: int, coeffs: dict):
        self.field = field
        self.nvars = nvars
        self.coeffs = {e: c for e, c in coeffs.items() if c}

    @classmethod
    def const(cls, field: QuadField, nvars: int, value: FieldElement) -> PPoly:
        return cls(field, nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, field: QuadField, nvars: int, idx: int) -> PPoly:
        e = [0] * nvars
        e[idx] = 1
        return cls(field, nvars, {tuple(e): field.one()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def add(self, other: PPoly) -> PPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            prev = out.get(e)
            s = c if prev is None else prev + c
            if s:
                out[e] = s
            elif prev is not None:
                del out[e]
        return PPoly(self.field, self.nvars, out)

    def neg(self) -> PPoly:
        return PPoly(self.field, self.nvars,
                     {e: -c for e, c in self.coeffs.items()})

    def mul(self, other: PPoly) -> PPoly:
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                prev = out.get(e)
                s = v if prev is None else prev + v
                if s:
                    out[e] = s
                elif prev is not None:
                    del out[e]
        return PPoly(self.field, self.nvars, out)

    def evaluate(self, values: list[FieldElement]) -> FieldElement:
        total = self.field.zero()
        for e, c in self.coeffs.items():
            v = c
            for base, k in zip(values, e):
                for _ in range(k):
                    v = v * base
            total = total + v
        return total


@dataclass(frozen=True)
class ParamExpr:
    """Ratio num/den of parameter polynomials; den is nonzero as a polynomial."""

    num: PPoly
    den: PPoly

    def evaluate(self, values: list[FieldElement]) -> FieldElement:
        d = self.den.evaluate(values)
        if not d:
            raise DenominatorZero("denominator vanishes at the parameter point")
        return self.num.evaluate(values) / d

    def vanishes_at(self, values: list[FieldElement]) -> bool:
        return self.evaluate(values).is_zero()


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")


def parse_expr(text: str, parameters: tuple[str, ...], field: QuadField) -> ParamExpr:
    """Parse +, -, *, /, ^ (or **), parentheses, integer literals, parameter
    names, and `alpha` for the field generator."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise MalformedInput(f"bad character in expression: {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    nvars = len(parameters)
    one = PPoly.const(field, nvars, field.one())
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def atom() -> ParamExpr:
        t = take()
        if t == "(":
            e = expr()
            if take() != ")":
                raise MalformedInput(f"unbalanced parentheses in {text!r}")
            return e
        if t == "-":
            e = atom_power()
            return ParamExpr(e.num.neg(), e.den)
        if t == "+":
            return atom_power()
        if t is None:
            raise MalformedInput(f"unexpected end of expression in {text!r}")
        if t.isdigit():
            return ParamExpr(PPoly.const(field, nvars,
                                         field.element(Fraction(int(t)))), one)
        if t == "alpha":
            return ParamExpr(PPoly.const(field, nvars, field.alpha()), one)
        if t in parameters:
            return ParamExpr(PPoly.var(field, nvars, parameters.index(t)), one)
        raise MalformedInput(f"unknown name {t!r} in expression {text!r}")

    def atom_power() -> ParamExpr:
        base = atom()
        while peek() in ("^", "**"):
            take()
            e = take()
            if e is None or not e.isdigit():
                raise MalformedInput(f"exponent must be a literal in {text!r}")
            k = int(e)
            num, den = one, one
            for _ in range(k):
                num, den = num.mul(base.num), den.mul(base.den)
            base = ParamExpr(num, den)
        return base

    def term() -> ParamExpr:
        e = atom_power()
        while peek() in ("*", "/"):
            op = take()
            rhs = atom_power()
            if op == "*":
                e = ParamExpr(e.num.mul(rhs.num), e.den.mul(rhs.den))
            else:
                if rhs.num.is_zero():
                    raise MalformedInput(f"division by zero expression in {text!r}")
                e = ParamExpr(e.num.mul(rhs.den), e.den.mul(rhs.num))
        return e

    def expr() -> ParamExpr:
        e = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            rn = rhs.num if op == "+" else rhs.num.neg()
            num = e.num.mul(rhs.den).add(rn.mul(e.den))
            e = ParamExpr(num, e.den.mul(rhs.den))
        return e

    out = expr()
    if peek() is not None:
        raise MalformedInput(f"trailing tokens in expression {text!r}")
    return out


# ---------------------------------------------------------------------------
# families


@dataclass
class RealizationFamily:
    name: str
    parameters: tuple[str, ...]
    field: QuadField
    matrix: list[list[ParamExpr]]          # 3 rows x n columns
    constraints: list[ParamExpr]
    components: dict[str, list[ParamExpr]]
    exclusions: list[ParamExpr]
    target: Matroid3

    @property
    def n(self) -> int:
        return len(self.matrix[0])

    @classmethod
    def from_json(cls, source: str | Path | dict) -> RealizationFamily:
        if isinstance(source, dict):
            obj = source
        else:
            p = Path(source)
            if not p.exists():
                raise MalformedInput(f"no such family file: {source}")
            obj = json.loads(p.read_text())
        params = tuple(obj["parameters"])
        field = parse_field(obj.get("field"))

        def pe(s: str) -> ParamExpr:
            return parse_expr(s, params, field)

        matrix = [[pe(s) for s in row] for row in obj["matrix"]]
        if len(matrix) != 3 or len({len(r) for r in matrix}) != 1:
            raise MalformedInput("matrix must have 3 equal-length rows")
        return cls(
            name=obj["name"], parameters=params, field=field, matrix=matrix,
            constraints=[pe(s) for s in obj.get("constraints", [])],
            components={k: [pe(s) for s in v]
                        for k, v in obj.get("components", {}).items()},
            exclusions=[pe(s) for s in obj.get("exclusions", [])],
            target=Matroid3.from_json(obj["target_matroid"]))

    def point_values(self, point: ParameterPoint) -> list[FieldElement]:
        vals = []
        for name in self.parameters:
            if name not in point:
                raise MalformedInput(f"missing parameter {name!r}")
            v = point[name]
            if v.field != self.field:
                raise MalformedInput(f"parameter {name!r} not in the family field")
            vals.append(v)
        return vals


def load_family(source: str | Path | dict) -> RealizationFamily:
    return RealizationFamily.from_json(source)


def parse_parameter_point(family: RealizationFamily, assignments: list[str]) -> ParameterPoint:
    """Parse name=value literals; values are "p/q" or "p/q,r/s" for a + b*alpha."""
    point: ParameterPoint = {}
    for text in assignments:
        if "=" not in text:
            raise MalformedInput(f"parameter must look like name=value: {text!r}")
        name, _, val = text.partition("=")
        name = name.strip()
        if name not in family.parameters:
            raise MalformedInput(f"unknown parameter {name!r} for family {family.name}")
        parts = val.split(",")
        a = parse_rational(parts[0].strip())
        b = parse_rational(parts[1].strip()) if len(parts) > 1 else Fraction(0)
        point[name] = FieldElement(family.field, a, b)
    return point


def instantiate(family: RealizationFamily, point: ParameterPoint) -> Arrangement:
    """Evaluate the coordinate matrix at the point; columns become lines.

    The point must satisfy every constraint and avoid every exclusion and
    denominator; proportional or zero columns raise DegenerateLines.
    """
    vals = family.point_values(point)
    for c in family.constraints:
        if not c.vanishes_at(vals):
            raise ConstraintViolated(f"constraint nonzero at {_point_str(family, point)}")
    for e in family.exclusions:
        if e.vanishes_at(vals):
            raise ExcludedParameter(f"excluded locus hit at {_point_str(family, point)}")
    columns = []
    for jcol in range(family.n):
        columns.append(tuple(family.matrix[row][jcol].evaluate(vals)
                             for row in range(3)))
    lines = []
    for col in columns:
        try:
            lines.append(Line(col))
        except ZeroLine as exc:
            raise DegenerateLines("zero column in the instantiated matrix") from exc
    label = f"{family.name}[{_point_str(family, point)}]"
    try:
        return Arrangement(family.field, lines, label=label)
    except DuplicateLine as exc:
        raise DegenerateLines(f"proportional columns: {exc}") from exc


def classify_point(family: RealizationFamily, point: ParameterPoint) -> frozenset[str]:
    """Component names whose equations vanish at the point; SingularLocus is
    added when the point lies on at least two components."""
    vals = family.point_values(point)
    for c in family.constraints:
        if not c.vanishes_at(vals):
            raise ConstraintViolated("point is not on the realization space")
    names = {name for name, eqs in family.components.items()
             if all(e.vanishes_at(vals) for e in eqs)}
    if len(names) >= 2:
        names.add(SINGULAR)
    return frozenset(names)


def verify_realizes(arrangement: Arrangement, matroid: Matroid3) -> bool:
    """True iff the collinearity matroid of the arrangement equals the given
    matroid exactly (same ground order, no collinearities added or missing)."""
    if len(arrangement.lines) != matroid.n:
        raise SizeMismatch(
            f"{len(arrangement.lines)} lines vs ground set of {matroid.n}")
    return matroid_from_arrangement(arrangement).nonbases == matroid.nonbases


def _point_str(family: RealizationFamily, point: ParameterPoint) -> str:
    parts = []
    for name in family.parameters:
        v = point.get(name)
        parts.append(f"{name}={v}")
    return ", ".join(parts)


# ---------------------------------------------------------------------------
# sampling


def _rand_rational(rng: random.Random) -> Fraction:
    # small heights keep the downstream syzygy matrices tame
    num = rng.randint(-20, 20)
    den = rng.randint(1, 10)
    return Fraction(num, den)


def _m1_candidate(component: str, rng: random.Random, field: QuadField):
    if component == "C2":
        x, z = _rand_rational(rng), _rand_rational(rng)
        return {"x": field.element(x), "y": field.element(x - z),
                "z": field.element(z)}
    if component == "C1":
        x, z = _rand_rational(rng), _rand_rational(rng)
        if x == 1:
            return None
        y = (-x * z + x + z * z - 1) / (x - 1)
        return {"x": field.element(x), "y": field.element(y),
                "z": field.element(z)}
    if component == SINGULAR:
        # on x - y - z = 0 the conic becomes (x-1)^2 = z^2 - z; the line
        # x - 1 = t z through (1, 0) parametrizes it rationally
        t = _rand_rational(rng)
        if t * t == 1:
            return None
        z = 1 / (1 - t * t)
        x = 1 + t * z
        return {"x": field.element(x), "y": field.element(x - z),
                "z": field.element(z)}
    raise MalformedInput(f"unknown component {component!r} of family m1")


def _m2_candidate(component: str, rng: random.Random, field: QuadField):
    half = Fraction(1, 2)
    xplus = FieldElement(field, half, half)    # (1 + alpha)/2, alpha^2 = -3
    xminus = FieldElement(field, half, -half)

    def curve_y(x: FieldElement):
        den = field.one() - x
        if not den:
            return None
        return (x + field.one()) / den

    if component == "curve":
        x = field.element(_rand_rational(rng))
        y = curve_y(x)
        if y is None:
            return None
        return {"x": x, "y": y}
    if component in ("x_plus", "x_minus"):
        x = xplus if component == "x_plus" else xminus
        return {"x": x, "y": field.element(_rand_rational(rng))}
    raise MalformedInput(f"unknown component {component!r} of family m2")


def _m2_singular_points(field: QuadField) -> list[ParameterPoint]:
    half = Fraction(1, 2)
    pts = []
    for sign in (1, -1):
        x = FieldElement(field, half, sign * half)
        y = (x + field.one()) / (field.one() - x)
        pts.append({"x": x, "y": y})
    return pts


def _c2_points(component: str):
    def build(field: QuadField) -> list[ParameterPoint]:
        half = Fraction(1, 2)
        sign = 1 if component == "root_plus" else -1
        return [{"e": FieldElement(field, Fraction(1), sign * half)}]
    return build


def _zacharias_candidate(component: str, rng: random.Random, field: QuadField):
    if component != "main":
        raise MalformedInput(f"unknown component {component!r} of family zacharias")
    return {"e": field.element(_rand_rational(rng))}


_CANDIDATES = {
    "m1": _m1_candidate,
    "m2": _m2_candidate,
    "zacharias": _zacharias_candidate,
}

# components with finitely many points, enumerated instead of sampled
_FINITE = {
    ("c2", "root_plus"): _c2_points("root_plus"),
    ("c2", "root_minus"): _c2_points("root_minus"),
    ("m2", SINGULAR): _m2_singular_points,
}


def _acceptable(family: RealizationFamily, component: str,
                point: ParameterPoint) -> bool:
    try:
        cls = classify_point(family, point)
        if component == SINGULAR:
            if SINGULAR not in cls:
                return False
        elif cls != frozenset({component}):
            return False
        arr = instantiate(family, point)
        return verify_realizes(arr, family.target)
    except (ConstraintViolated, ExcludedParameter, DenominatorZero,
            DegenerateLines):
        return False


def sample_component(family: RealizationFamily, component: str, count: int,
                     seed: int) -> list[ParameterPoint]:
    """Exact parameter points on one component (or the singular locus).

    Deterministic under the seed.  Candidates failing an exclusion, a
    denominator, degeneracy, membership in exactly the requested component,
    or target-matroid verification are rejected and resampled.  For
    zero-dimensional components the finitely many points are enumerated and
    at most `count` of them returned.
    """
    if component != SINGULAR and component not in family.components:
        raise MalformedInput(f"unknown component {component!r}")
    finite = _FINITE.get((family.name, component))
    if finite is not None:
        pts = [p for p in finite(family.field)
               if _acceptable(family, component, p)]
        if not pts:
            raise ComponentEmptyOverBaseField(
                f"{family.name}/{component} has no valid point")
        return pts[:count]
    gen = _CANDIDATES.get(family.name)
    if gen is None:
        raise MalformedInput(f"no sampling strategy for family {family.name!r}")
    rng = random.Random(seed)
    out: list[ParameterPoint] = []
    seen = set()
    attempts = 0
    limit = 400 * max(count, 1)
    while len(out) < count and attempts < limit:
        attempts += 1
        point = gen(component, rng, family.field)
        if point is None:
            continue
        key = tuple(sorted((k, v.a, v.b) for k, v in point.items()))
        if key in seen or not _acceptable(family, component, point):
            continue
        seen.add(key)
        out.append(point)
    if len(out) < count:
        raise ComponentEmptyOverBaseField(
            f"found only {len(out)} of {count} points on "
            f"{family.name}/{component} after {attempts} attempts")
    return out
