"""Jacobian syzygies of the defining polynomial: graded pieces of the
relation module AR(f) = {(a,b,c) : a f_x + b f_y + c f_z = 0}, its minimal
generator degrees (the exponents), the minimal relation degrees, Milnor
algebra Hilbert values, and the full resolution summary with classification.

Degrees come in two gradings.  A syzygy (a, b, c) of common polynomial degree
r sits in AR-grading r; in the Milnor algebra's free resolution

    0 -> sum S(-e_j) -> sum S(1 - d - d_i) -> S^3(1-d) -> S

the generator column records the exponents d_i and the relation column the
shifts e_j = rho_j + (d-1), where rho_j is the AR-grading of the relation.
Both normalizations are reported.

Dimension bookkeeping runs through an exact staircase of the Jacobian ideal
(see _staircase); generator representatives are found degree by degree with
the graded Nakayama quotient: new generators in degree r are a complement of
span{x g, y g, z g : g in AR(f)_{r-1}} inside AR(f)_r.  Relation degrees are
peeled degreewise from the presentation-kernel dimensions, which determines
them uniquely because the relation module of a plane curve is free (it is a
second syzygy module over a three-variable polynomial ring).

The degree cap defaults to 2d-4.  A computed resolution is accepted only if
the predicted dim AR(f)_r matches the independently computed kernel dimension
for every r up to the cap, the resolution numerator P satisfies P(1) = 0,
P'(1) = 0 and P''(1)/2 = sum (m_p - 1)^2 over intersection points, and the
Milnor Hilbert function has stabilized to that same value at the last two
scanned degrees; otherwise InconsistentResolution is raised.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._staircase import Staircase
from .arrangement import (Arrangement, DensePolynomial, WeakCombinatorics,
                          defining_polynomial, dim_forms, monomials,
                          weak_combinatorics)
from .errors import CapExceeded, InconsistentResolution, PencilArrangement
from .exactnum import (ExactMatrix, FieldElement, _Echelon,
                       _field_consts, kernel_basis, to_mpq)
from .matroid import characteristic_polynomial

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction


class JacobianData:
    """A homogeneous f with its three partials; Euler's identity is checked."""

    __slots__ = ("f", "fx", "fy", "fz", "_staircase")

    def __init__(self, f: DensePolynomial):
        if f.degree < 1 or f.is_zero():
            raise ValueError("need a homogeneous polynomial of degree >= 1")
        self.f = f
        self.fx = f.partial(0)
        self.fy = f.partial(1)
        self.fz = f.partial(2)
        euler = (self.fx.shift((1, 0, 0)).add(self.fy.shift((0, 1, 0)))
                 .add(self.fz.shift((0, 0, 1))))
        assert euler == f.scale(f.degree), "Euler identity failed"
        self._staircase = None

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def staircase(self) -> Staircase:
        if self._staircase is None:
            field = self.f.field
            gens = [{m: (to_mpq(c.a), to_mpq(c.b)) for m, c in g.coeffs.items()}
                    for g in (self.fx, self.fy, self.fz)]
            c1, c0 = _field_consts(field)
            self._staircase = Staircase(gens, self.degree - 1, c1, c0)
        return self._staircase


def jacobian(f: DensePolynomial) -> JacobianData:
    return JacobianData(f)


def ar_dimension(j: JacobianData, r: int) -> int:
    """dim AR(f)_r: kernel dimension of (a,b,c) -> a f_x + b f_y + c f_z.

    Equals 3 dim S_r minus the dimension of the Jacobian ideal in degree
    r + d - 1, which the staircase provides exactly at any degree.
    """
    if r < 0:
        return 0
    return 3 * dim_forms(r) - j.staircase.dim_ideal(r + j.degree - 1)


def milnor_hilbert(j: JacobianData, k: int) -> int:
    """dim M(f)_k = dim S_k - 3 dim S_{k-d+1} + dim AR(f)_{k-d+1}."""
    if k < 0:
        return 0
    return j.staircase.dim_quotient(k)


def default_cap(d: int) -> int:
    return max(2 * d - 4, 1)


def mdr(j: JacobianData, cap: int | None = None) -> int:
    """Least r with AR(f)_r nonzero; CapExceeded if none up to the cap."""
    if cap is None:
        cap = default_cap(j.degree)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    for r in range(cap + 1):
        if ar_dimension(j, r) > 0:
            return r
    raise CapExceeded(f"no Jacobian relation of degree <= {cap}")


def syzygy_matrix(j: JacobianData, r: int) -> ExactMatrix:
    """The degree-r relation matrix: rows are degree r+d-1 monomials, columns
    are monomial multiples of the three partials, both in deg-lex order."""
    field = j.f.field
    target = monomials(r + j.degree - 1)
    idx = {m: i for i, m in enumerate(target)}
    zero = field.zero()
    cols = []
    for g in (j.fx, j.fy, j.fz):
        for m in monomials(r):
            col = [zero] * len(target)
            for mono, c in g.coeffs.items():
                col[idx[(mono[0] + m[0], mono[1] + m[1], mono[2] + m[2])]] = c
            cols.append(col)
    rows = [[cols[c][i] for c in range(len(cols))] for i in range(len(target))]
    return ExactMatrix(field, rows)


class SyzygyVector:
    """(a, b, c) with a f_x + b f_y + c f_z = 0, all of one degree."""

    __slots__ = ("a", "b", "c", "degree")

    def __init__(self, j: JacobianData, a: DensePolynomial, b: DensePolynomial,
                 c: DensePolynomial, degree: int):
        self.a, self.b, self.c = a, b, c
        self.degree = degree
        s = a.mul(j.fx).add(b.mul(j.fy)).add(c.mul(j.fz))
        if not s.is_zero():
            raise InconsistentResolution("claimed syzygy does not annihilate the partials")

    @classmethod
    def from_coefficients(cls, j: JacobianData, vec: list[FieldElement],
                          degree: int) -> SyzygyVector:
        field = j.f.field
        monos = monomials(degree)
        n = len(monos)
        polys = []
        for t in range(3):
            coeffs = {monos[i]: vec[t * n + i] for i in range(n) if vec[t * n + i]}
            polys.append(DensePolynomial(field, degree, coeffs))
        return cls(j, polys[0], polys[1], polys[2], degree)

    def __repr__(self) -> str:
        return f"SyzygyVector(degree={self.degree})"


@dataclass(frozen=True)
class RelationDegrees:
    milnor: tuple[int, ...]
    ar: tuple[int, ...]


@dataclass
class ResolutionSummary:
    label: str
    d: int
    m: int
    exponents: tuple[int, ...]
    relation_degrees: tuple[int, ...]     # Milnor shifts e_j
    relation_degrees_ar: tuple[int, ...]  # rho_j = e_j - (d - 1)
    mdr: int
    classification: str
    tjurina: int
    ar_dims: dict[int, int]
    weak: WeakCombinatorics
    generators: list[SyzygyVector]

    def shape(self) -> tuple:
        """Comparable shape of the Milnor algebra's minimal free resolution."""
        return (self.d, self.exponents, self.relation_degrees)

    def resolution_shifts(self) -> dict[str, list[int]]:
        return {
            "relations": sorted(-e for e in self.relation_degrees),
            "generators": sorted(-(self.d - 1 + di) for di in self.exponents),
            "partials": [1 - self.d] * 3,
        }


# ---------------------------------------------------------------------------
# discovery engine


def _flatten(vec: list[FieldElement], stride: int) -> list:
    if stride == 1:
        return [to_mpq(e.a) for e in vec]
    out = []
    for e in vec:
        out.append(to_mpq(e.a))
        out.append(to_mpq(e.b))
    return out


def _shift_maps(r: int):
    """Column index maps for multiplying degree r-1 syzygies by x, y, z."""
    src = monomials(r - 1)
    dst = {m: i for i, m in enumerate(monomials(r))}
    maps = []
    for var in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        maps.append([dst[(m[0] + var[0], m[1] + var[1], m[2] + var[2])]
                     for m in src])
    return len(src), len(dst), maps


def _shifted(flat: list, stride: int, nsrc: int, ndst: int, mp: list[int]) -> list:
    out = [_mpq(0)] * (3 * ndst * stride)
    for t in range(3):
        base_s = t * nsrc * stride
        base_d = t * ndst * stride
        if stride == 1:
            for i in range(nsrc):
                v = flat[base_s + i]
                if v:
                    out[base_d + mp[i]] = v
        else:
            for i in range(nsrc):
                u = flat[base_s + 2 * i]
                v = flat[base_s + 2 * i + 1]
                if u or v:
                    out[base_d + 2 * mp[i]] = u
                    out[base_d + 2 * mp[i] + 1] = v
    return out


def _discover(j: JacobianData, cap: int, full_until: int = 0):
    """Graded Nakayama scan: returns (generators, relation AR-degrees).

    Runs the exact kernel/span computations from mdr upward until the
    candidate resolution closes (relation count and degree sum forced by the
    free relation module), or through `full_until` if larger.
    """
    d = j.degree
    field = j.f.field
    stride = 1 if field.is_rational else 2
    c1, c0 = _field_consts(field)
    gens: list[SyzygyVector] = []
    gen_degs: list[int] = []
    rels: list[int] = []
    prev_basis: list[list] = []

    def complete() -> bool:
        m = len(gens)
        if m < 2 or len(rels) != m - 2:
            return False
        return sum(rels) == sum(gen_degs) - (d - 1)

    r0 = mdr(j, cap)
    for r in range(r0, cap + 1):
        if complete() and r > full_until:
            break
        dim_ar = ar_dimension(j, r)
        if dim_ar == 0:
            prev_basis = []
            continue
        width = 3 * dim_forms(r) * stride
        span = _Echelon(width, stride, c1, c0)
        if prev_basis:
            nsrc, ndst, maps = _shift_maps(r)
            for flat in prev_basis:
                for mp in maps:
                    span.insert(_shifted(flat, stride, nsrc, ndst, mp))
        new_count = dim_ar - span.rank()
        if new_count < 0:
            raise InconsistentResolution(
                f"span of lower-degree syzygies exceeds dim AR in degree {r}")
        if new_count > 0:
            kernel = kernel_basis(syzygy_matrix(j, r))
            if len(kernel) != dim_ar:
                raise InconsistentResolution(
                    f"kernel dimension {len(kernel)} != {dim_ar} in degree {r}")
            basis = [_flatten(v, stride) for v in kernel]
            found = 0
            for vec, flat in zip(kernel, basis):
                if span.insert(list(flat)) is not None:
                    gens.append(SyzygyVector.from_coefficients(j, vec, r))
                    gen_degs.append(r)
                    found += 1
            if found != new_count:
                raise InconsistentResolution(
                    f"Nakayama complement mismatch in degree {r}")
            prev_basis = basis
        else:
            prev_basis = [span.pivots[lead] for lead in sorted(span.pivots)]
        # peel minimal relations of this degree from the presentation kernel
        dim_rel = sum(dim_forms(r - dg) for dg in gen_degs) - dim_ar
        known = sum(dim_forms(r - rho) for rho in rels)
        nu = dim_rel - known
        if nu < 0:
            raise InconsistentResolution(
                f"relation dimensions inconsistent in degree {r}")
        rels.extend([r] * nu)
    if not complete():
        raise CapExceeded(
            f"resolution not certified by degree {cap}; rerun with a larger cap")
    return gens, rels


def _verify_window(j: JacobianData, gen_degs, rels, cap: int) -> int | None:
    """First degree in [0, cap] where the claimed resolution's predicted
    dim AR differs from the computed one, or None."""
    for r in range(cap + 1):
        predicted = (sum(dim_forms(r - dg) for dg in gen_degs)
                     - sum(dim_forms(r - rho) for rho in rels))
        if predicted != ar_dimension(j, r):
            return r
    return None


def _resolve(j: JacobianData, cap: int):
    full_until = 0
    while True:
        gens, rels = _discover(j, cap, full_until)
        bad = _verify_window(j, [g.degree for g in gens], rels, cap)
        if bad is None:
            return gens, rels
        if full_until >= cap:
            raise InconsistentResolution(
                f"resolution inconsistent at degree {bad} even with a full scan")
        full_until = max(bad, full_until + 1)


def minimal_generators(j: JacobianData, cap: int | None = None) -> list[SyzygyVector]:
    """Minimal generating syzygies, degree by degree via graded Nakayama.

    Representatives are the canonical kernel-echelon vectors that complement
    span{x g, y g, z g} over the previous degree, so output is reproducible.
    """
    if cap is None:
        cap = default_cap(j.degree)
    gens, _ = _resolve(j, cap)
    return gens


def relation_degrees(j: JacobianData, gens: list[SyzygyVector],
                     cap: int | None = None) -> RelationDegrees:
    """Minimal relation degrees among the given generators, both gradings.

    The presentation kernel of sum S(-d_i) -> AR(f) is free (second syzygy
    module over k[x,y,z]), so its shifts are peeled degreewise from exact
    dimension counts; consistency over the whole window is enforced.
    """
    if cap is None:
        cap = default_cap(j.degree)
    d = j.degree
    gen_degs = sorted(g.degree for g in gens)
    rels: list[int] = []
    want = len(gen_degs) - 2
    for rho in range(min(gen_degs), cap + 1):
        dim_rel = sum(dim_forms(rho - dg) for dg in gen_degs) - ar_dimension(j, rho)
        known = sum(dim_forms(rho - r0) for r0 in rels)
        nu = dim_rel - known
        if nu < 0:
            raise InconsistentResolution(
                f"relation dimensions inconsistent in degree {rho}")
        rels.extend([rho] * nu)
        if len(rels) == want and sum(rels) == sum(gen_degs) - (d - 1):
            break
    if len(rels) != want or sum(rels) != sum(gen_degs) - (d - 1):
        raise CapExceeded(f"relations not certified by degree {cap}")
    bad = _verify_window(j, gen_degs, rels, cap)
    if bad is not None:
        raise InconsistentResolution(f"resolution inconsistent at degree {bad}")
    return RelationDegrees(milnor=tuple(r + d - 1 for r in rels),
                           ar=tuple(rels))


def resolution_summary(a: Arrangement, max_degree: int | None = None) -> ResolutionSummary:
    """Full pipeline: Jacobian, generators, relations, Hilbert checks, and
    classification of the Milnor algebra's minimal free resolution."""
    d = len(a.lines)
    if d < 3:
        raise ValueError("resolution requires at least 3 lines")
    w = weak_combinatorics(a)
    if w.max_multiplicity() == d:
        raise PencilArrangement("pencil arrangements are excluded (rank < 3)")
    cap = max_degree if max_degree is not None else default_cap(d)
    tau = w.tjurina()
    j = jacobian(defining_polynomial(a))
    gens, rels = _resolve(j, cap)
    exps = tuple(sorted(g.degree for g in gens))
    m = len(exps)
    e_milnor = tuple(sorted(r + d - 1 for r in rels))

    if m == 2:
        if exps[0] + exps[1] != d - 1:
            raise InconsistentResolution(
                f"2-syzygy with d1+d2={exps[0] + exps[1]} != d-1={d - 1}")
        classification = "Free"
    elif m == 3 and exps[0] + exps[1] == d:
        classification = "PlusOneGenerated"
    else:
        classification = f"{m}-syzygy"

    if m >= 3 and sum(e_milnor) != (m - 3) * (d - 1) + sum(exps):
        raise InconsistentResolution("relation degree sum identity failed")

    # resolution numerator P(T) = 1 - 3T^{d-1} + sum T^{d-1+d_i} - sum T^{e_j}
    terms = ([(1, 0), (-3, d - 1)] + [(1, d - 1 + di) for di in exps]
             + [(-1, e) for e in e_milnor])
    p1 = sum(c for c, _ in terms)
    dp1 = sum(c * k for c, k in terms)
    ddp1 = sum(c * k * (k - 1) for c, k in terms)
    if p1 != 0 or dp1 != 0:
        raise InconsistentResolution("resolution numerator fails P(1)=P'(1)=0")
    if ddp1 != 2 * tau:
        raise InconsistentResolution(
            f"P''(1)/2 = {ddp1 // 2} != combinatorial Tjurina number {tau}")
    for k in (3 * d - 6, 3 * d - 5):
        if milnor_hilbert(j, k) != tau:
            raise InconsistentResolution(
                f"Milnor Hilbert function not stabilized at degree {k}")
    if classification == "Free":
        cp = characteristic_polynomial(w)
        if cp.integer_roots != exps:
            raise InconsistentResolution(
                f"free with exponents {exps} but chi0 = {cp}")

    mdr0 = mdr(j, cap)
    if mdr0 != exps[0]:
        raise InconsistentResolution("mdr differs from the smallest exponent")

    return ResolutionSummary(
        label=a.label, d=d, m=m, exponents=exps,
        relation_degrees=e_milnor, relation_degrees_ar=tuple(sorted(rels)),
        mdr=mdr0, classification=classification, tjurina=tau,
        ar_dims={r: ar_dimension(j, r) for r in range(cap + 1)},
        weak=w, generators=gens)
