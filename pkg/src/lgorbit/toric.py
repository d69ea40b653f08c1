"""Line-bundle cohomology on Hirzebruch surfaces by character-wise Cech sums.

The fan of the a-th Hirzebruch surface is taken with rays

    u1 = (1, 0),  u2 = (0, 1),  u3 = (-1, -a),  u4 = (0, -1)

and maximal cones spanned by cyclically adjacent pairs.  With this choice
the divisor class conventions hold simultaneously:

    [D4] = E with E.E = -a,   [D1] = [D3] = F,   [D2] = E + a F,
    div(x^(1,0)) = D1 - D3,   div(x^(0,1)) = D2 - a D3 - D4,
    K = -2 E - (a + 2) F.

(The reflection m2 -> -m2 identifies this with the fan whose third ray is
(-1, a); there the roles of D2 and D4 trade places.)

Cohomology of a torus-invariant divisor splits by character.  Each lattice
point m contributes to the chart of a cone exactly when <m, u> >= -a_u for
every ray u of the cone, intersections of charts follow the face rule, and
the resulting four-chart Cech complex is assembled and ranked exactly over
the rationals.  Only sixteen admissibility patterns exist, so the per
-pattern cohomology is cached and the sum over a bounded character box is
cheap.  The box is enlarged and the sum recomputed as a stability guard:
every contributing region is a convex lattice polygon whose rows are
contiguous integer intervals, so a region leaking past the smaller box
always populates the enlargement annulus and trips the guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import DiagnosticError, PreconditionError, StructureError
from .gaussian import ExactMatrix, GaussianRational
from .poly import MultiHomPoly, parse_poly

Vec = Tuple[int, int]


# ----------------------------------------------------------------- the fan


@dataclass(frozen=True)
class HirzebruchFan:
    """Complete smooth fan with four rays; a is the negative-section weight."""

    a: int

    def __post_init__(self):
        if not isinstance(self.a, int) or self.a < 0:
            raise StructureError("the Hirzebruch parameter must be a nonnegative integer")
        for (i, j) in self.cones:
            u, v = self.rays[i], self.rays[j]
            if u[0] * v[1] - u[1] * v[0] != 1:
                raise StructureError("adjacent rays must span the lattice positively")

    @property
    def rays(self) -> Tuple[Vec, Vec, Vec, Vec]:
        return ((1, 0), (0, 1), (-1, -self.a), (0, -1))

    @property
    def cones(self) -> Tuple[Tuple[int, int], ...]:
        # maximal cones as index pairs into rays, cyclic counterclockwise
        return ((0, 1), (1, 2), (2, 3), (3, 0))

    def ray_self_intersection(self, i: int) -> int:
        """D_i . D_i from the wall relation u_{i-1} + u_{i+1} = b * u_i."""
        prev = self.rays[(i - 1) % 4]
        nxt = self.rays[(i + 1) % 4]
        mid = self.rays[i]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        if s[0] * mid[1] - s[1] * mid[0] != 0:
            raise StructureError("neighbor sum not collinear with the ray")
        if mid[0] != 0:
            b, r = divmod(s[0], mid[0])
        else:
            b, r = divmod(s[1], mid[1])
        if r != 0 or (b * mid[0], b * mid[1]) != s:
            raise StructureError("neighbor sum not an integer multiple of the ray")
        return -b

    def ray_pair_intersection(self, i: int, j: int) -> int:
        """D_i . D_j on the fan side: 1 when the rays span a cone, else 0."""
        if i == j:
            return self.ray_self_intersection(i)
        pair = (i, j) if (i, j) in self.cones else (j, i)
        return 1 if pair in self.cones else 0


# -------------------------------------------------------------- class types


@dataclass(frozen=True)
class PicClass:
    """Class p*E + q*F in the rank-two Picard group."""

    p: int
    q: int

    def __add__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "PicClass") -> "PicClass":
        return PicClass(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "PicClass":
        return PicClass(-self.p, -self.q)


@dataclass(frozen=True)
class ToricDivisor:
    """Integer coefficient per ray, in fan ray order."""

    coeffs: Tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.coeffs) != 4 or not all(isinstance(c, int) for c in self.coeffs):
            raise StructureError("a divisor needs four integer ray coefficients")


@dataclass(frozen=True)
class CohDims:
    h0: int
    h1: int
    h2: int

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise StructureError("cohomology dimensions must be nonnegative")

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    @property
    def triple(self) -> Tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def pic_to_divisor(fan: HirzebruchFan, c: PicClass) -> ToricDivisor:
    """Representative p*D4 + q*D1 of the class p*E + q*F."""
    return ToricDivisor((c.q, 0, 0, c.p))


def divisor_to_pic(fan: HirzebruchFan, d: ToricDivisor) -> PicClass:
    """Class modulo the two principal relations D1 ~ D3, D2 ~ a*D3 + D4."""
    a1, a2, a3, a4 = d.coeffs
    return PicClass(a2 + a4, a1 + a3 + fan.a * a2)


def principal_divisor(fan: HirzebruchFan, m: Vec) -> ToricDivisor:
    """div of the character m: coefficient <m, u> on each ray u."""
    return ToricDivisor(tuple(m[0] * u[0] + m[1] * u[1] for u in fan.rays))


def canonical_class(a: int) -> PicClass:
    return PicClass(-2, -(a + 2))


def intersection(c1: PicClass, c2: PicClass, a: int) -> int:
    """Intersection form with E.E = -a, E.F = 1, F.F = 0."""
    return -a * c1.p * c2.p + c1.p * c2.q + c1.q * c2.p


def euler_rr(c: PicClass, a: int) -> int:
    """Riemann-Roch: chi = 1 + (1/2) c.(c - K); always an integer."""
    k = canonical_class(a)
    twice = intersection(c, c - k, a)
    if twice % 2 != 0:
        raise DiagnosticError("Riemann-Roch value is not an integer")
    return 1 + twice // 2


def verify_divisor_convention(fan: HirzebruchFan) -> bool:
    """Cross-check the Picard conventions against the fan.

    Confirms [D1]=[D3]=F, [D4]=E, [D2]=E+aF, the intersection numbers of
    all ray-divisor pairs against the wall relations, vanishing of both
    principal classes, and K = -(sum of ray divisors).
    """
    a = fan.a
    e, f = PicClass(1, 0), PicClass(0, 1)
    units = [ToricDivisor(tuple(1 if k == i else 0 for k in range(4))) for i in range(4)]
    classes = [divisor_to_pic(fan, u) for u in units]
    if classes != [f, PicClass(1, a), f, e]:
        return False
    for i in range(4):
        for j in range(4):
            fan_side = fan.ray_pair_intersection(i, j)
            pic_side = intersection(classes[i], classes[j], a)
            if fan_side != pic_side:
                return False
    if intersection(e, e, a) != -a or intersection(e, f, a) != 1:
        return False
    if intersection(f, f, a) != 0:
        return False
    for m in ((1, 0), (0, 1)):
        if divisor_to_pic(fan, principal_divisor(fan, m)) != PicClass(0, 0):
            return False
    anti = ToricDivisor((-1, -1, -1, -1))
    return divisor_to_pic(fan, anti) == canonical_class(a)


# ----------------------------------------------------- character-wise Cech

# Rays carried by each simplex of the nerve of the four-chart cover.  A
# chart needs both of its cone's rays; an intersection of charts needs the
# rays of the common face.  Opposite charts meet along the torus (no rays).
_CONE_RAYS = (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 0}))


def _simplex_rays(vertices: Tuple[int, ...]) -> frozenset:
    rays = _CONE_RAYS[vertices[0]]
    for v in vertices[1:]:
        rays = rays & _CONE_RAYS[v]
    return rays


def _rank(rows: List[List[int]], width: int) -> int:
    if not rows or width == 0:
        return 0
    entries = [[GaussianRational(Fraction(x)) for x in row] for row in rows]
    return ExactMatrix(entries).rank()


@lru_cache(maxsize=None)
def _pattern_cohomology(bits: Tuple[bool, bool, bool, bool]) -> Tuple[int, int, int]:
    """(h0, h1, h2) of the Cech complex for one ray-admissibility pattern."""
    by_dim: List[List[Tuple[int, ...]]] = []
    for p in range(4):
        simplices = [
            s
            for s in itertools.combinations(range(4), p + 1)
            if all(bits[r] for r in _simplex_rays(s))
        ]
        by_dim.append(simplices)
    ranks: List[int] = []
    for p in range(3):
        cols = {s: k for k, s in enumerate(by_dim[p])}
        rows: List[List[int]] = []
        for target in by_dim[p + 1]:
            row = [0] * len(cols)
            for drop in range(len(target)):
                face = target[:drop] + target[drop + 1 :]
                if face in cols:
                    row[cols[face]] = (-1) ** drop
            rows.append(row)
        ranks.append(_rank(rows, len(cols)))
    h0 = len(by_dim[0]) - ranks[0]
    h1 = (len(by_dim[1]) - ranks[1]) - ranks[0]
    h2 = (len(by_dim[2]) - ranks[2]) - ranks[1]
    h3 = len(by_dim[3]) - ranks[2]
    if h3 != 0:
        raise DiagnosticError("top Cech cohomology of a surface cover must vanish")
    return (h0, h1, h2)


def _box_sum(fan: HirzebruchFan, d: ToricDivisor, half_width: int) -> Tuple[int, int, int]:
    a1, a2, a3, a4 = d.coeffs
    a = fan.a
    t0 = t1 = t2 = 0
    for m1 in range(-half_width, half_width + 1):
        for m2 in range(-half_width, half_width + 1):
            bits = (
                m1 >= -a1,
                m2 >= -a2,
                -m1 - a * m2 >= -a3,
                -m2 >= -a4,
            )
            h0, h1, h2 = _pattern_cohomology(bits)
            t0 += h0
            t1 += h1
            t2 += h2
    return (t0, t1, t2)


def cohomology_dims(
    fan: HirzebruchFan,
    d: ToricDivisor,
    box_margin: int = 1,
    base_half_width: Optional[int] = None,
) -> CohDims:
    """Sheaf cohomology dimensions of the line bundle of a toric divisor.

    Sums the per-character Cech cohomology over the box [-M, M]^2 with
    M = (1 + a) * (sum |a_rho| + 1) + box_margin, then re-sums with the
    margin enlarged by two; disagreement raises (a contributing region
    escaped the box).  Every contributing character satisfies
    |m2| <= max(|a2|, |a4|) and |m1| <= max(|a1|, |a3| + a*|m2|), so the
    (1 + a) factor makes the default box provably sufficient; the slanted
    third ray stretches regions horizontally, and the unscaled sum
    |a_rho| + 1 genuinely undercounts (already for a = 2 and the divisor
    5*D4).  base_half_width overrides the computed base, which lets tests
    drive the instability guard.
    """
    if box_margin < 0:
        raise PreconditionError("box_margin must be nonnegative")
    if base_half_width is None:
        base_half_width = (1 + fan.a) * (sum(abs(c) for c in d.coeffs) + 1)
    small = _box_sum(fan, d, base_half_width + box_margin)
    large = _box_sum(fan, d, base_half_width + box_margin + 2)
    if small != large:
        raise DiagnosticError(
            f"character box too small: {small} at margin {box_margin}, "
            f"{large} at margin {box_margin + 2}"
        )
    return CohDims(*small)


def ext_dims(
    fan: HirzebruchFan, c1: PicClass, c2: PicClass, box_margin: int = 1
) -> CohDims:
    """Ext^k between line bundles: cohomology of the difference class."""
    return cohomology_dims(fan, pic_to_divisor(fan, c2 - c1), box_margin)


# --------------------------------------------- the (1,2) hypersurface check


F2_BLOCKS = (("x0", "x1", "x2"), ("y0", "y1"))


def f2_equation() -> MultiHomPoly:
    """x0*y0^2 - x1*y1^2, bidegree (1,2) on the product of a plane and a line."""
    return parse_poly(F2_BLOCKS, "(1)*x0*y0^2 + (-1)*x1*y1^2")


def _linear_block_coefficients(f: MultiHomPoly) -> Optional[Dict[str, MultiHomPoly]]:
    """Write f = sum_i x_i * c_i(y) when f is linear in the first block."""
    x_vars = f.blocks[0]
    n_x = len(x_vars)
    out: Dict[str, MultiHomPoly] = {}
    for exps, coeff in f.terms.items():
        head = exps[:n_x]
        if sum(head) != 1:
            return None
        i = head.index(1)
        tail = (0,) * n_x + exps[n_x:]
        prev = out.get(x_vars[i], MultiHomPoly.zero(f.blocks))
        out[x_vars[i]] = prev + MultiHomPoly(f.blocks, {tail: coeff})
    return out


def _univariate(form: MultiHomPoly, keep: str) -> List[GaussianRational]:
    """Coefficient list of the binary form after the other variable is set to 1."""
    k = form.blocks[1].index(keep)
    n_x = len(form.blocks[0])
    degree = max((exps[n_x + k] for exps in form.terms), default=0)
    coeffs = [GaussianRational(0)] * (degree + 1)
    for exps, c in form.terms.items():
        coeffs[exps[n_x + k]] = coeffs[exps[n_x + k]] + c
    return coeffs


def _poly_mod(num: List[GaussianRational], den: List[GaussianRational]):
    while num and num[-1] == GaussianRational(0):
        num.pop()
    while len(num) >= len(den):
        factor = num[-1] / den[-1]
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = num[shift + i] - factor * d
        while num and num[-1] == GaussianRational(0):
            num.pop()
    return num


def _univariate_gcd_is_constant(polys: List[List[GaussianRational]]) -> bool:
    zero = GaussianRational(0)
    current: List[GaussianRational] = []
    for p in polys:
        p = [c for c in p]
        while p and p[-1] == zero:
            p.pop()
        if not p:
            continue
        a, b = current, p
        while b:
            a, b = b, _poly_mod(a, b)
        current = a
        if len(current) == 1:
            return True
    return len(current) == 1


def is_irreducible_bilinear(f: MultiHomPoly) -> bool:
    """Irreducibility for polynomials linear in the first variable block.

    f = sum x_i c_i(y) is irreducible exactly when the binary forms c_i
    share no projective root, detected by two dehomogenized gcd runs.
    """
    coeffs = _linear_block_coefficients(f)
    if coeffs is None:
        raise PreconditionError("irreducibility test needs a first-block-linear poly")
    if not coeffs:
        return False
    y0, y1 = f.blocks[1]
    forms = list(coeffs.values())
    at_y1 = [_univariate(c, y0) for c in forms]
    at_y0 = [_univariate(c, y1) for c in forms]
    return _univariate_gcd_is_constant(at_y1) and _univariate_gcd_is_constant(at_y0)


def _v(name: str) -> MultiHomPoly:
    return MultiHomPoly.variable(F2_BLOCKS, name)


# Chart certificates: on each affine chart (x_i = 1, y_j = 1) a combination
# of the dehomogenized equation g and its partials that collapses to 1,
# proving the singular system has no solutions there.  Each lambda receives
# (g, d) with d[v] the partial of g by v.
_F2_CERTIFICATES: Tuple[Tuple[str, str, Callable], ...] = (
    # g = 1 - x1*y1^2; g - x1*d[x1] = 1 - x1 y1^2 + x1 y1^2
    ("x0", "y0", lambda g, d: g - _v("x1") * d["x1"]),
    # g = y0^2 - x1; partial in x1 is the constant -1
    ("x0", "y1", lambda g, d: -d["x1"]),
    # g = x0 - y1^2
    ("x1", "y0", lambda g, d: d["x0"]),
    # g = x0*y0^2 - 1; x0*d[x0] - g = x0 y0^2 - x0 y0^2 + 1
    ("x1", "y1", lambda g, d: _v("x0") * d["x0"] - g),
    # g = x0 - x1*y1^2
    ("x2", "y0", lambda g, d: d["x0"]),
    # g = x0*y0^2 - x1
    ("x2", "y1", lambda g, d: -d["x1"]),
)


def f2_chart_count() -> int:
    return len(_F2_CERTIFICATES)


def verify_f2_hypersurface(f: Optional[MultiHomPoly] = None) -> bool:
    """Certify the (1,2) hypersurface: bidegree, irreducibility, smoothness.

    Smoothness is chartwise: the Euler relations reduce singularity on the
    chart (x_i = 1, y_j = 1) to the vanishing of g and its three affine
    partials, and the stored certificate exhibits 1 in that ideal.  The
    certificates are tailored to the default equation; a perturbed input
    fails the earlier exact stages or the certificate identity itself.
    """
    if f is None:
        f = f2_equation()
    if f.blocks != F2_BLOCKS:
        raise PreconditionError("expected the plane-times-line variable blocks")
    if f.multidegree != (1, 2):
        return False
    if not is_irreducible_bilinear(f):
        return False
    one = MultiHomPoly.constant(F2_BLOCKS, 1)
    all_vars = [v for block in F2_BLOCKS for v in block]
    for x_chart, y_chart, combine in _F2_CERTIFICATES:
        g = f.substitute({x_chart: 1, y_chart: 1})
        partials = {
            v: g.partial(v) for v in all_vars if v not in (x_chart, y_chart)
        }
        try:
            if combine(g, partials) != one:
                return False
        except (KeyError, StructureError):
            return False
    return True
