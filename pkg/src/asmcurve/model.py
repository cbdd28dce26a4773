"""The nonsingular space model of degree 2q in PG(3).

The quadratic map tau : (X1, X2, X3) -> (X1X3, X2X3, X1X2, X3^2) sends the
plane curve to a nonsingular curve whose points at infinity form two
collinear q-sets meeting at (0,0,1,0).  This module computes tau on points
and branches, order sequences in space, injectivity checks, and the induced
4x4 projective action of each plane automorphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ff import FieldElement, trace_zero_set
from .symbolic import TruncatedSeries, pivot_order_sequence
from .curve import (AffinePoint, CurveParams, InfinitePlace, enumerate_points,
                    hensel_branch, infinite_branch, infinite_places, sample_points)
from .aut import PlaneAut


class SpacePoint:
    """Point of PG(3) normalized so the last nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = list(coords)
        last = None
        for k in range(3, -1, -1):
            if coords[k].i:
                last = k
                break
        if last is None:
            raise ValueError("all-zero projective point")
        inv = coords[last].inverse()
        self.coords = tuple(c * inv for c in coords)

    def key(self):
        return tuple(c.i for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, SpacePoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"SpacePoint{self.key()}"


@dataclass
class SpaceBranch:
    series: list  # four TruncatedSeries, primitive (no common t factor)
    center: SpacePoint


class Matrix4:
    """Invertible 4x4 matrix acting projectively on PG(3)."""

    __slots__ = ("fld", "rows")

    def __init__(self, fld, rows):
        self.fld = fld
        self.rows = tuple(tuple(fld.element(x) for x in row) for row in rows)

    def apply(self, point: SpacePoint) -> SpacePoint:
        return SpacePoint([
            sum((r * c for r, c in zip(row, point.coords)), self.fld.zero)
            for row in self.rows
        ])

    def apply_key(self, key, mul, add):
        out = []
        for row in self.rows:
            acc = 0
            for r, c in zip(row, key):
                acc = add(acc, mul(r.i, c))
            out.append(acc)
        return out

    def __matmul__(self, other: "Matrix4") -> "Matrix4":
        rows = []
        for i in range(4):
            rows.append([
                sum((self.rows[i][k] * other.rows[k][j] for k in range(4)),
                    self.fld.zero)
                for j in range(4)
            ])
        return Matrix4(self.fld, rows)


def tau(params: CurveParams, P: AffinePoint) -> SpacePoint:
    """Space image of an affine point: (u, v, uv, 1)."""
    fld = params.tower
    return SpacePoint([P.u, P.v, P.u * P.v, fld.one])


def tau_branch(params: CurveParams, triple) -> SpaceBranch:
    """Space image of a plane branch triple, made primitive by removing the
    common power of t."""
    y1 = triple[0] * triple[2]
    y2 = triple[1] * triple[2]
    y3 = triple[0] * triple[1]
    y4 = triple[2] * triple[2]
    series = [y1, y2, y3, y4]
    vals = [s.valuation() for s in series]
    shift = min(v for v in vals if v is not None)
    if shift:
        series = [s.shift_down(shift) for s in series]
    center = SpacePoint([s.coeffs[0] for s in series])
    return SpaceBranch(series=series, center=center)


def affine_space_branch(params: CurveParams, P: AffinePoint, N: int) -> SpaceBranch:
    y = hensel_branch(params, P.u, P.v, N)
    fld = params.tower
    x = TruncatedSeries(fld, [P.u, fld.one], N)
    one = TruncatedSeries.constant(fld, 1, N)
    return tau_branch(params, [x, y, one])


def infinite_space_branch(params: CurveParams, place: InfinitePlace, N: int) -> SpaceBranch:
    return tau_branch(params, infinite_branch(params, place, N))


def space_order_sequence(params: CurveParams, branch: SpaceBranch, N=None):
    """Pivot orders of the four coordinate series."""
    return pivot_order_sequence(branch.series, N)


def omega_prime_points(params: CurveParams):
    fld = params.tower
    t0 = trace_zero_set(fld)
    omega1 = [SpacePoint([fld.one, fld.zero, d, fld.zero]) for d in t0]
    omega2 = [SpacePoint([fld.zero, fld.one, d, fld.zero]) for d in t0]
    return omega1, omega2


@dataclass
class OmegaPrimeReport:
    omega1p: list
    omega2p: list
    union_size: int
    collinear1: bool
    collinear2: bool
    meet: SpacePoint
    meet_on_model: bool
    centers_match: bool
    simple_points: bool


def _collinear_on(points, zero_coords) -> bool:
    # all points have zero entries at the given coordinate positions
    return all(all(P.coords[k].i == 0 for k in zero_coords) for P in points)


def omega_prime_report(params: CurveParams, N=None) -> OmegaPrimeReport:
    """The two infinity q-sets of the model: collinearity on the lines
    Y2 = Y4 = 0 and Y1 = Y4 = 0, their meet (0,0,1,0), and simplicity of
    every point (the plane at infinity Y4 = 0 cuts each branch once)."""
    fld = params.tower
    q = params.q
    if N is None:
        N = q + 3
    omega1, omega2 = omega_prime_points(params)
    union = {P.key() for P in omega1} | {P.key() for P in omega2}
    meet = SpacePoint([fld.zero, fld.zero, fld.one, fld.zero])

    centers_ok = True
    simple = True
    for place in infinite_places(params):
        br = infinite_space_branch(params, place, N)
        expect = omega1 if place.center == "X" else omega2
        want = SpacePoint([fld.one, fld.zero, place.d, fld.zero]) \
            if place.center == "X" else SpacePoint([fld.zero, fld.one, place.d, fld.zero])
        if br.center != want or br.center.key() not in {P.key() for P in expect}:
            centers_ok = False
        if br.series[3].valuation() != 1:  # plane at infinity meets with mult 1
            simple = False

    affine_images = {tau(params, P).key() for P in enumerate_points(params, 2)}
    meet_on_model = meet.key() in affine_images or meet.key() in union

    return OmegaPrimeReport(
        omega1p=omega1,
        omega2p=omega2,
        union_size=len(union),
        collinear1=_collinear_on(omega1, (1, 3)),
        collinear2=_collinear_on(omega2, (0, 3)),
        meet=meet,
        meet_on_model=meet_on_model,
        centers_match=centers_ok,
        simple_points=simple,
    )


def nonsingularity_check(params: CurveParams, level: int = 2,
                         sample: int | None = None, seed: int = 42) -> bool:
    """tau is injective on the enumerated (or sampled) points, and the
    infinite-branch centers are distinct from each other and from all
    affine images."""
    if sample is None:
        pts = enumerate_points(params, level)
    else:
        rng = random.Random(seed)
        pts = list({P for P in sample_points(params, sample, rng, level)})
    images = {tau(params, P).key() for P in pts}
    if len(images) != len(set(pts)):
        return False
    omega1, omega2 = omega_prime_points(params)
    centers = [P.key() for P in omega1 + omega2]
    if len(set(centers)) != len(centers):
        return False
    return not (set(centers) & images)


def model_points(params: CurveParams, level: int = 2):
    """The enumerated model pointset: affine images plus the infinity sets."""
    omega1, omega2 = omega_prime_points(params)
    return ([tau(params, P) for P in enumerate_points(params, level)]
            + omega1 + omega2)


def induced_space_matrix(params: CurveParams, g: PlaneAut,
                         validate_points=None) -> Matrix4:
    """The unique projectivity M with tau . g = M . tau on the curve.

    Closed form from composing tau with the affine map; the swap part
    exchanges the first two coordinates.  Optionally validated pointwise.
    """
    fld = params.tower
    zero, one = fld.zero, fld.one
    a, b, l = g.alpha, g.beta, g.lam
    linv = l.inverse()
    m = Matrix4(fld, [
        [l, zero, zero, a],
        [zero, linv, zero, b],
        [l * b, linv * a, one, a * b],
        [zero, zero, zero, one],
    ])
    if g.swap:
        swap = Matrix4(fld, [
            [zero, one, zero, zero],
            [one, zero, zero, zero],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
        ])
        m = swap @ m
    if validate_points:
        for P in validate_points:
            if m.apply(tau(params, P)) != tau(params, g.apply(P)):
                raise AssertionError("induced matrix fails pointwise validation")
    return m


def matrix_fixes_infinity_structure(params: CurveParams, g: PlaneAut,
                                    m: Matrix4) -> bool:
    """Zero-pattern checks: the matrix fixes (0,0,1,0); a non-swap element
    stabilizes both infinity lines, a swap element exchanges them."""
    fld = params.tower
    z_inf = SpacePoint([fld.zero, fld.zero, fld.one, fld.zero])
    if m.apply(z_inf) != z_inf:
        return False
    omega1, omega2 = omega_prime_points(params)
    img1 = {m.apply(P).key() for P in omega1}
    img2 = {m.apply(P).key() for P in omega2}
    s1 = {P.key() for P in omega1}
    s2 = {P.key() for P in omega2}
    if g.swap:
        return img1 == s2 and img2 == s1
    return img1 == s1 and img2 == s2


def pointset_invariant(params: CurveParams, matrices, level: int = 2) -> bool:
    """Every matrix permutes the enumerated model pointset (raw index
    arithmetic; this is the hot loop of the group verification)."""
    fld = params.tower
    pts = model_points(params, level)
    keys = {P.key() for P in pts}
    mul, add, inv = fld.mul_idx, fld.add_idx, fld.inv_idx
    for m in matrices:
        for key in keys:
            out = m.apply_key(key, mul, add)
            last = 0
            for k in range(3, -1, -1):
                if out[k]:
                    last = k
                    break
            s = inv(out[last])
            norm = tuple(mul(x, s) for x in out)
            if norm not in keys:
                return False
    return True
