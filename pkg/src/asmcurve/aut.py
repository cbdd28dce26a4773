"""The automorphism group of the curve: shift/scale generators and the
coordinate swap, symbolic invariance, group closure and structure
(elementary abelian normal part, cyclic part, dihedral part, semidirect
product), orbits on rational places, and rational-point coordinate forms.

Elements are kept in swap-normal form: an affine map
(X, Y) -> (lambda X + alpha, lambda^{-1} Y + beta) followed by an optional
coordinate swap.  The composition rule is derived once from
swap . phi_{a,b,l} = phi_{b,a,1/l} . swap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ff import FieldElement, QuadExtDescriptor, subfield_member, trace_q, trace_zero_set
from .symbolic import MultiPoly
from .curve import AffinePoint, CurveParams, InfinitePlace, curve_poly, enumerate_points, infinite_places


@dataclass(frozen=True)
class PlaneAut:
    """Automorphism (X,Y) -> (lambda X + alpha, 1/lambda Y + beta), then an
    optional swap of the two coordinates."""
    alpha: FieldElement
    beta: FieldElement
    lam: FieldElement
    swap: bool

    def key(self):
        return (self.alpha.i, self.beta.i, self.lam.i, self.swap)

    def apply(self, P: AffinePoint) -> AffinePoint:
        x = self.lam * P.u + self.alpha
        y = P.v / self.lam + self.beta
        return AffinePoint(y, x) if self.swap else AffinePoint(x, y)

    def apply_place(self, place: InfinitePlace) -> InfinitePlace:
        # a tangent line Y = d maps to Y = d/lambda + beta (center X_inf);
        # X = d maps to X = lambda d + alpha (center Y_inf); the swap
        # exchanges the two centers keeping the tangent parameter.
        if place.center == "X":
            out = InfinitePlace("X", place.d / self.lam + self.beta)
        else:
            out = InfinitePlace("Y", self.lam * place.d + self.alpha)
        if self.swap:
            out = InfinitePlace("Y" if out.center == "X" else "X", out.d)
        return out

    def compose(self, other: "PlaneAut") -> "PlaneAut":
        """self after other (i.e. self . other)."""
        a2, b2, l2 = self.alpha, self.beta, self.lam
        if other.swap:
            a2, b2, l2 = b2, a2, l2.inverse()
        l1 = other.lam
        return PlaneAut(
            alpha=l2 * other.alpha + a2,
            beta=other.beta / l2 + b2,
            lam=l2 * l1,
            swap=self.swap != other.swap,
        )

    def inverse(self) -> "PlaneAut":
        inv_affine = PlaneAut(
            alpha=-self.alpha / self.lam,
            beta=-self.beta * self.lam,
            lam=self.lam.inverse(),
            swap=False,
        )
        if not self.swap:
            return inv_affine
        # (swap . phi)^{-1} = phi^{-1} . swap = swap . conjugated(phi^{-1})
        a, b, l = inv_affine.alpha, inv_affine.beta, inv_affine.lam
        return PlaneAut(alpha=b, beta=a, lam=l.inverse(), swap=True)

    def is_identity(self):
        return (not self.swap and self.alpha.i == 0 and self.beta.i == 0
                and self.lam.i == 1)


def identity_aut(params: CurveParams) -> PlaneAut:
    fld = params.tower
    return PlaneAut(fld.zero, fld.zero, fld.one, False)


def xi(params: CurveParams) -> PlaneAut:
    fld = params.tower
    return PlaneAut(fld.zero, fld.zero, fld.one, True)


def make_aut(params: CurveParams, alpha, beta, lam, swap=False) -> PlaneAut:
    fld = params.tower
    alpha, beta, lam = fld.element(alpha), fld.element(beta), fld.element(lam)
    if trace_q(alpha).i != 0 or trace_q(beta).i != 0:
        raise ValueError("shift parameters must have Tr = 0")
    if (lam ** (params.q - 1)).i != 1:
        raise ValueError("scale parameter must be a (q-1)-st root of unity")
    return PlaneAut(alpha, beta, lam, bool(swap))


def symbolic_invariance(params: CurveParams, g: PlaneAut) -> bool:
    """Exact polynomial identity F(g(X, Y)) = F(X, Y)."""
    fld = params.tower
    F = curve_poly(params)
    X = MultiPoly.variable(fld, ("X", "Y"), "X")
    Y = MultiPoly.variable(fld, ("X", "Y"), "Y")
    gx = X * g.lam + g.alpha
    gy = Y * g.lam.inverse() + g.beta
    if g.swap:
        gx, gy = gy, gx
    return F.substitute({"X": gx, "Y": gy}) == F


def scale_generator(params: CurveParams) -> FieldElement:
    """A deterministic generator of the (q-1)-st roots of unity (F_q^*)."""
    fld = params.tower
    q = params.q
    if q == 2:
        return fld.one
    for x in fld.subfield_elements(1):
        if x.i in (0, 1):
            continue
        if all((x ** ((q - 1) // r)).i != 1 for r in _prime_factors(q - 1)):
            return x
    raise AssertionError("F_q^* has a generator")


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def generators(params: CurveParams) -> list[PlaneAut]:
    fld = params.tower
    t0 = trace_zero_set(fld)
    gens = [PlaneAut(a, fld.zero, fld.one, False) for a in t0 if a.i]
    gens += [PlaneAut(fld.zero, b, fld.one, False) for b in t0 if b.i]
    if params.q > 2:
        gens.append(PlaneAut(fld.zero, fld.zero, scale_generator(params), False))
    gens.append(xi(params))
    return gens


def closure(params: CurveParams, budget: int = 16) -> list[PlaneAut]:
    """The group generated by the shift, scale and swap maps, by worklist
    closure under composition."""
    if params.q > budget:
        raise ValueError(f"closure budget exceeded (q = {params.q} > {budget})")
    gens = generators(params)
    seen = {}
    work = [identity_aut(params)]
    seen[work[0].key()] = work[0]
    while work:
        g = work.pop()
        for h in gens:
            f = h.compose(g)
            if f.key() not in seen:
                seen[f.key()] = f
                work.append(f)
    return sorted(seen.values(), key=lambda g: g.key())


@dataclass
class GroupReport:
    order: int
    delta_order: int
    delta1_order: int
    delta2_order: int
    c_order: int
    dihedral_order: int
    delta_normal: bool
    delta_elementary_abelian: bool
    dihedral_relations: bool
    semidirect_verified: bool
    elements: list


def _aut_order(g: PlaneAut, params) -> int:
    n = 1
    cur = g
    while not cur.is_identity():
        cur = cur.compose(g)
        n += 1
        if n > 4 * params.q ** 2:
            raise AssertionError("runaway element order")
    return n


def closure_and_structure(params: CurveParams, budget: int = 16) -> GroupReport:
    group = closure(params, budget)
    p, q = params.p, params.q
    delta = [g for g in group if not g.swap and g.lam.i == 1]
    delta1 = [g for g in delta if g.beta.i == 0]
    delta2 = [g for g in delta if g.alpha.i == 0]
    cyc = [g for g in group if not g.swap and g.alpha.i == 0 and g.beta.i == 0]
    dihedral = [g for g in group if g.alpha.i == 0 and g.beta.i == 0]

    delta_keys = {g.key() for g in delta}
    gens = generators(params)
    normal = all(
        (h.compose(d)).compose(h.inverse()).key() in delta_keys
        for h in gens for d in delta
    )
    elem_ab = all(_aut_order(g, params) == p for g in delta if not g.is_identity())
    elem_ab = elem_ab and all(
        a.compose(b).key() == b.compose(a).key()
        for a in delta for b in delta
    )

    rho = max(cyc, key=lambda g: _aut_order(g, params))
    sw = xi(params)
    relations = (
        sw.compose(sw).is_identity()
        and _aut_order(rho, params) == q - 1
        and sw.compose(rho).compose(sw).key() == rho.inverse().key()
    )

    dihedral_keys = {g.key() for g in dihedral}
    meet_trivial = sum(1 for k in delta_keys if k in dihedral_keys) == 1
    semidirect = (normal and meet_trivial
                  and len(delta) * len(dihedral) == len(group))

    return GroupReport(
        order=len(group),
        delta_order=len(delta),
        delta1_order=len(delta1),
        delta2_order=len(delta2),
        c_order=len(cyc),
        dihedral_order=len(dihedral),
        delta_normal=normal,
        delta_elementary_abelian=elem_ab,
        dihedral_relations=relations,
        semidirect_verified=semidirect,
        elements=group,
    )


# ---------------------------------------------------------------------------
# action on the rational places

def _place_key(obj):
    if isinstance(obj, AffinePoint):
        return ("A", obj.u.i, obj.v.i)
    return (obj.center, obj.d.i)


def _apply_to_place(g: PlaneAut, obj):
    if isinstance(obj, AffinePoint):
        return g.apply(obj)
    return g.apply_place(obj)


@dataclass
class OrbitReport:
    orbit_sizes: list
    sigma_size: int
    sigma_sharply_transitive: bool
    xi_fixed_points: list
    xi_fixed_points_expected: list
    faithful: bool


def orbit_analysis(params: CurveParams, seed: int = 42, pairs: int = 1000) -> OrbitReport:
    """Orbits of the full group on the F_{q^2} places (affine points plus the
    2q places at infinity); sharp transitivity of the index-2 affine part on
    the affine orbit; fixed points of the swap."""
    if not subfield_member(params.c, 1):
        raise ValueError("orbit analysis requires c in F_q*")
    q = params.q
    group = closure(params)
    sigma = enumerate_points(params, level=2)
    places = list(sigma) + infinite_places(params)
    index = {_place_key(P): n for n, P in enumerate(places)}

    # orbits under the full group
    unassigned = set(range(len(places)))
    sizes = []
    while unassigned:
        start = min(unassigned)
        orbit = {start}
        frontier = [start]
        while frontier:
            n = frontier.pop()
            for g in generators(params):
                m = index[_place_key(_apply_to_place(g, places[n]))]
                if m not in orbit:
                    orbit.add(m)
                    frontier.append(m)
        sizes.append(len(orbit))
        unassigned -= orbit
    sizes.sort()

    # sharp transitivity of Delta x| C on Sigma
    affine_part = [g for g in group if not g.swap]
    rng = random.Random(seed)
    if len(sigma) ** 2 <= 4 * pairs or params.q <= 3:
        pair_list = [(P1, P2) for P1 in sigma for P2 in sigma]
    else:
        pair_list = [(sigma[rng.randrange(len(sigma))],
                      sigma[rng.randrange(len(sigma))]) for _ in range(pairs)]
    sharply = all(
        sum(1 for g in affine_part if g.apply(P1) == P2) == 1
        for P1, P2 in pair_list
    )

    sw = xi(params)
    fixed = [P for P in sigma if sw.apply(P) == P]
    expected = [P for P in sigma
                if P.u == P.v and (trace_q(P.u) ** 2) == params.c]

    # faithfulness: distinct elements induce distinct permutations
    if params.q >= 3:
        perms = {tuple(index[_place_key(_apply_to_place(g, P))] for P in places)
                 for g in group}
        faithful = len(perms) == len(group)
    else:
        faithful = True

    return OrbitReport(
        orbit_sizes=sizes,
        sigma_size=len(sigma),
        sigma_sharply_transitive=sharply,
        xi_fixed_points=fixed,
        xi_fixed_points_expected=expected,
        faithful=faithful,
    )


# ---------------------------------------------------------------------------
# rational point coordinate form

@dataclass
class RationalPointForm:
    """Coordinates of a rational point split over the basis {1, i} of
    F_{q^2} over F_q: u = a1 + i b1, v = a2 + i b2."""
    a1: FieldElement
    b1: FieldElement
    a2: FieldElement
    b2: FieldElement
    quad: QuadExtDescriptor
    constraint_holds: bool


def _decompose(x: FieldElement, quad: QuadExtDescriptor):
    """Solve x = a + i b with a, b in F_q, from x and its q-Frobenius."""
    i = quad.i_gen
    iq = i.frobenius()
    xq = x.frobenius()
    b = (x - xq) / (i - iq)
    a = x - i * b
    assert subfield_member(a, 1) and subfield_member(b, 1)
    return a, b


def rational_point_form(params: CurveParams, P: AffinePoint,
                        quad: QuadExtDescriptor) -> RationalPointForm:
    """Decompose an F_{q^2}-rational point over {1, i} and check the
    coordinate constraint: a2 = (4 a1)^{-1} c for odd p (so = 1/(4 a1) at
    c = 1), and b2 = b1^{-1} c for p = 2."""
    if not (subfield_member(P.u, 2) and subfield_member(P.v, 2)):
        raise ValueError("point is not F_{q^2}-rational")
    a1, b1 = _decompose(P.u, quad)
    a2, b2 = _decompose(P.v, quad)
    if params.p != 2:
        holds = (a1 * a2 * 4) == params.c
    else:
        holds = (b1 * b2) == params.c
    return RationalPointForm(a1=a1, b1=b1, a2=a2, b2=b2, quad=quad,
                             constraint_holds=holds)


# ---------------------------------------------------------------------------
# constrained linear-automorphism search (small q sanity check)

def linear_automorphism_search(params: CurveParams, max_q: int = 4) -> int:
    """Count the projectivities with F_{q^2} entries that are automorphisms
    of the curve.

    Any linear automorphism permutes the two singular points and hence fixes
    the line at infinity, so it acts affinely as
    (X, Y) -> (aX + s, bY + t), optionally followed by the swap.  The search
    runs over F_{q^2} coefficients only and checks exact polynomial
    invariance; the answer should be 2 q^2 (q - 1).
    """
    if params.q > max_q:
        raise ValueError("search is exponential; restricted to small q")
    fld = params.tower
    F = curve_poly(params)
    X = MultiPoly.variable(fld, ("X", "Y"), "X")
    Y = MultiPoly.variable(fld, ("X", "Y"), "Y")
    fq2 = fld.subfield_elements(2)
    count = 0
    for a in fq2:
        if a.i == 0:
            continue
        for b in fq2:
            if b.i == 0:
                continue
            for s in fq2:
                for t in fq2:
                    gx = X * a + s
                    gy = Y * b + t
                    sub = F.substitute({"X": gx, "Y": gy})
                    if sub == F:
                        count += 1
                    swapped = F.substitute({"X": gy, "Y": gx})
                    if swapped == F:
                        count += 1
    return count
