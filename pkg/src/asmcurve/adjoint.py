"""Degree-q adjoint system of the curve: multiplicity conditions by exact
linear algebra, the splitting into X3^{q-2} times a conic through the two
singular points, and the divisor bookkeeping giving deg|G| = 2q, l(G) = 4.

Multiplicity conditions are imposed as monomial-valuation constraints
(coefficients of low local degree vanish), never as derivative conditions,
so nothing degenerates in characteristic p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ff import FieldElement
from .symbolic import MultiPoly


def localize(poly: MultiPoly, point) -> MultiPoly:
    """Move a projective point to a chart origin by a linear change.

    Picks the last nonzero coordinate k, scales the point so that entry is 1,
    substitutes X_j -> L_j + a_j * L_k and dehomogenizes L_k = 1.  Returns a
    polynomial in the two local variables whose origin is the given point.
    """
    fld = poly.fld
    coords = [fld.element(x) for x in point]
    k = max(i for i, x in enumerate(coords) if x.i != 0)
    scale = coords[k].inverse()
    coords = [x * scale for x in coords]
    names = poly.vars
    local_names = tuple(f"L{i}" for i in range(len(names)) if i != k)
    full_local = tuple(f"L{i}" for i in range(len(names)))
    mapping = {}
    for i, name in enumerate(names):
        if i == k:
            mapping[name] = MultiPoly.variable(fld, full_local, f"L{k}")
        else:
            mapping[name] = (MultiPoly.variable(fld, full_local, f"L{i}")
                             + MultiPoly.variable(fld, full_local, f"L{k}") * coords[i])
    moved = poly.substitute(mapping)
    # dehomogenize L_k = 1
    out = MultiPoly.zero(fld, local_names)
    keep = [i for i in range(len(names)) if i != k]
    for e, c in moved.terms.items():
        reduced = tuple(e[i] for i in keep)
        out = out + MultiPoly(fld, local_names, {reduced: c})
    return out


def multiplicity_at(poly: MultiPoly, point) -> int:
    """Multiplicity of a homogeneous plane curve at a projective point:
    minimal surviving local degree after moving the point to a chart origin.
    0 means the point is off the curve; 1 means a nonsingular point."""
    if poly.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    local = localize(poly, point)
    m = local.min_degree()
    return 0 if m is None else m


@dataclass
class AdjointSystem:
    basis: list            # MultiPoly members spanning the system
    vector_dimension: int
    projective_dimension: int
    ell_G: int
    series_degree: int
    condition_rank: int
    coefficient_space_dim: int


def _degree_monomials(d: int):
    return [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]


def adjoint_system(params) -> AdjointSystem:
    """Kernel of the multiplicity >= q-1 conditions at X_inf and Y_inf on the
    coefficient space of degree-q forms in (X1, X2, X3)."""
    fld = params.tower
    q = params.q
    monos = _degree_monomials(q)
    x_inf = (fld.one, fld.zero, fld.zero)
    y_inf = (fld.zero, fld.one, fld.zero)

    rows = []
    for point in (x_inf, y_inf):
        locals_ = [localize(MultiPoly(fld, ("X1", "X2", "X3"), {m: fld.one}), point)
                   for m in monos]
        constraints = set()
        for lp in locals_:
            for e in lp.terms:
                if sum(e) < q - 1:
                    constraints.add(e)
        for e in sorted(constraints):
            rows.append([lp.coefficient(e) for lp in locals_])

    from .symbolic import row_reduce

    work = [list(r) for r in rows]
    pivots = row_reduce(work)
    rank = len(pivots)
    # kernel: free columns parametrize; back-substitute from the echelon form
    pivot_set = set(pivots)
    free = [j for j in range(len(monos)) if j not in pivot_set]
    basis = []
    for fcol in free:
        vec = [fld.zero] * len(monos)
        vec[fcol] = fld.one
        for r, pcol in enumerate(pivots):
            vec[pcol] = -work[r][fcol]
        poly = MultiPoly(fld, ("X1", "X2", "X3"),
                         {monos[j]: vec[j] for j in range(len(monos)) if vec[j].i})
        basis.append(poly)

    dim = len(basis)
    return AdjointSystem(
        basis=basis,
        vector_dimension=dim,
        projective_dimension=dim - 1,
        ell_G=dim,
        series_degree=2 * q,
        condition_rank=rank,
        coefficient_space_dim=len(monos),
    )


def decompose_adjoint(adj: MultiPoly, q: int):
    """Split a degree-q adjoint as X3^{q-2} * conic; exact division.

    Returns (q-2, conic).  Raises if X3^{q-2} does not divide, which would
    contradict the splitting property of the adjoint system.
    """
    fld = adj.fld
    conic_terms = {}
    for (i, j, k), c in adj.terms.items():
        if k < q - 2:
            raise ValueError("adjoint is not divisible by X3^(q-2)")
        conic_terms[(i, j, k - (q - 2))] = c
    conic = MultiPoly(fld, adj.vars, conic_terms)
    return q - 2, conic


def conic_through_infinity(conic: MultiPoly) -> bool:
    """A degree <= 2 form vanishes at (1,0,0) and (0,1,0) iff it has no
    X1^2 and no X2^2 term."""
    fld = conic.fld
    one, zero = fld.one, fld.zero
    return (conic.evaluate((one, zero, zero)).i == 0
            and conic.evaluate((zero, one, zero)).i == 0)


@dataclass
class DivisorData:
    """Divisor bookkeeping for G = P + Q (the 2q places at infinity),
    D = (q-1)G, and the residue divisor B (identically zero here)."""
    g_support: list        # the 2q InfinitePlace values
    p_part: list
    q_part: list
    deg_G: int
    deg_D: int
    b_is_zero: bool
    series_degree: int
    x3_orders: dict        # place -> ord_t of X3 along its branch


def divisor_check(params, N: int | None = None) -> DivisorData:
    """Verify that the line at infinity cuts each infinite branch with
    ord_t(X3) = 1, so the q-fold line cuts exactly qG = D + G and B = 0."""
    from .curve import infinite_branch, infinite_places

    q = params.q
    if N is None:
        N = q + 3
    places = infinite_places(params)
    orders = {}
    for place in places:
        triple = infinite_branch(params, place, N)
        v = triple[2].valuation()
        if v != 1:
            raise ValueError(f"ord_t(X3) = {v} != 1 at {place}")
        orders[(place.center, place.d.i)] = v
    p_part = [pl for pl in places if pl.center == "X"]
    q_part = [pl for pl in places if pl.center == "Y"]
    return DivisorData(
        g_support=places,
        p_part=p_part,
        q_part=q_part,
        deg_G=2 * q,
        deg_D=2 * q * (q - 1),
        b_is_zero=True,
        series_degree=2 * q,
        x3_orders=orders,
    )
