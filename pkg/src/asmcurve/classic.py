"""Non-classicality machinery with respect to conics.

The q-th power representation of the curve polynomial, hyperosculating
conics, the osculation dichotomy (intersection multiplicity q exactly when
c^{-1}Tr(u)^2 is outside F_q), and the Frobenius non-classicality checks
over F_{q^2}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ff import FieldElement, subfield_member, trace_q
from .symbolic import MultiPoly, PrecisionError, pivot_order_sequence, substitute_branch
from .curve import AffinePoint, CurveParams, curve_poly, hensel_branch, on_curve


@dataclass
class ZRepresentation:
    """Sextuple (z0..z5) with z0^q + z1^q X + z2^q Y + z3^q X^2 + z4^q XY +
    z5^q Y^2 equal to the curve polynomial, exactly.

    Uses z0 = XY - gamma with gamma^q = c.  (The variant z0 = 1 + XY fails
    the identity by the constant 1 + c; it only matches at c = -1.  The
    residual of that variant is kept available as a diagnostic.)
    """
    z: tuple  # six MultiPoly values
    identity_residual: MultiPoly
    literal_variant_residual: MultiPoly


def _z_identity_residual(params: CurveParams, z0: MultiPoly) -> MultiPoly:
    fld = params.tower
    q = params.q
    X = MultiPoly.variable(fld, ("X", "Y"), "X")
    Y = MultiPoly.variable(fld, ("X", "Y"), "Y")
    z1, z2 = Y, X
    z4 = MultiPoly.constant(fld, ("X", "Y"), 1)
    lhs = (z0 ** q) + (z1 ** q) * X + (z2 ** q) * Y + (z4 ** q) * X * Y
    return lhs - curve_poly(params)


def z_representation(params: CurveParams) -> ZRepresentation:
    fld = params.tower
    X = MultiPoly.variable(fld, ("X", "Y"), "X")
    Y = MultiPoly.variable(fld, ("X", "Y"), "Y")
    zero = MultiPoly.zero(fld, ("X", "Y"))
    one = MultiPoly.constant(fld, ("X", "Y"), 1)
    z0 = X * Y - params.gamma
    residual = _z_identity_residual(params, z0)
    if not residual.is_zero():
        raise ArithmeticError("z-representation identity failed; arithmetic bug")
    literal = _z_identity_residual(params, X * Y + 1)
    return ZRepresentation(z=(z0, Y, X, zero, one, zero),
                           identity_residual=residual,
                           literal_variant_residual=literal)


@dataclass
class Conic:
    """a + bX + cY + dX^2 + eXY + fY^2 over the tower field."""
    c1: FieldElement
    cX: FieldElement
    cY: FieldElement
    cXX: FieldElement
    cXY: FieldElement
    cYY: FieldElement

    def to_poly(self, fld) -> MultiPoly:
        return MultiPoly(fld, ("X", "Y"), {
            (0, 0): self.c1, (1, 0): self.cX, (0, 1): self.cY,
            (2, 0): self.cXX, (1, 1): self.cXY, (0, 2): self.cYY,
        })

    def evaluate(self, u, v) -> FieldElement:
        return (self.c1 + self.cX * u + self.cY * v
                + self.cXX * u * u + self.cXY * u * v + self.cYY * v * v)


def hyperosculating_conic(params: CurveParams, P: AffinePoint) -> Conic:
    """The conic (uv - gamma)^q + v^q X + u^q Y + XY meeting the branch at P
    with multiplicity at least q."""
    fld = params.tower
    q = params.q
    u, v = P.u, P.v
    return Conic(
        c1=(u * v - params.gamma) ** q,
        cX=v ** q,
        cY=u ** q,
        cXX=fld.zero,
        cXY=fld.one,
        cYY=fld.zero,
    )


@dataclass
class OsculationRecord:
    point: AffinePoint
    conic: Conic
    multiplicity: int
    special_flag: bool  # c^{-1} Tr(u)^2 in F_q


def is_special_point(params: CurveParams, P: AffinePoint) -> bool:
    tru = trace_q(P.u)
    return subfield_member(tru * tru / params.c, 1)


def osculation_order(params: CurveParams, P: AffinePoint, N: int | None = None) -> OsculationRecord:
    """Intersection multiplicity of the hyperosculating conic with the branch
    at P, measured as a valuation along the Hensel lift."""
    q = params.q
    if N is None:
        N = q + 3
    conic = hyperosculating_conic(params, P)
    y = hensel_branch(params, P.u, P.v, N)
    x = _x_series(params, P, N)
    series = substitute_branch(conic.to_poly(params.tower), [x, y])
    mult = series.valuation()
    if mult is None:
        raise PrecisionError(f"conic valuation exceeds precision {N}")
    return OsculationRecord(
        point=P,
        conic=conic,
        multiplicity=mult,
        special_flag=is_special_point(params, P),
    )


def _x_series(params, P, N):
    from .symbolic import TruncatedSeries

    fld = params.tower
    return TruncatedSeries(fld, [P.u, fld.one], N)


@dataclass
class FrobeniusCheck:
    point: AffinePoint
    image: AffinePoint
    on_curve_image: bool
    on_conic_image: bool | None  # None when c is outside F_q


def frobenius_checks(params: CurveParams, P: AffinePoint) -> FrobeniusCheck:
    """Image of P under the q^2-power Frobenius: on the curve whenever
    c in F_{q^2}, and on the hyperosculating conic at P whenever c in F_q."""
    image = AffinePoint(P.u.frobenius(2), P.v.frobenius(2))
    curve_ok = on_curve(params, image)
    conic_ok = None
    if subfield_member(params.c, 1):
        conic = hyperosculating_conic(params, P)
        conic_ok = conic.evaluate(image.u, image.v).i == 0
    return FrobeniusCheck(point=P, image=image,
                          on_curve_image=curve_ok, on_conic_image=conic_ok)


def conic_order_sequence(params: CurveParams, P: AffinePoint, N: int | None = None):
    """Order sequence of the branch at P against the full conic system:
    pivot orders of (1, x, y, x^2, xy, y^2).  Retries once at doubled
    precision if the pivots are deficient."""
    q = params.q
    if N is None:
        N = 3 * q
    for attempt_N in (N, 2 * N):
        y = hensel_branch(params, P.u, P.v, attempt_N)
        x = _x_series(params, P, attempt_N)
        from .symbolic import TruncatedSeries

        one = TruncatedSeries.constant(params.tower, 1, attempt_N)
        series = [one, x, y, x * x, x * y, y * y]
        try:
            return pivot_order_sequence(series)
        except PrecisionError:
            if attempt_N != N:
                raise
    raise AssertionError("unreachable")
