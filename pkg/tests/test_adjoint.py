import pytest

from asmcurve.adjoint import (adjoint_system, conic_through_infinity,
                              decompose_adjoint, divisor_check, localize,
                              multiplicity_at)
from asmcurve.curve import asm_curve, enumerate_points, homogeneous_poly
from asmcurve.ff import build_tower
from asmcurve.symbolic import MultiPoly


def test_multiplicity_values():
    params = asm_curve(3, 1, 1)
    fld = params.tower
    q = params.q
    F = homogeneous_poly(params)
    x_inf = (fld.one, fld.zero, fld.zero)
    y_inf = (fld.zero, fld.one, fld.zero)
    assert multiplicity_at(F, x_inf) == q
    assert multiplicity_at(F, y_inf) == q
    P = enumerate_points(params, 2)[0]
    assert multiplicity_at(F, (P.u, P.v, fld.one)) == 1
    # a point off the curve
    assert multiplicity_at(F, (fld.one, fld.zero, fld.one)) == 0


def test_localize_moves_point_to_origin():
    fld = build_tower(3, 1)
    X1 = MultiPoly.variable(fld, ("X1", "X2", "X3"), "X1")
    X3 = MultiPoly.variable(fld, ("X1", "X2", "X3"), "X3")
    p = X1 - X3  # line through (1, 0, 1)
    local = localize(p, (fld.one, fld.zero, fld.one))
    assert local.coefficient((0, 0)).i == 0  # vanishes at the new origin
    assert local.min_degree() == 1


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_adjoint_basis_and_dimension(p, e):
    params = asm_curve(p, e, 1)
    q = params.q
    sys_ = adjoint_system(params)
    assert sys_.vector_dimension == 4
    assert sys_.projective_dimension == 3
    assert sys_.ell_G == 4
    assert sys_.coefficient_space_dim == (q + 1) * (q + 2) // 2
    assert sys_.condition_rank == sys_.coefficient_space_dim - 4
    monos = set()
    for b in sys_.basis:
        monos |= set(b.terms)
    assert monos == {(0, 0, q), (1, 0, q - 1), (0, 1, q - 1), (1, 1, q - 2)}


def test_adjoint_members_have_high_multiplicity_at_singularities():
    params = asm_curve(3, 1, 1)
    fld = params.tower
    q = params.q
    for b in adjoint_system(params).basis:
        assert multiplicity_at(b, (fld.one, fld.zero, fld.zero)) >= q - 1
        assert multiplicity_at(b, (fld.zero, fld.one, fld.zero)) >= q - 1


def test_decompose_splits_off_line_power():
    params = asm_curve(5, 1, 1)
    q = params.q
    for b in adjoint_system(params).basis:
        k, conic = decompose_adjoint(b, q)
        assert k == q - 2
        assert conic.total_degree() <= 2
        assert conic_through_infinity(conic)


def test_decompose_rejects_non_multiple():
    fld = build_tower(3, 1)
    X1 = MultiPoly.variable(fld, ("X1", "X2", "X3"), "X1")
    with pytest.raises(ValueError):
        decompose_adjoint(X1 ** 3, 3)


@pytest.mark.parametrize("p,e", [(3, 1), (2, 2), (5, 1)])
def test_divisor_bookkeeping(p, e):
    params = asm_curve(p, e, 1)
    q = params.q
    d = divisor_check(params)
    assert d.deg_G == 2 * q
    assert d.deg_D == 2 * q * (q - 1)
    assert d.b_is_zero
    assert len(d.p_part) == q and len(d.q_part) == q
    assert all(v == 1 for v in d.x3_orders.values())
