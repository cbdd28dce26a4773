import random

import pytest

from asmcurve.classic import (conic_order_sequence, frobenius_checks,
                              hyperosculating_conic, is_special_point,
                              osculation_order, z_representation)
from asmcurve.curve import asm_curve, enumerate_points, sample_points
from asmcurve.ff import subfield_member, trace_q


@pytest.mark.parametrize("p,e,c", [(2, 1, 1), (3, 1, 1), (3, 1, 2), (5, 1, 1),
                                   (2, 2, 1)])
def test_z_identity(p, e, c):
    params = asm_curve(p, e, c)
    rep = z_representation(params)
    assert rep.identity_residual.is_zero()
    assert rep.z[3].is_zero() and rep.z[5].is_zero()


def test_literal_variant_residual_is_one_plus_c():
    for p, e, c in [(3, 1, 1), (5, 1, 1), (5, 1, 3)]:
        params = asm_curve(p, e, c)
        rep = z_representation(params)
        lit = rep.literal_variant_residual
        expected = params.tower.one + params.c
        assert set(lit.terms) <= {(0, 0)}
        assert lit.coefficient((0, 0)) == expected
        # the variant is exact precisely at c = -1
        assert lit.is_zero() == (expected.i == 0)


def test_literal_variant_exact_at_c_minus_one():
    params = asm_curve(3, 1, 2)  # c = -1 over F_3
    rep = z_representation(params)
    assert rep.literal_variant_residual.is_zero()


def test_conic_meets_branch_at_own_point():
    params = asm_curve(3, 1, 1)
    for P in enumerate_points(params, 2)[:6]:
        conic = hyperosculating_conic(params, P)
        assert conic.evaluate(P.u, P.v).i == 0


def test_osculation_dichotomy_exhaustive_q3():
    params = asm_curve(3, 1, 1)
    q = params.q
    for P in enumerate_points(params, 4):
        if trace_q(P.u).i == 0:
            continue  # no affine branch lift at trace-zero points
        rec = osculation_order(params, P)
        if rec.special_flag:
            assert rec.multiplicity == q + 1
        else:
            assert rec.multiplicity == q


def test_special_points_include_all_rational_ones():
    # F_{q^2}-rational points have Tr(u)^2 = Tr(u)Tr(v)c / Tr(v) ... directly:
    # Tr(u)Tr(v) = c there, and both traces lie in F_q, so the flag holds
    params = asm_curve(5, 1, 1)
    assert all(is_special_point(params, P)
               for P in enumerate_points(params, 2))


def test_char2_special_multiplicity_measured():
    params = asm_curve(2, 2, 1)
    q = params.q
    mults = set()
    for P in enumerate_points(params, 2):
        rec = osculation_order(params, P, q + 4)
        assert rec.special_flag
        mults.add(rec.multiplicity)
    assert mults == {q + 2}


def test_frobenius_nonclassical():
    params = asm_curve(3, 1, 1)
    for P in sample_points(params, 50, random.Random(11), 4):
        fc = frobenius_checks(params, P)
        assert fc.on_curve_image
        assert fc.on_conic_image is True


def test_frobenius_conic_skipped_when_c_outside_fq():
    fld = asm_curve(2, 2, 1).tower
    gen = next(x for x in fld.subfield_elements(2)
               if x.i and not subfield_member(x, 1))
    params = asm_curve(2, 2, list(gen.coefficients))
    # no F_{q^2}-rational points exist here; take an F_{q^4} one
    P = enumerate_points(params, 4)[0]
    fc = frobenius_checks(params, P)
    assert fc.on_curve_image and fc.on_conic_image is None


def test_conic_order_sequence_rational_vs_generic():
    params = asm_curve(5, 1, 1)
    q = params.q
    rational = enumerate_points(params, 2)[0]
    assert conic_order_sequence(params, rational)[-1] == q + 1
    generic = next(P for P in sample_points(params, 50, random.Random(1), 4)
                   if not is_special_point(params, P))
    assert conic_order_sequence(params, generic)[-1] == q
