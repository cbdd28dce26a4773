import random

import pytest

from asmcurve.aut import closure, xi
from asmcurve.classic import is_special_point
from asmcurve.curve import asm_curve, enumerate_points, infinite_places, sample_points
from asmcurve.model import (Matrix4, SpacePoint, affine_space_branch,
                            induced_space_matrix, infinite_space_branch,
                            matrix_fixes_infinity_structure, model_points,
                            nonsingularity_check, omega_prime_report,
                            pointset_invariant, space_order_sequence, tau)


@pytest.fixture
def q3():
    return asm_curve(3, 1, 1)


def test_space_point_normalization(q3):
    fld = q3.tower
    two = fld.element(2)
    a = SpacePoint([two, two, fld.zero, two])
    b = SpacePoint([fld.one, fld.one, fld.zero, fld.one])
    assert a == b
    with pytest.raises(ValueError):
        SpacePoint([fld.zero] * 4)


def test_tau_image(q3):
    fld = q3.tower
    for P in enumerate_points(q3, 2)[:6]:
        img = tau(q3, P)
        assert img.coords == (P.u, P.v, P.u * P.v, fld.one)


def test_omega_prime(q3):
    q = q3.q
    rep = omega_prime_report(q3)
    assert rep.union_size == 2 * q
    assert rep.collinear1 and rep.collinear2
    assert rep.meet.key() == (0, 0, 1, 0)
    assert not rep.meet_on_model
    assert rep.centers_match and rep.simple_points


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_tau_injective(p, e):
    params = asm_curve(p, e, 1)
    assert nonsingularity_check(params, level=2)


def test_tau_injective_on_quartic_sample(q3):
    assert nonsingularity_check(q3, level=4, sample=200, seed=9)


def test_model_point_count(q3):
    q = q3.q
    pts = model_points(q3, 2)
    assert len(pts) == (q - 1) * q ** 2 + 2 * q
    assert len({P.key() for P in pts}) == len(pts)


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1)])
def test_infinity_order_sequence(p, e):
    params = asm_curve(p, e, 1)
    q = params.q
    for place in infinite_places(params):
        br = infinite_space_branch(params, place, 3 * q)
        assert space_order_sequence(params, br) == [0, 1, q, q + 1]


def test_affine_order_sequences_q5():
    params = asm_curve(5, 1, 1)
    q = params.q
    N = 3 * q
    for P in enumerate_points(params, 2)[:10]:
        br = affine_space_branch(params, P, N)
        assert space_order_sequence(params, br) == [0, 1, 2, q + 1]
    rng = random.Random(2)
    generic = sample_points(params, 20, rng, 4,
                            predicate=lambda P: not is_special_point(params, P))
    for P in generic:
        br = affine_space_branch(params, P, N)
        assert space_order_sequence(params, br) == [0, 1, 2, q]


def test_induced_matrix_closed_form(q3):
    fld = q3.tower
    pts = enumerate_points(q3, 2)
    for g in closure(q3):
        m = induced_space_matrix(q3, g, validate_points=pts[:6])
        if not g.swap:
            assert m.rows[0][0] == g.lam
            assert m.rows[3] == (fld.zero, fld.zero, fld.zero, fld.one)


def test_induced_matrix_respects_composition(q3):
    els = closure(q3)
    rng = random.Random(4)
    P = enumerate_points(q3, 2)[0]
    for _ in range(25):
        g, h = rng.choice(els), rng.choice(els)
        mg = induced_space_matrix(q3, g)
        mh = induced_space_matrix(q3, h)
        mgh = induced_space_matrix(q3, g.compose(h))
        assert mgh.apply(tau(q3, P)) == (mg @ mh).apply(tau(q3, P))


def test_matrix_infinity_pattern_and_pointset(q3):
    els = closure(q3)
    mats = [induced_space_matrix(q3, g) for g in els]
    assert all(matrix_fixes_infinity_structure(q3, g, m)
               for g, m in zip(els, mats))
    assert pointset_invariant(q3, mats, 2)


def test_swap_matrix_exchanges_first_rows(q3):
    m = induced_space_matrix(q3, xi(q3))
    fld = q3.tower
    assert m.rows[0] == (fld.zero, fld.one, fld.zero, fld.zero)
    assert m.rows[1] == (fld.one, fld.zero, fld.zero, fld.zero)


def test_pointset_invariance_detects_intruder(q3):
    fld = q3.tower
    bogus = Matrix4(fld, [
        [fld.one, fld.one, fld.zero, fld.zero],
        [fld.zero, fld.one, fld.zero, fld.zero],
        [fld.zero, fld.zero, fld.one, fld.zero],
        [fld.zero, fld.zero, fld.zero, fld.one],
    ])
    assert not pointset_invariant(q3, [bogus], 2)
