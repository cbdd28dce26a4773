import pytest

from asmcurve.aut import (closure, closure_and_structure, generators,
                          identity_aut, linear_automorphism_search, make_aut,
                          orbit_analysis, rational_point_form,
                          scale_generator, symbolic_invariance, xi)
from asmcurve.curve import asm_curve, enumerate_points
from asmcurve.ff import quadratic_descriptor, trace_q, trace_zero_set


@pytest.fixture
def q3():
    return asm_curve(3, 1, 1)


def test_make_aut_validates(q3):
    fld = q3.tower
    with pytest.raises(ValueError):
        make_aut(q3, fld.one, fld.zero, fld.one)  # Tr(1) != 0
    with pytest.raises(ValueError):
        make_aut(q3, fld.zero, fld.zero, fld.element(0))  # lam = 0
    d = trace_zero_set(fld)[1]
    g = make_aut(q3, d, fld.zero, fld.one)
    assert symbolic_invariance(q3, g)


def test_invariance_rejects_bad_shift(q3):
    # a shift with nonzero trace moves the curve off itself
    from asmcurve.aut import PlaneAut
    fld = q3.tower
    bad = PlaneAut(alpha=fld.one, beta=fld.zero, lam=fld.one, swap=False)
    assert not symbolic_invariance(q3, bad)


def test_composition_against_pointwise_action(q3):
    import random
    rng = random.Random(5)
    els = closure(q3)
    pts = enumerate_points(q3, 2)
    for _ in range(40):
        g, h = rng.choice(els), rng.choice(els)
        gh = g.compose(h)
        for P in pts[:5]:
            assert gh.apply(P) == g.apply(h.apply(P))


def test_inverse_and_identity(q3):
    for g in closure(q3):
        assert g.compose(g.inverse()).is_identity()
        assert g.inverse().compose(g).is_identity()
    assert identity_aut(q3).is_identity()


def test_xi_is_an_involution(q3):
    s = xi(q3)
    assert s.compose(s).is_identity()
    assert symbolic_invariance(q3, s)


def test_scale_generator_order(q3):
    lam = scale_generator(q3)
    q = q3.q
    n = 1
    x = lam
    while x.i != 1:
        x = x * lam
        n += 1
    assert n == q - 1


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_closure_order(p, e):
    params = asm_curve(p, e, 1)
    q = params.q
    els = closure(params)
    assert len(els) == 2 * q * q * (q - 1)
    assert all(symbolic_invariance(params, g) for g in els)


def test_structure_report(q3):
    q = q3.q
    rep = closure_and_structure(q3)
    assert rep.order == 2 * q * q * (q - 1)
    assert rep.delta_order == q * q
    assert rep.delta1_order == rep.delta2_order == q
    assert rep.c_order == q - 1
    assert rep.dihedral_order == 2 * (q - 1)
    assert rep.delta_normal and rep.delta_elementary_abelian
    assert rep.dihedral_relations and rep.semidirect_verified


def test_orbits_and_transitivity(q3):
    q = q3.q
    orb = orbit_analysis(q3)
    assert orb.orbit_sizes == sorted([2 * q, (q - 1) * q * q])
    assert orb.sigma_size == (q - 1) * q * q
    assert orb.sigma_sharply_transitive
    assert orb.faithful


def test_xi_fixed_points(q3):
    orb = orbit_analysis(q3)
    got = {(P.u.i, P.v.i) for P in orb.xi_fixed_points}
    want = {(P.u.i, P.v.i) for P in orb.xi_fixed_points_expected}
    assert got == want
    # every fixed point is diagonal with Tr(a)^2 = c
    for P in orb.xi_fixed_points:
        assert P.u == P.v
        t = trace_q(P.u)
        assert t * t == q3.c


def test_rational_point_form(q3):
    quad = quadratic_descriptor(q3.tower)
    for P in enumerate_points(q3, 2):
        form = rational_point_form(q3, P, quad)
        assert form.constraint_holds
        # reconstruct the point from its two-component form
        assert form.a1 + quad.i_gen * form.b1 == P.u
        assert form.a2 + quad.i_gen * form.b2 == P.v


def test_rational_point_form_char2():
    params = asm_curve(2, 2, 1)
    quad = quadratic_descriptor(params.tower)
    for P in enumerate_points(params, 2):
        form = rational_point_form(params, P, quad)
        assert form.constraint_holds
        assert form.b1 * form.b2 == params.c


def test_linear_search_matches_closure_order():
    for p, e in [(2, 1), (3, 1), (2, 2)]:
        params = asm_curve(p, e, 1)
        q = params.q
        assert linear_automorphism_search(params) == 2 * q * q * (q - 1)


def test_generators_generate(q3):
    gens = generators(q3)
    assert all(symbolic_invariance(q3, g) for g in gens)
    assert len(closure(q3)) == 36
