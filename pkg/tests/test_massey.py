from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hsobstruct.errors import MixedGroups
from hsobstruct.massey import (
    NilElement,
    antisymmetrize,
    coboundary1,
    cochains,
    cocycle_defect,
    generators,
    identity,
    nil_mul,
    restriction_independence,
    triple_product_cocycles,
    verify_identities,
)

EXPONENTS = (1, 2, 3, 5)


def elements(e, bound=20):
    c = st.integers(-bound, bound)
    return st.builds(lambda m, n, p: NilElement(m, n, p, e), c, c, c)


def as_matrix(g):
    """Heisenberg-type integer matrix model: x, y unipotent, t scaled by 1/e."""
    e = g.e
    # x^m y^n t^p with [x, y] = t^e; represent t = z^(1/e) via rational entries
    return (g.m, g.n, Fraction(g.p, e))


def matrix_mul(a, b):
    # (m, n, q)(m', n', q') with z = t^e central and yx = z^{-1} xy
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2] - a[1] * b[0])


def test_multiplication_examples():
    for e in EXPONENTS:
        x, y, t = generators(e)
        assert nil_mul(x, y) == NilElement(1, 1, 0, e)
        assert nil_mul(y, x) == NilElement(1, 1, -e, e)
        assert nil_mul(identity(e), x) == x
    with pytest.raises(MixedGroups):
        nil_mul(NilElement(1, 0, 0, 1), NilElement(1, 0, 0, 2))


def test_cochain_examples():
    co = cochains(1)
    assert co.theta(NilElement(0, 0, 1, 1)) == -1
    assert co.phi_xi(NilElement(2, 0, 0, 1)) == -1
    assert co.xi(NilElement(0, 7, 0, 1)) == 0


def test_coboundary_examples():
    co = cochains(1)
    x, y, _ = generators(1)
    assert coboundary1(co.theta)(x, y) == 1
    assert coboundary1(co.theta)(y, x) == 0
    assert coboundary1(co.phi_xi)(x, x) == 1


def test_cocycle_examples():
    c1, c2 = triple_product_cocycles(1)
    x, y, z = generators(1)
    assert c1(x, z) == -1
    assert c2(z, y) == -1
    for g in (x, y, z, nil_mul(x, y)):
        assert c1(identity(1), g) == 0 and c2(identity(1), g) == 0


@pytest.mark.parametrize("e", EXPONENTS)
def test_restriction_independence(e):
    r = restriction_independence(e)
    assert r.independent and r.vanishes_off_diagonal
    assert r.values[0][1] == 0 and r.values[1][0] == 0
    assert r.values[0][0] == Fraction(-1, e) and r.values[1][1] == Fraction(1, e)


@pytest.mark.parametrize("e", EXPONENTS)
def test_coboundaries_antisymmetrize_to_zero_on_abelian_subgroups(e):
    co = cochains(e)
    x, _, t = generators(e)
    for f in (co.theta, co.phi_xi, co.phi_eta):
        df = coboundary1(f)
        for m in range(-2, 3):
            for p in range(-2, 3):
                g = NilElement(m, 0, p, e)
                assert antisymmetrize(df, g, t) == 0
                assert antisymmetrize(df, g, x) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(EXPONENTS).flatmap(lambda e: st.tuples(elements(e), elements(e), elements(e))))
def test_group_laws(triple):
    g, h, k = triple
    e = g.e
    assert nil_mul(nil_mul(g, h), k) == nil_mul(g, nil_mul(h, k))
    assert nil_mul(g, g.inverse()) == identity(e) == nil_mul(g.inverse(), g)
    assert nil_mul(identity(e), g) == g == nil_mul(g, identity(e))
    # independent model with the central coordinate rescaled
    prod = matrix_mul(as_matrix(g), as_matrix(h))
    assert as_matrix(nil_mul(g, h)) == prod
    co = cochains(e)
    assert co.xi(nil_mul(g, h)) == co.xi(g) + co.xi(h)
    assert co.eta(nil_mul(g, h)) == co.eta(g) + co.eta(h)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(EXPONENTS).flatmap(lambda e: st.tuples(elements(e), elements(e), elements(e))))
def test_cocycle_identity(triple):
    c1, c2 = triple_product_cocycles(triple[0].e)
    assert cocycle_defect(c1, *triple) == 0
    assert cocycle_defect(c2, *triple) == 0


def test_commutator_is_central_power():
    for e in EXPONENTS:
        x, y, t = generators(e)
        comm = nil_mul(nil_mul(x, y), nil_mul(x.inverse(), y.inverse()))
        assert comm == NilElement(0, 0, e, e)
        for g in (x, y):
            assert nil_mul(g, t) == nil_mul(t, g)


def test_verify_identities_small_run(seed):
    assert all(verify_identities(2, samples=300, seed=seed).values())
