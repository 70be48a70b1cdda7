from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from hsobstruct.chi import ALLOWED, EXCLUDED, INCONCLUSIVE
from hsobstruct.errors import BadParameter
from hsobstruct.seifert import (
    SeifertData,
    euler_invariant,
    homology,
    nonorientable_constraints,
    obstruct,
    relation_matrix,
    skew_symmetric,
    smooth_obstructions,
    weakly_skew_symmetric,
)


def S(genus, *pairs):
    return SeifertData(genus, tuple(pairs))


def statuses(s):
    return {v.chi_x: v.status for v in obstruct(s)}


def coprime_pair():
    return st.tuples(st.integers(2, 7), st.integers(-9, 9)).filter(
        lambda p: gcd(*p) == 1)


def test_euler_examples():
    assert euler_invariant(S(1, (1, 1))) == -1
    assert euler_invariant(S(0, (2, 1), (2, -1))) == 0
    assert euler_invariant(S(0, (3, 1), (5, 2))) == Fraction(-11, 15)


def test_homology_examples():
    assert homology(S(1, (1, 1))) == (2, [])
    assert homology(S(0, (2, 1), (2, -1))) == (1, [])
    for g in range(0, 4):
        assert homology(S(g, (1, 0)))[0] == 2 * g + 1


def test_homology_nonorientable_flat_manifold():
    # the half-turn flat manifold fibres over the Klein bottle with trivial shift
    assert homology(S(-2, (1, 0))) == (1, [2, 2])


def test_unit_pairs_merge():
    assert S(1, (1, 1)).normalized() == S(1, (1, 0), (1, 1)).normalized()
    assert homology(S(1, (1, 1))) == homology(S(1, (1, 0), (1, 1)))


def test_obstruct_examples():
    assert statuses(S(1, (1, 1))) == {1: ALLOWED, -1: EXCLUDED}
    assert statuses(S(1, (1, 0))) == {0: ALLOWED, -2: EXCLUDED}
    assert statuses(S(0, (2, 1), (2, -1))) == {0: ALLOWED}


def test_zero_euler_genus_zero_requires_skew():
    s = S(0, (3, 1), (3, 1), (3, 1), (1, -1))
    assert euler_invariant(s) == 0 and not skew_symmetric(s)
    assert set(statuses(s).values()) == {EXCLUDED}


def test_nonorientable_examples():
    b = nonorientable_constraints(1, 2)
    assert b.normal_data_ok and b.realizable == (1,)
    b = nonorientable_constraints(3, 6)
    assert b.normal_data_ok and b.realizable == (-1,) and 1 in b.inconclusive
    assert not nonorientable_constraints(2, 1).normal_data_ok
    assert nonorientable_constraints(1, -2).normal_data_ok
    with pytest.raises(BadParameter):
        nonorientable_constraints(0, 0)


def test_nonorientable_bundle_rows():
    got = statuses(S(-3, (1, 6)))
    assert got[-1] == ALLOWED and got[1] == INCONCLUSIVE


def test_smooth_examples():
    assert smooth_obstructions(S(0, (2, 1), (2, -1))).skew_symmetric
    assert weakly_skew_symmetric(S(-1, (5, 2), (5, -3)))
    assert not skew_symmetric(S(-1, (5, 2), (5, -3)))
    frag = smooth_obstructions(S(0, (2, 1), (4, -1)))
    assert not frag.even_orders_same_2adic and frag.topological_obstruction
    assert smooth_obstructions(S(2, (3, 1), (3, -1))).embeds_smoothly == "yes"
    assert smooth_obstructions(S(1, (3, 1), (3, 1))).embeds_smoothly in ("no", "unknown")


def test_json_roundtrip():
    s = SeifertData.from_json({"kind": "seifert", "genus": 1, "pairs": [[1, 1]]})
    assert SeifertData.from_json(s.to_json()) == s


@settings(max_examples=100, deadline=None)
@given(st.integers(-3, 3), st.lists(coprime_pair(), max_size=4), st.integers(-3, 3))
def test_homology_matches_sympy(genus, pairs, e):
    s = S(genus, *pairs, (1, e))
    m, ncols = relation_matrix(s)
    d = sympy_snf(Matrix(m), domain=ZZ) if m else Matrix.zeros(0, ncols)
    diag = [abs(int(d[i, i])) for i in range(min(d.shape))]
    beta = ncols - sum(1 for x in diag if x)
    assert homology(s) == (beta, sorted(x for x in diag if x > 1))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.lists(coprime_pair(), max_size=4), st.integers(-3, 3))
def test_betti_regimes(genus, pairs, e):
    s = S(genus, *pairs, (1, e))
    beta, _ = homology(s)
    assert beta == (2 * genus + 1 if euler_invariant(s) == 0 else 2 * genus)
    rows = obstruct(s)
    if euler_invariant(s) != 0:
        assert [v.chi_x for v in rows if v.status != EXCLUDED] == [1]


@settings(max_examples=100, deadline=None)
@given(st.lists(coprime_pair(), max_size=3), st.lists(coprime_pair(), max_size=3))
def test_euler_additive_and_skew_implications(p, q):
    assert euler_invariant(S(0, *p, *q)) == euler_invariant(S(0, *p)) + euler_invariant(S(0, *q))
    skew = S(0, *p, *[(a, -b) for a, b in p])
    assert skew_symmetric(skew) and weakly_skew_symmetric(skew)
    assert euler_invariant(skew) == 0
    s = S(0, *p)
    if skew_symmetric(s):
        assert weakly_skew_symmetric(s) and euler_invariant(s) == 0
