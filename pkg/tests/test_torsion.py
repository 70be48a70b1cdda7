import random
from fractions import Fraction
from itertools import product

import pytest

from hsobstruct.errors import NotSymmetric, ObstructionError, TooLarge
from hsobstruct.torsion import (
    FiniteAbelian,
    LinkingPairing,
    check_lagrangian,
    hyperbolic_pairing,
    is_direct_double,
    is_hyperbolic,
    pairing_from_linking_matrix,
)


def G(*factors):
    return FiniteAbelian(tuple(factors))


def all_subgroups(g):
    """Every subgroup, by closing {0} under joins with cyclic subgroups."""
    elems = list(product(*[range(d) for d in g.invariant_factors]))

    def add(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, g.invariant_factors))

    def join(sub, x):
        out = set(sub)
        frontier = list(sub)
        while frontier:
            y = frontier.pop()
            z = add(y, x)
            if z not in out:
                out.add(z)
                frontier.append(z)
        return frozenset(out)

    zero = tuple(0 for _ in g.invariant_factors)
    seen = {frozenset([zero])}
    todo = [frozenset([zero])]
    while todo:
        sub = todo.pop()
        for x in elems:
            if x not in sub:
                bigger = join(sub, x)
                if bigger not in seen:
                    seen.add(bigger)
                    todo.append(bigger)
    return seen, zero


def oracle_hyperbolic(p):
    g = p.group
    subs, zero = all_subgroups(g)
    n = g.order
    iso = [s for s in subs if len(s) ** 2 == n and all(p(x, y) == 0 for x in s for y in s)]
    return any(a & b == {zero} for a in iso for b in iso)


def random_pairing(rng, factors):
    k = len(factors)
    gram = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            d = min(factors[i], factors[j])
            # entry must be killed by both orders
            val = Fraction(rng.randrange(d), d)
            gram[i][j] = gram[j][i] = val
    return LinkingPairing(G(*factors), tuple(map(tuple, gram)))


CORPUS_GROUPS = [(2, 2), (3, 3), (2, 4), (4, 4), (2, 2, 2, 2), (9,), (3, 9), (2, 6), (6, 6),
                 (5, 5), (2, 2, 2), (2, 2, 4, 4), (3, 3, 3, 3), (4, 8), (8, 8), (3, 6)]


def corpus(seed):
    rng = random.Random(seed)
    out = [hyperbolic_pairing(n) for n in range(2, 13)]
    for factors in CORPUS_GROUPS:
        for _ in range(4):
            out.append(random_pairing(rng, factors))
    for m in ([[2, 0], [0, -2]], [[3]], [[0, 3], [3, 0]], [[2, 1], [1, 2]], [[4, 0], [0, 4]],
              [[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 2], [0, 0, 2, 0]]):
        out.append(pairing_from_linking_matrix(m))
    return out


def test_direct_double_examples():
    assert is_direct_double(G(2, 2))
    assert not is_direct_double(G(2))
    assert is_direct_double(FiniteAbelian.from_orders([2, 4, 4, 2]))
    assert is_direct_double(FiniteAbelian.from_orders([6, 2, 3]))
    assert not is_direct_double(G(2, 4))


def test_hyperbolic_examples():
    for n in range(2, 13):
        p = hyperbolic_pairing(n)
        w = is_hyperbolic(p)
        assert w is not None and check_lagrangian(p, w)
    assert is_hyperbolic(LinkingPairing(G(7), ((Fraction(1, 7),),))) is None
    assert is_hyperbolic(LinkingPairing(G(9), ((Fraction(1, 9),),))) is None
    half = Fraction(1, 2)
    assert is_hyperbolic(LinkingPairing(G(2, 2), ((half, 0), (0, half)))) is None


def test_order_bound():
    with pytest.raises(TooLarge):
        is_hyperbolic(hyperbolic_pairing(101))
    assert is_hyperbolic(hyperbolic_pairing(4), order_bound=16) is not None


def test_pairing_validation():
    with pytest.raises(NotSymmetric):
        LinkingPairing(G(4, 4), ((0, Fraction(1, 4)), (Fraction(1, 2), 0)))
    with pytest.raises(ObstructionError):
        LinkingPairing(G(2), ((Fraction(1, 3),),))


def test_pairing_json_roundtrip():
    data = {"kind": "linking", "factors": [2, 2], "gram": [["0", "1/2"], ["1/2", "0"]]}
    p = LinkingPairing.from_json(data)
    assert p.to_json() == data


def test_linking_matrix_pairings():
    p = pairing_from_linking_matrix([[3]])
    assert p.group.invariant_factors == (3,) and p.gram == ((Fraction(2, 3),),)
    assert pairing_from_linking_matrix([[0, 0], [0, 0]]) is None
    p = pairing_from_linking_matrix([[2, 0], [0, -2]])
    assert p.group.invariant_factors == (2, 2) and p.is_nondegenerate()
    assert is_hyperbolic(p) is None
    assert is_hyperbolic(pairing_from_linking_matrix([[0, 3], [3, 0]])) is not None


def test_hyperbolic_agrees_with_oracle(seed):
    for p in corpus(seed):
        w = is_hyperbolic(p)
        assert (w is not None) == oracle_hyperbolic(p), p
        if w is not None:
            assert check_lagrangian(p, w)
            assert is_direct_double(p.group)
