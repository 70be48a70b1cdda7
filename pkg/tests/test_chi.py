import pytest
from hypothesis import given, strategies as st

from hsobstruct.chi import ALLOWED, EXCLUDED, INCONCLUSIVE, ChiVerdict, chi_range, two_step_compatible
from hsobstruct.errors import BadGamma, ObstructionError


def values(beta):
    return [v.chi_x for v in chi_range(beta)]


def test_lemma1_examples():
    assert values(0) == [1]
    assert values(1) == [0]
    assert sorted(values(3)) == [-2, 0]


def test_theorem6_examples():
    assert two_step_compatible(4, 2) is False
    assert two_step_compatible(5, 4) is True
    assert two_step_compatible(6, 4) is False
    with pytest.raises(BadGamma):
        two_step_compatible(6, 2)


@given(st.integers(0, 40))
def test_lemma1_size_parity_range(beta):
    rows = chi_range(beta)
    assert len(rows) == beta // 2 + 1
    for v in rows:
        assert (v.chi_x - 1 - beta) % 2 == 0
        assert 1 - beta <= v.chi_x <= 1 <= v.chi_y
        assert v.chi_x + v.chi_y == 2
        assert v.status == ALLOWED
        assert 2 * v.gamma >= beta


@given(st.integers(0, 40), st.data())
def test_theorem6_only_extreme_values(beta, data):
    gamma = data.draw(st.integers((beta + 1) // 2, beta))
    if two_step_compatible(beta, gamma):
        assert 1 + beta - 2 * gamma in (1 - beta, 3 - beta)


def test_verdict_rejects_bad_values():
    with pytest.raises(ObstructionError):
        ChiVerdict(3, -1)
    with pytest.raises(ObstructionError):
        ChiVerdict(2, 3)


def test_exclusion_is_sticky():
    v = ChiVerdict(2, -1)
    v.exclude("t", "proof")
    v.mark_inconclusive("t", "unknown")
    assert v.status == EXCLUDED
    w = ChiVerdict(2, -1)
    w.mark_inconclusive("t", "unknown")
    assert w.status == INCONCLUSIVE
    assert w.to_json()["chi_y"] == 3


def test_interface_aliases():
    from hsobstruct import chi
    assert chi.lemma1_set is chi_range
    assert chi.theorem6_compatible is two_step_compatible
