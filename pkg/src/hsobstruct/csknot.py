"""Quotient orders for Cappell-Shaneson 2-knot groups.

For the cubic f_a(t) = t^3 - a t^2 + (a - 1) t - 1 with companion matrix A,
the quotient of the knot group by the normal closure of t^c is finite of
order c * |det(A^c - I)|, and |det(A^c - I)| = |Res(f_a, t^c - 1)|.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Tuple

from . import zlinalg
from .errors import BadParameter


def cubic_coefficients(a: int) -> Tuple[int, int, int, int]:
    """Coefficients of f_a, leading first."""
    return 1, -a, a - 1, -1


def f(a: int, t):
    return t ** 3 - a * t ** 2 + (a - 1) * t - 1


def companion(a: int) -> List[List[int]]:
    """Companion matrix whose last column is (1, 1 - a, a); char poly is f_a."""
    return [[0, 0, 1], [1, 0, 1 - a], [0, 1, a]]


def _check(a: int) -> None:
    if a <= 5:
        raise BadParameter(f"a={a}: the root estimates need a > 5")


def root_interval_points(a: int) -> List[Fraction]:
    return [Fraction(1, a), Fraction(1, 2), 1 - Fraction(1, a), Fraction(a - 2), Fraction(a)]


def verify_root_intervals(a: int) -> bool:
    """Exact sign check placing the three real roots as
    1/a < r3 < 1/2 < r2 < 1 - 1/a < a - 2 < r1 < a.

    f_a is negative on the whole gap between the middle and largest root,
    hence the expected pattern (-, +, -, -, +).
    """
    _check(a)
    pts = root_interval_points(a)
    if any(p >= q for p, q in zip(pts, pts[1:])):
        return False
    signs = [f(a, p) > 0 for p in pts]
    return signs == [False, True, False, False, True] and all(f(a, p) != 0 for p in pts)


def resultant_order(a: int, c: int) -> int:
    """|det(A^c - I)|, the order of Z^3 / (A^c - I) Z^3."""
    if c < 1:
        raise BadParameter("c must be positive")
    m = zlinalg.matpow(companion(a), c)
    for i in range(3):
        m[i][i] -= 1
    return abs(zlinalg.det(m))


def quotient_order(a: int, c: int) -> int:
    _check(a)
    return c * resultant_order(a, c)


def order_bound(a: int, c: int) -> int:
    """The claimed lower bound c * a^(c-1) (strict, for a > 3c)."""
    return c * a ** (c - 1)


def distinct_orders(pairs: Iterable[Tuple[int, int]]) -> bool:
    """True iff the quotient orders are pairwise different."""
    orders = []
    for a, c in pairs:
        if a <= 3 * c:
            raise BadParameter(f"need a > 3c, got a={a}, c={c}")
        orders.append(quotient_order(a, c))
    return len(set(orders)) == len(orders)
