"""Cochain calculus on the Heisenberg-type group <x, y, t | [x, y] = t^e, t central>.

Elements are kept in the normal form x^m y^n t^p. Cochains are plain
callables with trivial coefficients in Q (returning ints where the value is
integral), and the coboundary of a 1-cochain is
``(df)(g, h) = f(g) + f(h) - f(gh)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Tuple, Union

from .errors import BadParameter, MixedGroups


@dataclass(frozen=True)
class NilElement:
    m: int
    n: int
    p: int
    e: int = 1

    def __mul__(self, other: "NilElement") -> "NilElement":
        return nil_mul(self, other)

    def inverse(self) -> "NilElement":
        # (m, n, p)^-1 = (-m, -n, -p - e*n*m)
        return NilElement(-self.m, -self.n, -self.p - self.e * self.n * self.m, self.e)


def nil_mul(g: NilElement, h: NilElement) -> NilElement:
    """Moving y^n past x^m' costs t^(-e n m'), since y x = t^(-e) x y."""
    if g.e != h.e:
        raise MixedGroups(f"e={g.e} and e={h.e}")
    return NilElement(g.m + h.m, g.n + h.n, g.p + h.p - g.e * g.n * h.m, g.e)


def generators(e: int) -> Tuple[NilElement, NilElement, NilElement]:
    """x, y and the central t."""
    return NilElement(1, 0, 0, e), NilElement(0, 1, 0, e), NilElement(0, 0, 1, e)


def identity(e: int) -> NilElement:
    return NilElement(0, 0, 0, e)


Value = Union[int, Fraction]
Cochain1 = Callable[[NilElement], Value]
Cochain2 = Callable[[NilElement, NilElement], Value]


class Cochains(NamedTuple):
    xi: Cochain1
    eta: Cochain1
    phi_xi: Cochain1
    phi_eta: Cochain1
    theta: Cochain1


def cochains(e: int) -> Cochains:
    if e < 1:
        raise BadParameter("e must be positive")

    # m(1 - m) is always even, so only theta can leave the integers
    def xi(g):
        return g.m

    def eta(g):
        return g.n

    def phi_xi(g):
        return g.m * (1 - g.m) // 2

    def phi_eta(g):
        return g.n * (1 - g.n) // 2

    if e == 1:
        def theta(g):
            return -g.m * g.n - g.p
    else:
        def theta(g):
            return Fraction(-g.m * g.n * e - g.p, e)

    return Cochains(xi, eta, phi_xi, phi_eta, theta)


def coboundary1(f: Cochain1) -> Cochain2:
    def df(g, h):
        return f(g) + f(h) - f(g * h)

    return df


def cup11(u: Cochain1, v: Cochain1) -> Cochain2:
    def uv(g, h):
        return u(g) * v(h)

    return uv


def add2(a: Cochain2, b: Cochain2) -> Cochain2:
    def s(g, h):
        return a(g, h) + b(g, h)

    return s


def cocycle_defect(c: Cochain2, g: NilElement, h: NilElement, k: NilElement) -> Value:
    """Zero for every triple exactly when ``c`` is a 2-cocycle."""
    return c(h, k) - c(g * h, k) + c(g, h * k) - c(g, h)


def triple_product_cocycles(e: int) -> Tuple[Cochain2, Cochain2]:
    """Representatives of <xi, xi, eta> and <xi, eta, eta>."""
    co = cochains(e)
    c1 = add2(cup11(co.phi_xi, co.eta), cup11(co.xi, co.theta))
    c2 = add2(cup11(co.theta, co.eta), cup11(co.xi, co.phi_eta))
    return c1, c2


def antisymmetrize(c: Cochain2, g: NilElement, h: NilElement) -> Value:
    return c(g, h) - c(h, g)


@dataclass
class IndependenceResult:
    independent: bool
    # rows: c1, c2; columns: subgroup <x, t>, subgroup <y, t>
    values: List[List[Value]]
    vanishes_off_diagonal: bool


def restriction_independence(e: int, grid: int = 3) -> IndependenceResult:
    """Restrict both cocycles to the abelian subgroups <x, t> and <y, t>.

    On an abelian subgroup the antisymmetrization of a cocycle only depends on
    its class (coboundaries give f(gh) - f(hg) = 0), and on Z^2 it detects the
    class. ``c1`` must be nonzero on <x, t> and identically zero on <y, t>,
    ``c2`` the other way round; both are checked over a grid of elements.
    """
    x, y, t = generators(e)
    c1, c2 = triple_product_cocycles(e)
    values = [
        [antisymmetrize(c1, x, t), antisymmetrize(c1, y, t)],
        [antisymmetrize(c2, x, t), antisymmetrize(c2, y, t)],
    ]
    rng = range(-grid, grid + 1)
    xt = [NilElement(m, 0, p, e) for m in rng for p in rng]
    yt = [NilElement(0, n, p, e) for n in rng for p in rng]
    off_zero = all(antisymmetrize(c1, g, h) == 0 for g in yt for h in yt) and all(
        antisymmetrize(c2, g, h) == 0 for g in xt for h in xt
    )
    independent = values[0][0] != 0 and values[1][1] != 0 and off_zero
    return IndependenceResult(independent, values, off_zero)


def random_element(rng: random.Random, e: int, bound: int = 100) -> NilElement:
    return NilElement(rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(-bound, bound), e)


def verify_identities(e: int, samples: int = 10_000, seed: int = 0, bound: int = 100) -> Dict[str, bool]:
    """Check the three primitive identities, the cocycle identities and independence.

    Each key maps to whether the identity held on every sample.
    """
    rng = random.Random(seed)
    co = cochains(e)
    primitives = {
        "d(phi_xi) = xi.xi": (coboundary1(co.phi_xi), cup11(co.xi, co.xi)),
        "d(phi_eta) = eta.eta": (coboundary1(co.phi_eta), cup11(co.eta, co.eta)),
        "d(theta) = xi.eta": (coboundary1(co.theta), cup11(co.xi, co.eta)),
    }
    results = {name: True for name in primitives}
    for _ in range(samples):
        g, h = random_element(rng, e, bound), random_element(rng, e, bound)
        for name, (lhs, rhs) in primitives.items():
            if results[name] and lhs(g, h) != rhs(g, h):
                results[name] = False
    c1, c2 = triple_product_cocycles(e)
    ok1 = ok2 = True
    for _ in range(samples):
        g, h, k = (random_element(rng, e, bound) for _ in range(3))
        ok1 = ok1 and cocycle_defect(c1, g, h, k) == 0
        ok2 = ok2 and cocycle_defect(c2, g, h, k) == 0
    results["<xi,xi,eta> cocycle"] = ok1
    results["<xi,eta,eta> cocycle"] = ok2
    results["restriction independence"] = restriction_independence(e).independent
    return results
