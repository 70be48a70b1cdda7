"""Finite abelian groups with Q/Z-valued linking pairings.

Elements of ``Z/d1 + ... + Z/dk`` are tuples of residues. A pairing is
hyperbolic when the group splits as ``N + K`` with both summands
self-annihilating; nondegeneracy then makes ``K`` dual to ``N``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

from . import zlinalg
from .errors import DimensionMismatch, NotSymmetric, ObstructionError, TooLarge

Element = Tuple[int, ...]
DEFAULT_ORDER_BOUND = 10_000


def _prime_powers(n: int) -> List[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FiniteAbelian:
    invariant_factors: Tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(d) for d in self.invariant_factors)
        for d in f:
            if d < 2:
                raise ObstructionError(f"invariant factor {d} must be at least 2")
        for a, b in zip(f, f[1:]):
            if b % a:
                raise ObstructionError(f"{a} does not divide {b}")
        object.__setattr__(self, "invariant_factors", f)

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "FiniteAbelian":
        """Normalize any list of cyclic orders to invariant factors."""
        snf = zlinalg.smith_normal_form([[d if i == j else 0 for j in range(len(orders))]
                                          for i, d in enumerate(orders)], len(orders))
        return cls(tuple(snf.invariant_factors()))

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def elementary_divisors(self) -> List[int]:
        return sorted(q for d in self.invariant_factors for q in _prime_powers(d))

    def elements(self) -> Iterator[Element]:
        def rec(i, prefix):
            if i == len(self.invariant_factors):
                yield tuple(prefix)
                return
            for x in range(self.invariant_factors[i]):
                yield from rec(i + 1, prefix + [x])

        return rec(0, [])

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def scale(self, k: int, x: Element) -> Element:
        return tuple((k * a) % d for a, d in zip(x, self.invariant_factors))

    @property
    def zero(self) -> Element:
        return (0,) * len(self.invariant_factors)


def is_direct_double(g: FiniteAbelian) -> bool:
    """G = T + T for some T, i.e. every elementary divisor occurs an even number of times."""
    return all(n % 2 == 0 for n in Counter(g.elementary_divisors()).values())


@dataclass(frozen=True)
class LinkingPairing:
    group: FiniteAbelian
    gram: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        k = len(self.group.invariant_factors)
        gram = tuple(tuple(Fraction(x) % 1 for x in row) for row in self.gram)
        if len(gram) != k or any(len(row) != k for row in gram):
            raise DimensionMismatch(f"gram must be {k}x{k}")
        for i in range(k):
            for j in range(k):
                if gram[i][j] != gram[j][i]:
                    raise NotSymmetric(f"gram[{i}][{j}] != gram[{j}][{i}]")
                if (self.group.invariant_factors[i] * gram[i][j]).denominator != 1:
                    raise ObstructionError(f"gram[{i}][{j}] incompatible with the order of generator {i}")
        object.__setattr__(self, "gram", gram)

    @classmethod
    def from_json(cls, data: Mapping) -> "LinkingPairing":
        return cls(FiniteAbelian(tuple(data["factors"])),
                   tuple(tuple(Fraction(x) for x in row) for row in data["gram"]))

    def to_json(self) -> dict:
        return {
            "kind": "linking",
            "factors": list(self.group.invariant_factors),
            "gram": [[str(x) for x in row] for row in self.gram],
        }

    def __call__(self, x: Element, y: Element) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(x):
            if a:
                row = self.gram[i]
                for j, b in enumerate(y):
                    if b:
                        total += a * b * row[j]
        return total % 1

    def is_nondegenerate(self) -> bool:
        elems = list(self.group.elements())
        return all(any(self(x, y) for y in elems) for x in elems if any(x))


def hyperbolic_pairing(n: int) -> LinkingPairing:
    """Z/n + Z/n with l((a, b), (c, d)) = (ad + bc) / n."""
    h = Fraction(1, n)
    return LinkingPairing(FiniteAbelian((n, n)), ((Fraction(0), h), (h, Fraction(0))))


def span(g: FiniteAbelian, gens: Sequence[Element]) -> FrozenSet[Element]:
    seen = {g.zero}
    frontier = [g.zero]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.add(x, s)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def isotropic_subgroups(p: LinkingPairing, order: int) -> List[Tuple[FrozenSet[Element], Tuple[Element, ...]]]:
    """All self-annihilating subgroups of the given order, with generators.

    Depth-first over generator tuples; an element is only added when it pairs
    trivially with itself and with every generator chosen so far.
    """
    g = p.group
    elems = [x for x in g.elements() if any(x) and p(x, x) == 0]
    found: Dict[FrozenSet[Element], Tuple[Element, ...]] = {}
    visited = set()

    def grow(sub: FrozenSet[Element], gens: Tuple[Element, ...], start: int) -> None:
        if sub in visited:
            return
        visited.add(sub)
        if len(sub) == order:
            found.setdefault(sub, gens)
            return
        for idx in range(start, len(elems)):
            x = elems[idx]
            if x in sub or any(p(x, s) for s in gens):
                continue
            bigger = span(g, gens + (x,))
            if order % len(bigger):
                continue
            grow(bigger, gens + (x,), idx + 1)

    grow(frozenset({g.zero}), (), 0)
    return sorted(found.items(), key=lambda item: sorted(item[0]))


@dataclass(frozen=True)
class LagrangianSplitting:
    lagrangian: Tuple[Element, ...]
    complement: Tuple[Element, ...]

    def to_json(self) -> dict:
        return {"lagrangian": [list(x) for x in self.lagrangian],
                "complement": [list(x) for x in self.complement]}


def is_hyperbolic(p: LinkingPairing, order_bound: int = DEFAULT_ORDER_BOUND) -> Optional[LagrangianSplitting]:
    """Generators of complementary self-annihilating subgroups, or ``None``.

    ``None`` is a proof of non-hyperbolicity: the search is exhaustive.
    """
    n = p.group.order
    if n > order_bound:
        raise TooLarge(f"group order {n} exceeds bound {order_bound}")
    if n == 1:
        return LagrangianSplitting((), ())
    root = int(round(n ** 0.5))
    while root * root > n:
        root -= 1
    while (root + 1) ** 2 <= n:
        root += 1
    if root * root != n or not is_direct_double(p.group):
        return None
    subs = isotropic_subgroups(p, root)
    zero = p.group.zero
    for i, (nsub, ngens) in enumerate(subs):
        for ksub, kgens in subs[i + 1:]:
            if nsub & ksub == {zero}:
                return LagrangianSplitting(ngens, kgens)
    return None


def check_lagrangian(p: LinkingPairing, w: LagrangianSplitting) -> bool:
    """Recheck a splitting from scratch: orders, self-annihilation, trivial meet."""
    g = p.group
    n = span(g, w.lagrangian)
    k = span(g, w.complement)
    return (
        len(n) * len(k) == g.order
        and len(n) == len(k)
        and n & k == {g.zero}
        and all(p(x, y) == 0 for x in n for y in n)
        and all(p(x, y) == 0 for x in k for y in k)
    )


def pairing_from_linking_matrix(m: Sequence[Sequence[int]]) -> Optional[LinkingPairing]:
    """Torsion linking pairing of the manifold surgered along a framed link.

    With ``U m V = D``, the torsion generator ``x_i = U^{-1} e_i`` has order
    ``d_i`` and ``d_i x_i = m (V e_i)``, so ``l(x_i, x_j) = -(V e_i . x_j) / d_i``.
    Returns ``None`` when H_1 has no torsion.
    """
    n = len(m)
    snf = zlinalg.smith_normal_form(m, n)
    idx = [i for i, d in enumerate(snf.diagonal) if d > 1]
    if not idx:
        return None
    factors = tuple(snf.diagonal[i] for i in idx)
    gens = {i: [snf.left_inv[r][i] for r in range(n)] for i in idx}
    gram = []
    for i in idx:
        w = [snf.right[r][i] for r in range(n)]
        gram.append(tuple(Fraction(-sum(a * b for a, b in zip(w, gens[j])), snf.diagonal[i]) for j in idx))
    return LinkingPairing(FiniteAbelian(factors), tuple(gram))
