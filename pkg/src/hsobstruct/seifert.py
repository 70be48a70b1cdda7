"""Seifert fibred inputs M(g; S) and M(-c; S).

``genus >= 0`` means an orientable base of that genus; ``genus = -c < 0``
means the connected sum of ``c`` projective planes. Pairs ``(1, e)`` are not
cone points; they are merged into one pair by summing ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, List, Mapping, Optional, Sequence, Tuple

from . import zlinalg
from .chi import (
    TAG_BUNDLE,
    TAG_FIBRE_NONZERO_EULER,
    TAG_FIBRE_TRIVIAL_EULER,
    ChiVerdict,
    chi_range,
)
from .errors import BadParameter, ObstructionError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class SeifertData:
    genus: int
    pairs: Tuple[Pair, ...] = ()

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        for a, b in pairs:
            if a < 1:
                raise ObstructionError(f"cone order {a} must be positive")
            if gcd(a, b) != 1:
                raise ObstructionError(f"pair ({a}, {b}) is not coprime")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_json(cls, data: Mapping) -> "SeifertData":
        return cls(int(data["genus"]), tuple(tuple(p) for p in data.get("pairs", [])))

    def to_json(self) -> dict:
        return {"kind": "seifert", "genus": self.genus, "pairs": [list(p) for p in self.pairs]}

    @property
    def orientable_base(self) -> bool:
        return self.genus >= 0

    @property
    def crosscaps(self) -> int:
        return -self.genus if self.genus < 0 else 0

    @property
    def cone_points(self) -> List[Pair]:
        return sorted(p for p in self.pairs if p[0] > 1)

    @property
    def fibre_shift(self) -> int:
        """Sum of ``e`` over all ``(1, e)`` pairs."""
        return sum(b for a, b in self.pairs if a == 1)

    def normalized(self) -> "SeifertData":
        pairs = self.cone_points
        if self.fibre_shift:
            pairs.append((1, self.fibre_shift))
        return SeifertData(self.genus, tuple(pairs))

    def __str__(self) -> str:
        body = ",".join(f"({a},{b})" for a, b in self.pairs)
        return f"M({self.genus};{{{body}}})"


def euler_invariant(s: SeifertData) -> Fraction:
    return -sum((Fraction(b, a) for a, b in s.pairs), Fraction(0))


def relation_matrix(s: SeifertData) -> Tuple[List[List[int]], int]:
    """Abelianized standard presentation.

    Columns: base generators (2g for an orientable base, c for a nonorientable
    one), one generator per pair, then the fibre h. An orientable total space
    over a nonorientable base makes the one-sided loops invert h, giving 2h = 0.
    """
    s = s.normalized()
    r = len(s.pairs)
    nbase = 2 * s.genus if s.orientable_base else s.crosscaps
    ncols = nbase + r + 1
    h = ncols - 1
    rows = []
    product_row = [0] * ncols
    if not s.orientable_base:
        for j in range(nbase):
            product_row[j] = 2
    for i in range(r):
        product_row[nbase + i] = 1
    if any(product_row):
        rows.append(product_row)
    for i, (a, b) in enumerate(s.pairs):
        row = [0] * ncols
        row[nbase + i] = a
        row[h] = b
        rows.append(row)
    if not s.orientable_base:
        row = [0] * ncols
        row[h] = 2
        rows.append(row)
    return rows, ncols


def homology(s: SeifertData) -> Tuple[int, List[int]]:
    """First Betti number and torsion invariant factors of H_1."""
    m, ncols = relation_matrix(s)
    snf = zlinalg.smith_normal_form(m, ncols)
    return ncols - snf.rank, snf.invariant_factors()


def obstruct(s: SeifertData, beta: Optional[int] = None) -> List[ChiVerdict]:
    """Admissible chi(X) rows annotated with the Seifert-specific exclusions."""
    if beta is None:
        beta, _ = homology(s)
    rows = chi_range(beta)
    eps = euler_invariant(s)
    if s.orientable_base and eps != 0:
        for v in rows:
            if v.chi_x != 1:
                v.exclude(
                    TAG_FIBRE_NONZERO_EULER,
                    f"Euler invariant {eps} != 0 over an orientable base: the Massey "
                    "triple products force both regions to have chi = 1",
                )
    elif s.orientable_base and s.genus >= 1:
        for v in rows:
            if v.chi_x == 1 - beta:
                v.exclude(
                    TAG_FIBRE_TRIVIAL_EULER,
                    "cup-product 3-form is nonzero, so H^1(M) cannot restrict from X alone",
                )
            elif v.chi_x < 0:
                v.support(
                    TAG_FIBRE_TRIVIAL_EULER,
                    "any such embedding maps the regular fibre nontrivially into H_1(Y; Q)",
                )
    elif s.orientable_base:
        # g = 0, eps = 0: beta = 1, the fibre carries H_1(X; Q)
        if not skew_symmetric(s):
            for v in rows:
                v.exclude(
                    TAG_FIBRE_TRIVIAL_EULER,
                    "fibre class is nonzero in H_1(X; Q) with chi(X) = 0, which "
                    "requires skew-symmetric Seifert data",
                )
    elif not s.cone_points:
        nb = nonorientable_constraints(s.crosscaps, s.fibre_shift)
        for v in rows:
            if not nb.normal_data_ok:
                v.exclude(TAG_BUNDLE, nb.detail)
            elif v.chi_x in nb.realizable:
                v.support(TAG_BUNDLE, "realized by a bipartedly sliceable link construction")
            else:
                v.mark_inconclusive(TAG_BUNDLE, "not realized by the known construction; open")
    return rows


@dataclass(frozen=True)
class NonorientableBundle:
    crosscaps: int
    euler: int
    normal_data_ok: bool
    realizable: Tuple[int, ...]
    inconclusive: Tuple[int, ...]

    @property
    def detail(self) -> str:
        if self.normal_data_ok:
            return f"|e| <= 2c and e = 2c mod 4 hold for c={self.crosscaps}, e={self.euler}"
        return (
            f"normal Euler number e={self.euler} violates |e| <= 2c, e = 2c mod 4 "
            f"for c={self.crosscaps}"
        )

    def to_json(self) -> dict:
        return {
            "crosscaps": self.crosscaps,
            "euler": self.euler,
            "normal_data_ok": self.normal_data_ok,
            "realizable": list(self.realizable),
            "inconclusive": list(self.inconclusive),
        }


def nonorientable_constraints(c: int, e: int) -> NonorientableBundle:
    """Embedding constraints for the circle bundle M(-c; (1, e))."""
    if c < 1:
        raise BadParameter("need at least one crosscap")
    ok = abs(e) <= 2 * c and (e - 2 * c) % 4 == 0
    if not ok:
        return NonorientableBundle(c, e, False, (), ())
    top = min(2 - abs(e) // 2, 1)
    realizable = tuple(x for x in range(top, 1 - c, -1) if (x - c) % 2 == 0)
    lemma = [v.chi_x for v in chi_range(c - 1)]
    return NonorientableBundle(c, e, True, realizable, tuple(x for x in lemma if x not in realizable))


def _perfect_matching(items: Sequence[Pair], compatible: Callable[[Pair, Pair], bool]) -> bool:
    if not items:
        return True
    if len(items) % 2:
        return False
    first, rest = items[0], list(items[1:])
    for i, other in enumerate(rest):
        if compatible(first, other) and _perfect_matching(rest[:i] + rest[i + 1:], compatible):
            return True
    return False


def _residues(s: SeifertData) -> List[Pair]:
    return [(a, b % a) for a, b in s.cone_points]


def skew_symmetric(s: SeifertData) -> bool:
    """Cone points pair up as (a, b), (a, -b), with the fibre shifts cancelling."""
    def ok(p, q):
        return p[0] == q[0] and (p[1] + q[1]) % p[0] == 0

    return euler_invariant(s) == 0 and _perfect_matching(_residues(s), ok)


def weakly_skew_symmetric(s: SeifertData) -> bool:
    """Cone points pair up as (a, b), (a, -b') with b' = b or b b' = 1 mod a."""
    def ok(p, q):
        a = p[0]
        return a == q[0] and ((p[1] + q[1]) % a == 0 or (p[1] * q[1] + 1) % a == 0)

    return _perfect_matching(_residues(s), ok)


def _two_adic(n: int) -> int:
    return (n & -n).bit_length() - 1


def even_orders(s: SeifertData) -> List[int]:
    return [a for a, _ in s.cone_points if a % 2 == 0]


@dataclass
class SmoothFragment:
    skew_symmetric: bool
    weakly_skew_symmetric: bool
    even_orders_same_2adic: bool
    even_orders_equal: bool
    embeds_smoothly: str  # "yes" | "no" | "unknown"
    topological_obstruction: bool
    conclusions: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "skew_symmetric": self.skew_symmetric,
            "weakly_skew_symmetric": self.weakly_skew_symmetric,
            "even_orders_same_2adic": self.even_orders_same_2adic,
            "even_orders_equal": self.even_orders_equal,
            "embeds_smoothly": self.embeds_smoothly,
            "topological_obstruction": self.topological_obstruction,
            "conclusions": list(self.conclusions),
        }


def smooth_obstructions(s: SeifertData) -> SmoothFragment:
    skew = skew_symmetric(s)
    weak = weakly_skew_symmetric(s)
    evens = even_orders(s)
    same_2adic = len({_two_adic(a) for a in evens}) <= 1
    equal = len(set(evens)) <= 1
    eps = euler_invariant(s)
    verdict = "unknown"
    top = False
    notes = []
    if not same_2adic:
        top = True
        verdict = "no"
        notes.append("even cone orders have different 2-adic valuations: linking pairing not hyperbolic, no embedding")
    if s.orientable_base and eps == 0:
        if not skew:
            verdict = "no"
            notes.append("Euler invariant 0 but data not skew-symmetric: no smooth embedding")
        elif not evens and verdict != "no":
            verdict = "yes"
            notes.append("Euler invariant 0, odd cone orders, skew-symmetric: embeds smoothly")
    if not s.orientable_base:
        if not weak:
            verdict = "no"
            notes.append("nonorientable base, data not weakly skew-symmetric: no smooth embedding")
        if not equal:
            verdict = "no"
            notes.append("nonorientable base, even cone orders differ: no smooth embedding")
    return SmoothFragment(skew, weak, same_2adic, equal, verdict, top, notes)
