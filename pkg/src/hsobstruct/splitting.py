"""Splittings Z^beta = A + B on which a trilinear form vanishes.

Two kinds of search live here. Epimorphism searches look for a primitive
functional whose kernel is isotropic for the form; they come in a bounded
enumeration flavour and an exact flavour (the isotropic functionals are
precisely the rational kernel of ``lam -> lam ^ f``). Summand searches look
for a direct-sum decomposition with both parts isotropic.

A bounded search that finds nothing proves nothing; only the exact routines
and :func:`counterexample_witness` produce exclusion certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import Iterator, List, Optional, Sequence, Tuple

from . import zlinalg
from .errors import DimensionMismatch, NotPrimitive, ObstructionError, WrongForm
from .forms import (
    COUNTEREXAMPLE_FORM,
    AlternatingForm3,
    evaluate,
    is_zero,
    restrict,
    wedge_with_functional,
)

DEFAULT_RADIUS = 3
DEFAULT_CHECK_BUDGET = 2_000_000


@dataclass(frozen=True)
class Epimorphism:
    """A surjection Z^beta -> Z, given by its coefficients."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(x) for x in self.coeffs))
        if not any(self.coeffs):
            raise NotPrimitive("the zero functional is not surjective")
        if zlinalg.content(self.coeffs) != 1:
            raise NotPrimitive(f"{self.coeffs} has content {zlinalg.content(self.coeffs)}")

    @property
    def beta(self) -> int:
        return len(self.coeffs)

    def kernel(self) -> List[List[int]]:
        return zlinalg.kernel_basis([list(self.coeffs)], self.beta)

    def __neg__(self) -> "Epimorphism":
        return Epimorphism(tuple(-x for x in self.coeffs))


@dataclass(frozen=True)
class SplitWitness:
    a_basis: Tuple[Tuple[int, ...], ...]
    b_basis: Tuple[Tuple[int, ...], ...]
    valid: bool

    @property
    def gamma(self) -> int:
        return len(self.a_basis)

    def to_json(self) -> dict:
        return {
            "a_basis": [list(v) for v in self.a_basis],
            "b_basis": [list(v) for v in self.b_basis],
            "valid": self.valid,
        }


@dataclass(frozen=True)
class KernelWitness:
    """Rank-3 summand of ``ker(lam)`` on which the counterexample form is nonzero.

    ``generators`` are the explicit kernel vectors of the case analysis and
    ``value`` the form evaluated on them; ``summand`` is their saturation and
    ``summand_value`` the form on that basis (``value`` divided by the index).
    """

    case: int
    generators: Tuple[Tuple[int, ...], ...]
    summand: Tuple[Tuple[int, ...], ...]
    value: int
    expected: int
    summand_value: int


def _unit(beta: int, i: int) -> List[int]:
    return [int(j == i - 1) for j in range(beta)]


def check_witness(f: AlternatingForm3, w: SplitWitness) -> bool:
    """Independent revalidation: both restrictions zero and a unimodular basis."""
    basis = [list(v) for v in w.a_basis] + [list(v) for v in w.b_basis]
    if len(basis) != f.beta:
        return False
    if basis and abs(zlinalg.det(basis)) != 1:
        return False
    return is_zero(restrict(f, [list(v) for v in w.a_basis])) and is_zero(
        restrict(f, [list(v) for v in w.b_basis])
    )


def vanishes_on_kernel(f: AlternatingForm3, lam: Epimorphism) -> bool:
    if lam.beta != f.beta:
        raise DimensionMismatch(f"functional of length {lam.beta} for beta={f.beta}")
    return is_zero(restrict(f, lam.kernel()))


def enumerate_primitive(beta: int, radius: int) -> Iterator[Tuple[int, ...]]:
    """Primitive vectors with entries in [-radius, radius], first nonzero entry
    positive, in lexicographic order."""
    for v in product(range(-radius, radius + 1), repeat=beta):
        lead = next((x for x in v if x), 0)
        if lead <= 0:
            continue
        g = 0
        for x in v:
            g = gcd(g, x)
            if g == 1:
                break
        if g == 1:
            yield v


def search_split_epi(f: AlternatingForm3, radius: int = DEFAULT_RADIUS) -> Optional[Epimorphism]:
    """First epimorphism (lexicographic, up to sign) with isotropic kernel.

    Candidates are screened with the wedge criterion and every hit is
    confirmed by restricting to an explicit kernel basis.
    """
    if radius < 1:
        raise ObstructionError("radius must be at least 1")
    wedge = [row for row in wedge_with_functional(f) if any(row)]
    for v in enumerate_primitive(f.beta, radius):
        if all(sum(a * b for a, b in zip(row, v)) == 0 for row in wedge):
            lam = Epimorphism(v)
            if vanishes_on_kernel(f, lam):
                return lam
            raise AssertionError(f"wedge screen disagrees with restriction at {v}")
    return None


def isotropic_functionals(f: AlternatingForm3) -> List[List[int]]:
    """Saturated basis of all functionals whose kernel is isotropic for ``f``.

    Empty exactly when no epimorphism works, at any radius.
    """
    if f.beta == 0:
        return []
    return zlinalg.kernel_basis(wedge_with_functional(f), f.beta)


def exact_split_epi(f: AlternatingForm3) -> Optional[Epimorphism]:
    basis = isotropic_functionals(f)
    if not basis:
        return None
    lam = Epimorphism(basis[0])
    assert vanishes_on_kernel(f, lam)
    return lam


def _case_generators(lam: Sequence[int]) -> Tuple[int, List[List[int]], int]:
    l1, l2, l3, l4, l5, l6 = lam
    e = lambda i: _unit(6, i)  # noqa: E731

    def pivot_on(p: int, lp: int, idx: Sequence[int]) -> List[List[int]]:
        return [[lp * a - lam[j - 1] * b for a, b in zip(e(j), e(p))] for j in idx]

    if l6:
        return 6, pivot_on(6, l6, (1, 2, 3)), l6 ** 3
    if l3:
        return 3, pivot_on(3, l3, (1, 5, 6)), l3 ** 3
    if l4:
        return 4, pivot_on(4, l4, (1, 5, 6)), l4 ** 3
    if l1:
        g2, g5 = pivot_on(1, l1, (2, 5))
        return 1, [g2, e(4), g5], l1 ** 2
    if l2:
        g1, g5 = pivot_on(2, l2, (1, 5))
        return 2, [g1, g5, e(6)], l2 ** 2
    g1, g2 = pivot_on(5, l5, (1, 2))
    return 5, [g1, g2, e(3)], l5 ** 2


def counterexample_witness(f: AlternatingForm3, lam: Epimorphism) -> KernelWitness:
    """Case analysis showing no epimorphism works for the beta=6 counterexample.

    Pivot on the first nonzero coefficient among positions 6, 3, 4, 1, 2, 5
    and build three kernel vectors on which the form is a pure power of the
    pivot coefficient.
    """
    if f != COUNTEREXAMPLE_FORM:
        raise WrongForm("only defined for e1^e2^e3 + e1^e5^e6 + e2^e4^e5")
    if lam.beta != 6:
        raise DimensionMismatch("functional must have length 6")
    case, gens, expected = _case_generators(lam.coeffs)
    for g in gens:
        assert sum(a * b for a, b in zip(lam.coeffs, g)) == 0
    summand = zlinalg.saturate(gens, 6)
    return KernelWitness(
        case=case,
        generators=tuple(tuple(g) for g in gens),
        summand=tuple(tuple(v) for v in summand),
        value=evaluate(f, *gens),
        expected=expected,
        summand_value=evaluate(f, *summand),
    )


class _Budget:
    def __init__(self, checks: int):
        self.left = checks

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def _coordinate_split(f: AlternatingForm3, gamma: int) -> Optional[SplitWitness]:
    n = f.beta
    for idx in combinations(range(1, n + 1), gamma):
        a = [_unit(n, i) for i in idx]
        b = [_unit(n, i) for i in range(1, n + 1) if i not in idx]
        if is_zero(restrict(f, a)) and is_zero(restrict(f, b)):
            return SplitWitness(tuple(map(tuple, a)), tuple(map(tuple, b)), True)
    return None


def _epi_split(f: AlternatingForm3, gamma: int, radius: int) -> Optional[SplitWitness]:
    lam = search_split_epi(f, radius)
    if lam is None:
        return None
    kernel = lam.kernel()
    rest = zlinalg.complement(kernel, f.beta)
    a, b = (kernel, rest) if gamma == f.beta - 1 else (rest, kernel)
    return SplitWitness(tuple(map(tuple, a)), tuple(map(tuple, b)), True)


def _shell_candidates(beta: int, radius: int) -> List[Tuple[int, ...]]:
    cands = list(enumerate_primitive(beta, radius))
    cands.sort(key=lambda v: sum(abs(x) for x in v))  # stable: lex within a shell
    return cands


def _pair_functional(f: AlternatingForm3, u: Sequence[int], v: Sequence[int]) -> List[int]:
    return [evaluate(f, u, v, _unit(f.beta, c)) for c in range(1, f.beta + 1)]


def _backtrack(f, gamma, cands, budget) -> Optional[SplitWitness]:
    n = f.beta

    def extend(chosen, start, need, functionals, right):
        # right: unimodular transform from the SNF of the chosen system
        if need == 0:
            yield chosen
            return
        k = len(chosen)
        for idx in range(start, len(cands)):
            if not budget.spend():
                return
            v = cands[idx]
            if any(sum(a * b for a, b in zip(fn, v)) for fn in functionals):
                continue
            coords = zlinalg.matvec(zlinalg.transpose(right), v)[k:] if right else list(v)
            if zlinalg.content(coords) != 1:
                continue
            system = chosen + [list(v)]
            snf = zlinalg.smith_normal_form(system, n)
            new_fns = functionals + [_pair_functional(f, u, v) for u in chosen]
            yield from extend(system, idx + 1, need - 1, new_fns, snf.right)

    for a in extend([], 0, gamma, [], None):
        snf = zlinalg.smith_normal_form(a, n)
        for full in extend(a, 0, n - gamma, [], snf.right):
            b = full[gamma:]
            w = SplitWitness(tuple(map(tuple, a)), tuple(map(tuple, b)), True)
            if check_witness(f, w):
                return w
        if budget.left < 0:
            return None
    return None


def find_splitting(
    f: AlternatingForm3,
    gamma: int,
    radius: int = DEFAULT_RADIUS,
    check_budget: int = DEFAULT_CHECK_BUDGET,
) -> Optional[SplitWitness]:
    """Bounded search for ``Z^beta = A + B``, rank(A) = gamma, both isotropic.

    Tries coordinate splittings first, then (for corank one) the epimorphism
    search, then a backtracking search over primitive vectors with entries
    bounded by ``radius`` ordered by L1 norm. ``None`` means not found within
    the bounds.
    """
    n = f.beta
    if not 0 <= gamma <= n:
        raise ObstructionError(f"gamma={gamma} outside 0..{n}")
    if gamma in (0, n):
        if not is_zero(f):
            return None
        std = [tuple(_unit(n, i)) for i in range(1, n + 1)]
        return SplitWitness(tuple(std[:gamma]), tuple(std[gamma:]), True)
    w = _coordinate_split(f, gamma)
    if w is not None:
        return w
    if n - 1 in (gamma, n - gamma):
        return _epi_split(f, gamma, radius)
    return _backtrack(f, gamma, _shell_candidates(n, radius), _Budget(check_budget))


beta6_witness = counterexample_witness
