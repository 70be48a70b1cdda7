"""Integer alternating trilinear forms on Z^beta.

A form is stored sparsely as coefficients on strictly increasing 1-based
index triples, i.e. ``{(1, 2, 3): 1}`` is ``e1 ^ e2 ^ e3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from . import zlinalg
from .errors import DependentInput, DimensionMismatch, ObstructionError

Triple = Tuple[int, int, int]


def _perm_sign(idx: Sequence[int]) -> int:
    """Sign of the permutation sorting ``idx``; 0 if an index repeats."""
    idx = list(idx)
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] == idx[j]:
                return 0
            if idx[i] > idx[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class AlternatingForm3:
    beta: int
    coeffs: Mapping[Triple, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.beta < 0:
            raise ObstructionError("beta must be non-negative")
        clean: Dict[Triple, int] = {}
        for key, c in self.coeffs.items():
            i, j, k = key
            if not (1 <= i < j < k <= self.beta):
                raise ObstructionError(f"triple {key} is not increasing within 1..{self.beta}")
            if c:
                clean[(i, j, k)] = int(c)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_monomials(cls, beta: int, monomials: Iterable[Sequence[int]]) -> "AlternatingForm3":
        """Build from ``[i, j, k, c]`` quadruples; indices in any order, repeats summed."""
        acc: Dict[Triple, int] = {}
        for i, j, k, c in monomials:
            for x in (i, j, k):
                if not 1 <= x <= beta:
                    raise ObstructionError(f"index {x} outside 1..{beta}")
            s = _perm_sign((i, j, k))
            if s == 0:
                continue
            key = tuple(sorted((i, j, k)))
            acc[key] = acc.get(key, 0) + s * c
        return cls(beta, acc)

    @classmethod
    def from_json(cls, data: Mapping) -> "AlternatingForm3":
        return cls.from_monomials(int(data["beta"]), data.get("monomials", []))

    def to_json(self) -> dict:
        return {
            "beta": self.beta,
            "monomials": [[i, j, k, c] for (i, j, k), c in self.coeffs.items()],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j, k), c in self.coeffs.items():
            mono = f"e{i}^e{j}^e{k}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


COUNTEREXAMPLE_FORM = AlternatingForm3(6, {(1, 2, 3): 1, (1, 5, 6): 1, (2, 4, 5): 1})
"""The beta=6 form with no epimorphism whose kernel is isotropic."""


def _check_len(f: AlternatingForm3, *vectors: Sequence[int]) -> None:
    for v in vectors:
        if len(v) != f.beta:
            raise DimensionMismatch(f"vector of length {len(v)} for beta={f.beta}")


def evaluate(f: AlternatingForm3, u: Sequence[int], v: Sequence[int], w: Sequence[int]) -> int:
    _check_len(f, u, v, w)
    total = 0
    for (i, j, k), c in f.coeffs.items():
        i, j, k = i - 1, j - 1, k - 1
        minor = (
            u[i] * (v[j] * w[k] - v[k] * w[j])
            - u[j] * (v[i] * w[k] - v[k] * w[i])
            + u[k] * (v[i] * w[j] - v[j] * w[i])
        )
        total += c * minor
    return total


def restrict(f: AlternatingForm3, basis: Sequence[Sequence[int]]) -> AlternatingForm3:
    """Pull ``f`` back to the lattice spanned by ``basis`` (in that basis)."""
    _check_len(f, *basis)
    if basis and zlinalg.rank(basis, f.beta) != len(basis):
        raise DependentInput("restriction basis is rationally dependent")
    coeffs = {}
    for a, b, c in combinations(range(len(basis)), 3):
        val = evaluate(f, basis[a], basis[b], basis[c])
        if val:
            coeffs[(a + 1, b + 1, c + 1)] = val
    return AlternatingForm3(len(basis), coeffs)


def change_basis(f: AlternatingForm3, matrix: Sequence[Sequence[int]]) -> AlternatingForm3:
    """Pullback along the square matrix whose rows are the new basis vectors."""
    if len(matrix) != f.beta:
        raise DimensionMismatch("basis change must be square of size beta")
    return restrict(f, matrix)


def is_zero(f: AlternatingForm3) -> bool:
    return not f.coeffs


def contraction_matrix(f: AlternatingForm3) -> List[List[int]]:
    """Rows indexed by pairs i<j, columns by c: the value f(e_i, e_j, e_c)."""
    n = f.beta
    rows = []
    for i, j in combinations(range(1, n + 1), 2):
        row = []
        for c in range(1, n + 1):
            s = _perm_sign((i, j, c))
            row.append(s * f.coeffs.get(tuple(sorted((i, j, c))), 0) if s else 0)
        rows.append(row)
    return rows


def cup_kernel_rank(f: AlternatingForm3) -> int:
    """Rank of the kernel of the cup product on the second exterior power."""
    m = contraction_matrix(f)
    return comb(f.beta, 2) - (zlinalg.rank(m, f.beta) if m else 0)


def wedge_with_functional(f: AlternatingForm3) -> List[List[int]]:
    """Matrix of the linear map ``lam -> lam ^ f`` into 4-forms.

    Rows are indexed by increasing 4-subsets, columns by the coordinate of
    ``lam``. ``lam ^ f == 0`` exactly when ``f`` vanishes on ``ker(lam)``.
    """
    rows = []
    for quad in combinations(range(1, f.beta + 1), 4):
        row = [0] * f.beta
        for pos, x in enumerate(quad):
            rest = quad[:pos] + quad[pos + 1:]
            c = f.coeffs.get(rest, 0)
            if c:
                row[x - 1] += (-1) ** pos * c
        rows.append(row)
    return rows
