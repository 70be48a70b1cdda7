"""Which fundamental groups of X can be abelian (or have G_[2] = G_[3])."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List

from .errors import BadRank, ObstructionError


@dataclass(frozen=True)
class GroupDescription:
    """``Z^rank + Z/n`` with ``n >= 1`` free when ``cyclic_torsion`` is set."""

    rank: int
    cyclic_torsion: bool
    constraint: str

    def __str__(self) -> str:
        free = "1" if self.rank == 0 else ("Z" if self.rank == 1 else f"Z^{self.rank}")
        if not self.cyclic_torsion:
            return free
        return "Z/n" if self.rank == 0 else f"{free} + Z/n"

    def to_json(self) -> dict:
        return {"group": str(self), "rank": self.rank,
                "cyclic_torsion": self.cyclic_torsion, "constraint": self.constraint}


def _raw_inequality(beta: int, r: int) -> bool:
    # H_2 of the abelianization is squeezed between Z^C(r,2) and H_2(X) = Z^(beta-r)
    return comb(r, 2) <= beta - r <= r


def inequality_check(beta: int, r: int, torsion_nontrivial: bool) -> bool:
    if 2 * r < beta:
        raise BadRank(f"rank {r} of H_1(X) is below beta/2 = {beta / 2}")
    if not _raw_inequality(beta, r):
        return False
    if torsion_nontrivial:
        return (r, beta) in {(0, 0), (1, 2)}
    return True


def abelian_feasibility(beta: int) -> List[GroupDescription]:
    if beta < 0:
        raise ObstructionError("beta must be non-negative")
    out = []
    for r in range((beta + 1) // 2, beta + 1):
        if not _raw_inequality(beta, r):
            continue
        label = f"C({r},2) <= {beta}-{r} <= {r}"
        if inequality_check(beta, r, True):
            out.append(GroupDescription(r, True, label))
        else:
            out.append(GroupDescription(r, False, label))
    return out
