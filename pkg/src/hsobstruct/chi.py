"""Admissible Euler characteristics of the complementary regions.

Convention throughout: X is the region with the smaller Euler
characteristic, so chi(X) <= 1 <= chi(Y) = 2 - chi(X), and the first Betti
number of X is gamma = (1 + beta - chi(X)) / 2 >= beta / 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from .errors import BadGamma, ObstructionError

ALLOWED = "allowed"
EXCLUDED = "excluded"
INCONCLUSIVE = "inconclusive"

# Descriptive tags for the result a reason rests on.
TAG_RANGE = "euler-range"
TAG_CUP_FORM = "cup-form-restriction"
TAG_TWO_STEP = "two-step-quotient"
TAG_FIBRE_TRIVIAL_EULER = "seifert-zero-euler"
TAG_FIBRE_NONZERO_EULER = "seifert-nonzero-euler"
TAG_BUNDLE = "nonorientable-bundle"
TAG_TORSION = "torsion-linking"


@dataclass
class Reason:
    tag: str
    detail: str

    def to_json(self) -> dict:
        return {"tag": self.tag, "detail": self.detail}


@dataclass
class ChiVerdict:
    beta: int
    chi_x: int
    status: str = ALLOWED
    reasons: List[Reason] = field(default_factory=list)
    notes: List[Reason] = field(default_factory=list)

    def __post_init__(self):
        if (self.chi_x - 1 - self.beta) % 2:
            raise ObstructionError(f"chi(X)={self.chi_x} has the wrong parity for beta={self.beta}")
        if not 1 - self.beta <= self.chi_x <= 1:
            raise ObstructionError(f"chi(X)={self.chi_x} outside [{1 - self.beta}, 1]")

    @property
    def chi_y(self) -> int:
        return 2 - self.chi_x

    @property
    def gamma(self) -> int:
        return (1 + self.beta - self.chi_x) // 2

    def exclude(self, tag: str, detail: str) -> None:
        self.status = EXCLUDED
        self.reasons.append(Reason(tag, detail))

    def mark_inconclusive(self, tag: str, detail: str) -> None:
        if self.status != EXCLUDED:
            self.status = INCONCLUSIVE
        self.reasons.append(Reason(tag, detail))

    def support(self, tag: str, detail: str) -> None:
        """Record evidence without changing the status."""
        self.notes.append(Reason(tag, detail))

    def to_json(self) -> dict:
        return {
            "chi_x": self.chi_x,
            "chi_y": self.chi_y,
            "gamma": self.gamma,
            "status": self.status,
            "reasons": [r.to_json() for r in self.reasons],
            "notes": [r.to_json() for r in self.notes],
        }


def chi_range(beta: int) -> List[ChiVerdict]:
    """Every chi(X) in [1 - beta, 1] with chi(X) = 1 + beta mod 2, descending."""
    if beta < 0:
        raise ObstructionError("beta must be non-negative")
    return [ChiVerdict(beta, chi) for chi in range(1, -beta, -1) if (chi - 1 - beta) % 2 == 0]


def two_step_compatible(beta: int, gamma: int) -> bool:
    """Whether rank(X) = gamma survives when the two-step rational nilpotent
    quotient of the manifold group is the product of those of X and Y.

    The kernel-rank count reduces to ``beta >= gamma * (beta - gamma)``; the
    single boundary case beta=4, gamma=2 is ruled out by the cup form.
    """
    if 2 * gamma < beta or gamma > beta:
        raise BadGamma(f"need beta/2 <= gamma <= beta, got gamma={gamma}, beta={beta}")
    if beta == 4 and gamma == 2:
        return False
    return beta >= gamma * (beta - gamma)


# names used by external callers
lemma1_set = chi_range
theorem6_compatible = two_step_compatible
