"""Aggregate every applicable obstruction for one manifold description.

A report is a pure function of (input, radius): the JSON rendering uses
sorted keys and exact rationals as strings, so repeated runs are
byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from . import __version__, zlinalg
from .abelian import abelian_feasibility
from .chi import (
    EXCLUDED,
    TAG_CUP_FORM,
    TAG_TORSION,
    ChiVerdict,
    Reason,
    chi_range,
    two_step_compatible,
)
from .errors import NotSymmetric, ObstructionError, TooLarge
from .forms import COUNTEREXAMPLE_FORM, AlternatingForm3, cup_kernel_rank, is_zero
from .seifert import (
    SeifertData,
    euler_invariant,
    homology,
    nonorientable_constraints,
    obstruct,
    smooth_obstructions,
)
from .splitting import (
    DEFAULT_RADIUS,
    Epimorphism,
    counterexample_witness,
    enumerate_primitive,
    exact_split_epi,
    find_splitting,
    isotropic_functionals,
)
from .torsion import (
    DEFAULT_ORDER_BOUND,
    FiniteAbelian,
    LinkingPairing,
    is_direct_double,
    is_hyperbolic,
    pairing_from_linking_matrix,
)

KINDS = ("seifert", "form", "linking_matrix", "linking")


@dataclass(frozen=True)
class ManifoldInput:
    kind: str
    payload: Any
    beta: Optional[int] = None  # only used by bare linking pairings

    def to_json(self) -> dict:
        if self.kind == "form":
            return {"kind": "form", **self.payload.to_json()}
        if self.kind == "linking_matrix":
            return {"kind": "linking_matrix", "matrix": self.payload}
        data = self.payload.to_json()
        if self.kind == "linking" and self.beta:
            data["beta"] = self.beta
        return data


def parse_input(data: Mapping) -> ManifoldInput:
    kind = data.get("kind")
    if kind is None and "monomials" in data:
        kind = "form"
    if kind == "linking_pairing":
        kind = "linking"
    if kind == "seifert":
        return ManifoldInput(kind, SeifertData.from_json(data))
    if kind == "form":
        return ManifoldInput(kind, AlternatingForm3.from_json(data))
    if kind == "linking_matrix":
        m = zlinalg.copy_matrix(data["matrix"])
        zlinalg.shape(m)
        return ManifoldInput(kind, m)
    if kind == "linking":
        return ManifoldInput(kind, LinkingPairing.from_json(data), int(data.get("beta", 0)))
    raise ObstructionError(f"unknown input kind {kind!r}; expected one of {KINDS}")


def load_input(path: str) -> ManifoldInput:
    with open(path) as fh:
        return parse_input(json.load(fh))


def homology_from_linking_matrix(m: List[List[int]]) -> Tuple[int, List[int]]:
    """H_1 of the surgered manifold: the cokernel of the framing/linking matrix."""
    n, cols = zlinalg.shape(m)
    if n != cols or any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        raise NotSymmetric("linking matrix must be square and symmetric")
    snf = zlinalg.smith_normal_form(m, n)
    return n - snf.rank, snf.invariant_factors()


@dataclass
class ObstructionReport:
    input: ManifoldInput
    beta: int
    chi: List[ChiVerdict]
    radius: int
    sections: Dict[str, Any] = field(default_factory=dict)
    global_obstructions: List[Dict[str, str]] = field(default_factory=list)

    @property
    def does_not_embed(self) -> bool:
        return bool(self.global_obstructions) or all(v.status == EXCLUDED for v in self.chi)

    @property
    def exit_code(self) -> int:
        return 2 if self.does_not_embed else 0

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "beta": self.beta,
            "chi": [v.to_json() for v in self.chi],
            "two_step_quotient": [
                {"chi_x": v.chi_x, "gamma": v.gamma, "compatible": two_step_compatible(self.beta, v.gamma)}
                for v in self.chi
            ],
            "abelian_pi1": [g.to_json() for g in abelian_feasibility(self.beta)],
            **self.sections,
            "verdict": {
                "does_not_embed": self.does_not_embed,
                "obstructions": list(self.global_obstructions),
            },
            "meta": {"tool": "hsobstruct", "version": __version__, "radius": self.radius, "seed": None},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"input: {self.input.kind}  beta={self.beta}"]
        tor = self.sections.get("torsion")
        if tor:
            lines.append(
                f"torsion: {tor['factors'] or 'trivial'}  direct double: {tor['direct_double']}"
                f"  hyperbolic: {tor.get('hyperbolic')}"
            )
        for v in self.chi:
            tags = ", ".join(f"[{r.tag}] {r.detail}" for r in v.reasons + v.notes)
            lines.append(f"chi(X)={v.chi_x:>3}  chi(Y)={v.chi_y:>3}  {v.status:<12} {tags}".rstrip())
        groups = ", ".join(str(g) for g in abelian_feasibility(self.beta)) or "none"
        lines.append(f"abelian pi_1(X) possible: {groups}")
        if self.does_not_embed:
            why = "; ".join(o["detail"] for o in self.global_obstructions) or "every chi(X) excluded"
            lines.append(f"verdict: does not embed ({why})")
        else:
            lines.append("verdict: no obstruction to embedding found")
        return "\n".join(lines) + "\n"


def _torsion_section(factors: List[int], pairing: Optional[LinkingPairing]) -> Tuple[dict, List[Dict[str, str]]]:
    section: Dict[str, Any] = {"factors": list(factors)}
    problems = []
    group = FiniteAbelian(tuple(factors))
    section["direct_double"] = is_direct_double(group)
    if not section["direct_double"]:
        problems.append({"tag": TAG_TORSION, "detail": f"torsion {list(factors)} is not a direct double"})
    section["hyperbolic"] = None
    if pairing is not None:
        section["pairing"] = pairing.to_json()
        try:
            w = is_hyperbolic(pairing)
        except TooLarge:
            section["hyperbolic"] = None
            section["hyperbolic_note"] = f"group order above {DEFAULT_ORDER_BOUND}; not searched"
        else:
            section["hyperbolic"] = w is not None
            if w is None:
                problems.append({"tag": TAG_TORSION, "detail": "torsion linking pairing is not hyperbolic"})
            else:
                section["lagrangian"] = w.to_json()
    return section, problems


def _form_rows(f: AlternatingForm3, radius: int) -> Tuple[List[ChiVerdict], dict]:
    beta = f.beta
    rows = chi_range(beta)
    zero = is_zero(f)
    functionals = isotropic_functionals(f)
    section = {
        "form": f.to_json(),
        "zero": zero,
        "cup_kernel_rank": cup_kernel_rank(f),
        "isotropic_functionals": functionals,
    }
    for v in rows:
        gamma = v.gamma
        if zero:
            v.support(TAG_CUP_FORM, "cup-product form is zero; no restriction")
        elif gamma == beta:
            v.exclude(TAG_CUP_FORM, "cup-product form is nonzero but would have to vanish on all of H^1(M)")
        elif gamma <= 2 and beta - gamma <= 2:
            v.support(TAG_CUP_FORM, "both summands have rank <= 2")
        elif gamma == beta - 1:
            lam = exact_split_epi(f)
            if lam is None:
                v.exclude(
                    TAG_CUP_FORM,
                    "no functional l has l ^ mu = 0, so every corank-one summand carries a nonzero triple product",
                )
                if f == COUNTEREXAMPLE_FORM:
                    v.reasons.append(_counterexample_reason())
            else:
                v.support(TAG_CUP_FORM, f"kernel of {list(lam.coeffs)} is isotropic")
        else:
            w = find_splitting(f, gamma, radius)
            if w is None:
                v.mark_inconclusive(TAG_CUP_FORM, f"no isotropic splitting found with entries bounded by {radius}")
            else:
                v.support(TAG_CUP_FORM, f"isotropic splitting A={[list(x) for x in w.a_basis]}")
    return rows, section


def _counterexample_reason() -> Reason:
    # spot-check the case analysis on every primitive functional of height 1
    for coeffs in enumerate_primitive(6, 1):
        w = counterexample_witness(COUNTEREXAMPLE_FORM, Epimorphism(coeffs))
        assert w.value == w.expected != 0
    return Reason(TAG_CUP_FORM, "explicit rank-3 kernel summand with nonzero triple product for every epimorphism")


def full_report(inp: ManifoldInput, radius: int = DEFAULT_RADIUS) -> ObstructionReport:
    sections: Dict[str, Any] = {}
    problems: List[Dict[str, str]] = []
    if inp.kind == "form":
        f = inp.payload
        beta = f.beta
        rows, sections["cup_form"] = _form_rows(f, radius)
    elif inp.kind == "seifert":
        s = inp.payload
        beta, factors = homology(s)
        rows = obstruct(s, beta)
        smooth = smooth_obstructions(s)
        seif: Dict[str, Any] = {
            "euler_invariant": str(euler_invariant(s)),
            "orientable_base": s.orientable_base,
            "smooth": smooth.to_json(),
        }
        if not s.orientable_base and not s.cone_points:
            seif["bundle"] = nonorientable_constraints(s.crosscaps, s.fibre_shift).to_json()
        sections["seifert"] = seif
        sections["homology"] = {"betti": beta, "torsion": factors}
        sections["torsion"], problems = _torsion_section(factors, None)
        if smooth.topological_obstruction:
            problems.append({"tag": TAG_TORSION,
                             "detail": "even cone point orders have different 2-adic valuations"})
    elif inp.kind == "linking_matrix":
        beta, factors = homology_from_linking_matrix(inp.payload)
        rows = chi_range(beta)
        sections["homology"] = {"betti": beta, "torsion": factors}
        sections["torsion"], problems = _torsion_section(factors, pairing_from_linking_matrix(inp.payload))
    else:
        p = inp.payload
        beta = inp.beta or 0
        rows = chi_range(beta)
        sections["torsion"], problems = _torsion_section(list(p.group.invariant_factors), p)
    for v in rows:
        for prob in problems:
            v.exclude(prob["tag"], prob["detail"])
    return ObstructionReport(inp, beta, rows, radius, sections, problems)
