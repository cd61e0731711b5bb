"""Theorem engines turning validated configurations into genus-bound certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .config import ConfigError, SurfaceDecl, build_complex, CYCLE4_EDGES
from .halfgeom import (GeometryError, frac_str, hyperplane_of, polytope_criterion,
                       quadrilateral_degree)
from .homcalc import ConditionIKind, condition_i_check
from .lattice import HClass, IntersectionLattice, pairing, square, validate_hypotheses

SCHEMA_VERSION = 1

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"
HYPOTHESIS_FAILURE = "hypothesis_failure"


class InternalFault(AssertionError):
    """An invariant that the hypotheses guarantee was violated."""


@dataclass(frozen=True)
class SurfaceBound:
    index: int
    name: str
    euler_bound: int
    genus_bound: int
    form: str = "adjunction"
    declared_genus: int | None = None

    @property
    def declared_meets_bound(self) -> bool | None:
        if self.declared_genus is None:
            return None
        return self.declared_genus >= self.genus_bound

    def to_json(self) -> dict:
        out = {"index": self.index, "name": self.name, "form": self.form}
        if self.form == "adjunction":
            out["minus_euler_bound"] = self.euler_bound
            out["chi_minus_bound"] = self.euler_bound
        else:
            out["chi_minus_bound"] = self.euler_bound
        out["genus_bound"] = self.genus_bound
        if self.declared_genus is not None:
            out["declared_genus"] = self.declared_genus
            out["declared_genus_meets_bound"] = self.declared_meets_bound
        return out


@dataclass(frozen=True)
class ConclusionStmt:
    kind: str  # "AtLeastOne" | "Single"
    bounds: tuple
    conditional: bool = False

    @property
    def statement(self) -> str:
        gs = {b.genus_bound for b in self.bounds}
        if self.kind == "Single":
            b = self.bounds[0]
            return f"g({b.name}) >= {b.genus_bound}"
        if len(gs) == 1:
            return f"at least one g(Sigma_i) >= {gs.pop()}"
        parts = " or ".join(f"g({b.name}) >= {b.genus_bound}" for b in self.bounds)
        return f"at least one of: {parts}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "statement": self.statement,
               "per_surface": [b.to_json() for b in self.bounds]}
        if self.conditional:
            out["conditional_on"] = "Condition 1(i)"
        return out


@dataclass
class Certificate:
    theorem: str
    input: dict
    checks: list = field(default_factory=list)
    conclusion: ConclusionStmt | None = None
    inconclusive_reasons: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.failures:
            return HYPOTHESIS_FAILURE
        if self.conclusion is None:
            return INCONCLUSIVE
        return CERTIFIED

    def add(self, name: str, verdict: str, /, **witness) -> None:
        entry = {"name": name, "verdict": verdict}
        if witness:
            entry["witness"] = witness
        self.checks.append(entry)

    def fail(self, name: str, message: str, /, **witness) -> None:
        self.add(name, "Fail", **witness)
        self.failures.append(f"{name}: {message}")

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "theorem": self.theorem,
            "status": self.status,
            "input": self.input,
            "checks": self.checks,
            "conclusion": None if self.conclusion is None else self.conclusion.to_json(),
            "hypothesis_failures": self.failures,
            "inconclusive_reasons": self.inconclusive_reasons,
            "assumptions": self.assumptions,
            "notes": self.notes,
        }
        out.update(self.extra)
        return out


def input_block(L: IntersectionLattice, c: HClass, surfaces: Sequence[SurfaceDecl],
                disjoint_pairs, mode: str, **options) -> dict:
    names = [s.name for s in surfaces]
    pairs = sorted(tuple(sorted(p)) for p in disjoint_pairs)
    return {
        "schema": SCHEMA_VERSION,
        "manifold": {"m": L.m, "n": L.n},
        "characteristic": c.to_json(),
        "surfaces": [{"name": s.name, **s.cls.to_json(), "genus": s.genus} for s in surfaces],
        "disjoint_pairs": [[names[a - 1], names[b - 1]] for a, b in pairs],
        "mode": mode,
        "options": dict(options),
    }


def genus_bound(L: IntersectionLattice, c: HClass, alpha: HClass) -> tuple:
    """(|c.alpha|, |c.alpha|/2 + 1): the bounds on -chi and genus from -chi >= |c.alpha|."""
    if square(L, alpha) != 0:
        raise ValueError("genus_bound needs alpha^2 = 0")
    e = abs(pairing(L, c, alpha))
    if e % 2:
        raise InternalFault(f"|c.alpha| = {e} is odd; c is not characteristic")
    return e, e // 2 + 1


def _bounds(L, c, surfaces) -> tuple:
    out = []
    for i, s in enumerate(surfaces, 1):
        e, g = genus_bound(L, c, s.cls)
        out.append(SurfaceBound(i, s.name, e, g, declared_genus=s.genus))
    return tuple(out)


def _note_declared(cert: Certificate) -> None:
    concl = cert.conclusion
    if concl is None:
        return
    if all(b.declared_meets_bound is False for b in concl.bounds):
        cert.notes.append("every declared genus violates its bound: the declared "
                          "configuration cannot be realised")


def _common_checks(cert: Certificate, L, c, surfaces, disjoint_pairs):
    """Lattice validation plus consistency of declared disjointness; returns the complex."""
    rep = validate_hypotheses(L, c, [s.cls for s in surfaces])
    for ch in rep.checks:
        witness = dict(ch.values)
        if ch.index is not None:
            witness["surface"] = surfaces[ch.index - 1].name
        if ch.passed:
            cert.add(ch.name, "Pass", **witness)
        else:
            cert.fail(ch.name, f"{witness}", **witness)
    try:
        S = build_complex(len(surfaces), disjoint_pairs)
    except ConfigError as exc:
        cert.fail("disjointness_input", str(exc))
        return None
    for e in sorted(tuple(sorted(p)) for p in S.edges):
        a, b = e
        ab = pairing(L, surfaces[a - 1].cls, surfaces[b - 1].cls)
        if ab != 0:
            cert.fail("declared_disjoint_pairs_orthogonal",
                      f"{surfaces[a - 1].name} and {surfaces[b - 1].name} are declared "
                      f"disjoint but pair to {ab}", pair=list(e), pairing=ab)
    return S


def certify_special(L: IntersectionLattice, c: HClass, surfaces: Sequence[SurfaceDecl],
                    disjoint_pairs) -> Certificate:
    """Four zero-square surfaces in 2CP^2 # n(-CP^2) in cyclic order.

    Needs consecutive surfaces disjoint and the four lines bounding a
    quadrilateral around the origin (nonzero winding number).
    """
    disjoint_pairs = [tuple(p) for p in disjoint_pairs]
    cert = Certificate("SpecialQuadrilateral", input_block(L, c, surfaces, disjoint_pairs, "special"))
    if L.bplus != 2:
        cert.fail("bplus_is_2", f"b+ = {L.bplus}", bplus=L.bplus)
        return cert
    if len(surfaces) != 4:
        cert.fail("four_surfaces", f"got {len(surfaces)} surfaces", count=len(surfaces))
        return cert
    S = _common_checks(cert, L, c, surfaces, disjoint_pairs)
    if S is None:
        return cert
    missing = [sorted(p) for p in sorted(CYCLE4_EDGES, key=sorted) if p not in S.edges]
    if missing:
        cert.fail("condition_B_cyclic_disjointness", f"missing disjoint pairs {missing}",
                  missing=missing)
    else:
        cert.add("condition_B_cyclic_disjointness", "Pass")
    if cert.failures:
        return cert
    try:
        lines = [hyperplane_of(L, s.cls, c) for s in surfaces]
    except GeometryError as exc:
        cert.fail("lines", str(exc))
        return cert
    cert.extra["lines"] = [h.to_json() for h in lines]
    dv = quadrilateral_degree(lines)
    cert.add("condition_A_quadrilateral", "Verified" if dv.certifies else dv.kind.value,
             **dv.to_json())
    if not dv.certifies:
        cert.inconclusive_reasons.append(f"condition (A): {dv.kind.value}")
        return cert
    cert.conclusion = ConclusionStmt("AtLeastOne", _bounds(L, c, surfaces))
    cert.assumptions.append("declared disjointness is geometric (caller attestation)")
    _note_declared(cert)
    return cert


def certify_general(L: IntersectionLattice, c: HClass, surfaces: Sequence[SurfaceDecl],
                    disjoint_pairs, assume_condition_i: bool = False) -> Certificate:
    """k > b+ zero-square surfaces under the two-part parameter-space condition."""
    disjoint_pairs = [tuple(p) for p in disjoint_pairs]
    opts = {"assume_condition_i": True} if assume_condition_i else {}
    cert = Certificate("GeneralSufficient",
                       input_block(L, c, surfaces, disjoint_pairs, "general", **opts))
    k = len(surfaces)
    if k <= L.bplus:
        cert.fail("k_exceeds_bplus", f"k = {k} <= b+ = {L.bplus}", k=k, bplus=L.bplus)
        return cert
    cert.add("k_exceeds_bplus", "Pass", k=k, bplus=L.bplus)
    S = _common_checks(cert, L, c, surfaces, disjoint_pairs)
    if S is None or cert.failures:
        return cert
    try:
        hyps = [hyperplane_of(L, s.cls, c) for s in surfaces]
    except GeometryError as exc:
        cert.fail("hyperplanes", str(exc))
        return cert
    cert.extra["hyperplanes"] = [h.to_json() for h in hyps]

    ci = condition_i_check(S, L.bplus)
    cert.add("condition_1_i", ci.kind.value, **ci.to_json())
    cii = polytope_criterion(hyps, S)
    cert.add("condition_1_ii", cii.kind.value, **cii.to_json())

    if not cii.verified:
        cert.inconclusive_reasons.append(f"condition 1(ii): {cii.reason}")
    if ci.kind is ConditionIKind.DIAGNOSTIC_FAIL:
        cert.inconclusive_reasons.append(
            f"condition 1(i): cohomology rank {ci.rank}, torsion {list(ci.torsion)}")
    conditional = ci.kind is ConditionIKind.DIAGNOSTIC_PASS
    if conditional and not assume_condition_i:
        cert.inconclusive_reasons.append(
            "condition 1(i) only has diagnostic support; pass assume_condition_i to accept it")
    if cert.inconclusive_reasons:
        if conditional and cii.verified:
            cert.extra["conditional_conclusion"] = ConclusionStmt(
                "AtLeastOne", _bounds(L, c, surfaces), conditional=True).to_json()
        return cert
    cert.conclusion = ConclusionStmt("AtLeastOne", _bounds(L, c, surfaces), conditional)
    cert.assumptions.append("declared disjointness is geometric (caller attestation)")
    if conditional:
        cert.assumptions.append("Condition 1(i) assumed by caller on diagnostic evidence")
    _note_declared(cert)
    return cert


@dataclass(frozen=True)
class ReplayReport:
    hypothesis_holds: bool
    steps: tuple
    contradiction: bool
    r_min: Fraction
    message: str

    def to_json(self) -> dict:
        return {
            "label": "arithmetic skeleton only; C0 is caller-supplied",
            "negation_hypothesis_holds": self.hypothesis_holds,
            "steps": [dict(s) for s in self.steps],
            "contradiction": self.contradiction,
            "single_surface_threshold_R_min": frac_str(self.r_min),
            "message": self.message,
        }


def replay_stretch_contradiction(R: Sequence, chi_minus: Sequence[int],
                                 pairings: Sequence[int], C0) -> ReplayReport:
    """Replay the weighted-average argument with concrete numbers.

    Assuming every surface violates its bound (chi_i^2 + 1 <= p_i^2), the
    weighted sum gives sum R_i chi_i^2 + 2 sum R_i <= sum R_i p_i^2, and the
    curvature estimate caps sum R_i p_i^2 by sum R_i chi_i^2 + C0, so
    2 sum R_i <= C0.  Stretching past C0/2 contradicts this.
    """
    if not (len(R) == len(chi_minus) == len(pairings)):
        raise ValueError("R, chi_minus and pairings must have equal length")
    R = [Fraction(r) for r in R]
    C0 = Fraction(C0)
    p = [abs(int(x)) for x in pairings]
    chi = [int(x) for x in chi_minus]
    if any(r < 0 for r in R) or any(x < 0 for x in chi):
        raise ValueError("R and chi_minus must be nonnegative")
    r_min = abs(C0) / 2
    per = [x * x + 1 <= q * q for x, q in zip(chi, p)]
    if not all(per):
        i = per.index(False) + 1
        return ReplayReport(False, (), False, r_min,
                            f"surface {i} already satisfies chi^2 + 1 > |c.alpha|^2; "
                            "no contradiction needed")
    sumR = sum(R, Fraction(0))
    wchi = sum((r * x * x for r, x in zip(R, chi)), Fraction(0))
    wp = sum((r * q * q for r, q in zip(R, p)), Fraction(0))
    step10 = {"name": "weighted violation",
              "lhs": frac_str(wchi + 2 * sumR), "rhs": frac_str(wp),
              "holds": wchi + 2 * sumR <= wp}
    step13 = {"name": "curvature cap", "lhs": frac_str(wp), "rhs": frac_str(wchi + C0),
              "assumed": True}
    final = {"name": "combined", "lhs": frac_str(2 * sumR), "rhs": frac_str(C0),
             "holds": 2 * sumR <= C0}
    contradiction = step10["holds"] and not final["holds"]
    if contradiction:
        msg = (f"2*sum(R) = {frac_str(2 * sumR)} > C0 = {frac_str(C0)}: "
               "at least one adjunction inequality must hold")
    elif not step10["holds"]:
        msg = "weighted violation step fails for these values (odd parities?)"
    else:
        msg = f"sum(R) = {frac_str(sumR)} does not exceed C0/2 = {frac_str(C0 / 2)}"
    return ReplayReport(True, (step10, step13, final), contradiction, r_min, msg)
