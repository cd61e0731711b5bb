"""Exact rational geometry of the hyperplanes c.alpha_i = <x, p(alpha_i)> in R^{b+}.

Coordinates are taken against the basis H_1..H_m of the positive part, so
the normal of the hyperplane for alpha is the H-part of alpha and its
offset is c.alpha.  All arithmetic uses ``fractions.Fraction``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .config import CYCLE4_EDGES, DisjointnessComplex
from .lattice import HClass, IntersectionLattice, pairing


class GeometryError(ValueError):
    pass


def frac_str(x) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(Fraction(a) for a in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x)), Fraction(0))

    def to_json(self) -> dict:
        return {"normal": [frac_str(a) for a in self.normal], "offset": frac_str(self.offset)}


@dataclass(frozen=True)
class HalfspaceSystem:
    """Halfspaces {x : <normal, x> <= offset} with every offset > 0."""

    halves: tuple

    @property
    def dim(self) -> int:
        return len(self.halves[0][0]) if self.halves else 0

    def contains(self, x, strict: bool = False) -> bool:
        for n, o in self.halves:
            v = sum((a * b for a, b in zip(n, x)), Fraction(0))
            if v > o or (strict and v == o):
                return False
        return True


def hyperplane_of(L: IntersectionLattice, alpha: HClass, c: HClass) -> Hyperplane:
    normal = tuple(pairing(L, L.H(j), alpha) for j in range(1, L.m + 1))
    offset = pairing(L, c, alpha)
    if all(a == 0 for a in normal) and offset != 0:
        raise GeometryError(f"class {alpha} is invisible to the positive part (zero normal)")
    return Hyperplane(normal, offset)


def origin_side(hyps: Sequence[Hyperplane]) -> HalfspaceSystem:
    halves = []
    for i, hp in enumerate(hyps, 1):
        if hp.offset == 0:
            raise GeometryError(f"hyperplane {i} passes through the origin")
        if all(a == 0 for a in hp.normal):
            raise GeometryError(f"hyperplane {i} has zero normal")
        s = 1 if hp.offset > 0 else -1
        halves.append((tuple(s * a for a in hp.normal), s * hp.offset))
    return HalfspaceSystem(tuple(halves))


# --- planar quadrilateral -------------------------------------------------

def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def winding_number(polygon: Sequence, point=(0, 0)) -> int:
    """Winding number of the closed polygon around ``point`` (which must not lie on it)."""
    p = (Fraction(point[0]), Fraction(point[1]))
    w = 0
    pts = [(Fraction(x), Fraction(y)) for x, y in polygon]
    for a, b in zip(pts, pts[1:] + pts[:1]):
        if a[1] <= p[1]:
            if b[1] > p[1] and _cross(a, b, p) > 0:
                w += 1
        elif b[1] <= p[1] and _cross(a, b, p) < 0:
            w -= 1
    return w


def intersect_lines(h1: Hyperplane, h2: Hyperplane):
    """Intersection point of two lines in the plane, or a string tag if parallel."""
    (a1, b1), c1 = h1.normal, h1.offset
    (a2, b2), c2 = h2.normal, h2.offset
    det = a1 * b2 - a2 * b1
    if det == 0:
        if a1 * c2 == a2 * c1 and b1 * c2 == b2 * c1:
            return "identical"
        return "parallel"
    return ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


class DegreeKind(enum.Enum):
    DEGREE = "Degree"
    NOT_A_QUADRILATERAL = "NotAQuadrilateral"
    INCONCLUSIVE = "Inconclusive"
    IDENTICAL_LINES = "IdenticalLines"


@dataclass(frozen=True)
class DegreeVerdict:
    kind: DegreeKind
    winding: int | None = None
    vertices: tuple = ()
    pair: tuple = ()

    @property
    def certifies(self) -> bool:
        return self.kind is DegreeKind.DEGREE

    def to_json(self) -> dict:
        out = {"verdict": self.kind.value}
        if self.winding is not None:
            out["winding"] = self.winding
        if self.vertices:
            out["vertices"] = [[frac_str(x), frac_str(y)] for x, y in self.vertices]
        if self.pair:
            out["lines"] = list(self.pair)
        return out


def quadrilateral_degree(lines: Sequence[Hyperplane]) -> DegreeVerdict:
    """Winding number around the origin of the polygon cut out by four lines in cyclic order.

    Vertex i is L_i meet L_{i+1} (indices mod 4), so side i of the polygon
    runs along L_i.  A repeated vertex is a degenerate side and is allowed.
    """
    if len(lines) != 4 or any(h.dim != 2 for h in lines):
        raise GeometryError("quadrilateral test needs four lines in the plane")
    verts = []
    for i in range(4):
        j = (i + 1) % 4
        v = intersect_lines(lines[i], lines[j])
        if v == "identical":
            return DegreeVerdict(DegreeKind.IDENTICAL_LINES, pair=(i + 1, j + 1))
        if v == "parallel":
            return DegreeVerdict(DegreeKind.NOT_A_QUADRILATERAL, pair=(i + 1, j + 1))
        verts.append(v)
    w = winding_number(verts)
    kind = DegreeKind.DEGREE if w != 0 else DegreeKind.INCONCLUSIVE
    return DegreeVerdict(kind, w, tuple(verts))


# --- Fourier-Motzkin ------------------------------------------------------

def _normalize_row(coeffs, rhs):
    lead = next((a for a in coeffs if a != 0), None)
    if lead is None:
        return tuple(coeffs), rhs
    s = abs(lead)
    return tuple(a / s for a in coeffs), rhs / s


def _dedupe(rows):
    best = {}
    for coeffs, rhs in rows:
        key, r = _normalize_row(coeffs, rhs)
        if key not in best or r < best[key]:
            best[key] = r
    return [(k, best[k]) for k in sorted(best)]


def fm_solve(rows: Sequence, nvars: int):
    """Find x with <a, x> <= b for every (a, b) in ``rows``, or None if infeasible.

    Variables are eliminated last to first; a witness is rebuilt by
    back-substitution, taking the midpoint of each bounded interval.
    """
    system = _dedupe([(tuple(Fraction(a) for a in r), Fraction(b)) for r, b in rows])
    stages = []
    for v in range(nvars - 1, -1, -1):
        stages.append(system)
        pos = [r for r in system if r[0][v] > 0]
        neg = [r for r in system if r[0][v] < 0]
        nxt = [r for r in system if r[0][v] == 0]
        for pa, pb in pos:
            for na, nb in neg:
                sp, sn = pa[v], -na[v]
                nxt.append((tuple(sn * x + sp * y for x, y in zip(pa, na)), sn * pb + sp * nb))
        system = []
        for coeffs, rhs in _dedupe(nxt):
            if all(a == 0 for a in coeffs):
                if rhs < 0:
                    return None
            else:
                system.append((coeffs, rhs))
    if any(rhs < 0 for coeffs, rhs in system):
        return None
    x = [Fraction(0)] * nvars
    for v, sys_v in zip(range(nvars), reversed(stages)):
        lo = hi = None
        for coeffs, rhs in sys_v:
            a = coeffs[v]
            if a == 0:
                continue
            rest = rhs - sum((coeffs[u] * x[u] for u in range(v)), Fraction(0))
            bound = rest / a
            if a > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            x[v] = (lo + hi) / 2
        elif lo is not None:
            x[v] = lo
        elif hi is not None:
            x[v] = hi
    return tuple(x)


def recession_direction(H: HalfspaceSystem):
    """A nonzero d with <n_i, d> <= 0 for all i, or None when the polytope is bounded."""
    dim = H.dim
    cone = [(n, Fraction(0)) for n, _ in H.halves]
    for j in range(dim):
        for s in (1, -1):
            unit = tuple(Fraction(-s) if u == j else Fraction(0) for u in range(dim))
            w = fm_solve(cone + [(unit, Fraction(-1))], dim)
            if w is not None:
                return w
    return None


def recession_cone_trivial(H: HalfspaceSystem) -> bool:
    return recession_direction(H) is None


def _face_feasible(H: HalfspaceSystem, I) -> bool:
    rows = list(H.halves)
    for i in I:
        n, o = H.halves[i - 1]
        rows.append((tuple(-a for a in n), -o))
    return fm_solve(rows, H.dim) is not None


def active_sets(H: HalfspaceSystem) -> list:
    """Every nonempty 1-based index set whose hyperplanes meet on the polytope."""
    if not recession_cone_trivial(H):
        raise GeometryError("unbounded halfspace system")
    k = len(H.halves)
    found = []
    layer = [()]
    for size in range(1, k + 1):
        alive = {frozenset(s) for s in layer}
        nxt = []
        for I in combinations(range(1, k + 1), size):
            if size > 1 and any(frozenset(J) not in alive for J in combinations(I, size - 1)):
                continue
            if _face_feasible(H, I):
                nxt.append(I)
        if not nxt:
            break
        found.extend(nxt)
        layer = nxt
    return found


class ConditionIIKind(enum.Enum):
    VERIFIED = "Verified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ConditionIIVerdict:
    kind: ConditionIIKind
    method: str
    reason: str = ""
    witness: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.kind is ConditionIIKind.VERIFIED

    def to_json(self) -> dict:
        out = {"verdict": self.kind.value, "method": self.method}
        if self.reason:
            out["reason"] = self.reason
        if self.witness:
            out["witness"] = self.witness
        return out


def polytope_criterion(hyps: Sequence[Hyperplane], S: DisjointnessComplex) -> ConditionIIVerdict:
    """Sufficient check that every admissible map P -> R^{b+} has nonzero degree.

    With four lines in the plane and the index-order 4-cycle complex the
    quadrilateral winding number decides.  Otherwise the origin-side
    halfspaces must have a trivial recession cone and every set of
    simultaneously active facets must be a simplex of ``S``.
    """
    if len(hyps) != S.k:
        raise GeometryError("hyperplane count differs from complex size")
    dim = hyps[0].dim if hyps else 0
    if dim == 2 and S.k == 4 and S.edges == CYCLE4_EDGES:
        dv = quadrilateral_degree(hyps)
        if dv.certifies:
            return ConditionIIVerdict(ConditionIIKind.VERIFIED, "winding", witness=dv.to_json())
        return ConditionIIVerdict(ConditionIIKind.INCONCLUSIVE, "winding",
                                  reason=dv.kind.value, witness=dv.to_json())
    try:
        H = origin_side(hyps)
    except GeometryError as exc:
        return ConditionIIVerdict(ConditionIIKind.INCONCLUSIVE, "polytope", reason=str(exc))
    d = recession_direction(H)
    if d is not None:
        return ConditionIIVerdict(ConditionIIKind.INCONCLUSIVE, "polytope",
                                  reason="recession cone nontrivial",
                                  witness={"recession_direction": [frac_str(a) for a in d]})
    act = active_sets(H)
    bad = [I for I in act if not S.is_simplex(I)]
    witness = {"active_sets": [list(I) for I in act]}
    if bad:
        witness["non_simplex_active_sets"] = [list(I) for I in bad]
        return ConditionIIVerdict(ConditionIIKind.INCONCLUSIVE, "polytope",
                                  reason=f"active set {list(bad[0])} is not a simplex of S",
                                  witness=witness)
    return ConditionIIVerdict(ConditionIIKind.VERIFIED, "polytope", witness=witness)
