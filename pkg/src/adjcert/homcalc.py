"""Integer Smith normal form and the cubical model of the truncated parameter space.

The parameter space built from a disjointness complex S is the union of the
orthant cones R_{>=0}^I over simplices I of S.  Truncating every coordinate
at 1 gives a cubical complex whose cells are indexed by a pair (ones,
free): coordinates pinned at 1 and free interval coordinates; every other
coordinate is 0.  Cells with some coordinate pinned at 1 form the boundary.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .config import DisjointnessComplex, Pattern, match_condition_i_pattern


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple
    rank: int

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.diagonal if d > 1)


def _pick_pivot(A, t, strategy):
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[0])):
            v = A[i][j]
            if v == 0:
                continue
            if strategy == "first":
                return i, j
            if best is None or abs(v) < abs(A[best[0]][best[1]]):
                best = (i, j)
    return best


def smith_normal_form(M: Sequence[Sequence[int]], pivot: str = "min_abs") -> SNFResult:
    """Elementary divisors of an integer matrix.

    ``pivot`` selects the elimination order: ``"min_abs"`` always moves the
    smallest nonzero entry to the pivot position, ``"first"`` starts each
    stage from the first nonzero entry in row-major order.  Both give the
    same divisors; tests compare them.
    """
    if pivot not in ("min_abs", "first"):
        raise ValueError(f"unknown pivot strategy {pivot!r}")
    A = [[int(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    size = min(rows, cols)
    diag = []
    t = 0
    while t < size:
        p = _pick_pivot(A, t, pivot)
        if p is None:
            break
        while True:
            i, j = p
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            piv = A[t][t]
            for r in range(t + 1, rows):
                if A[r][t]:
                    q = A[r][t] // piv
                    A[r] = [a - q * b for a, b in zip(A[r], A[t])]
            for s in range(t + 1, cols):
                if A[t][s]:
                    q = A[t][s] // piv
                    for row in A:
                        row[s] -= q * row[t]
            rest = [(r, t) for r in range(t + 1, rows) if A[r][t]]
            rest += [(t, s) for s in range(t + 1, cols) if A[t][s]]
            if rest:
                # remainders are strictly smaller than the pivot
                p = min(rest, key=lambda rc: abs(A[rc[0]][rc[1]]))
                continue
            bad = next(((r, s) for r in range(t + 1, rows) for s in range(t + 1, cols)
                        if A[r][s] % piv), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
            p = (t, t)
        diag.append(abs(A[t][t]))
        t += 1
    rank = len(diag)
    diag.extend([0] * (size - rank))
    return SNFResult(tuple(diag), rank)


@dataclass(frozen=True)
class Cell:
    ones: tuple
    free: tuple

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def on_boundary(self) -> bool:
        return bool(self.ones)


@dataclass(frozen=True)
class CubicalPair:
    k: int
    cells: tuple
    boundary_flag: tuple

    def cells_of_dim(self, d: int, relative: bool = True) -> list:
        return [c for c, b in zip(self.cells, self.boundary_flag)
                if c.dim == d and not (relative and b)]

    @property
    def dimension(self) -> int:
        return max((c.dim for c in self.cells), default=0)

    def boundary(self, cell: Cell) -> dict:
        """Cubical boundary; interval directions are oriented in increasing index order."""
        out = {}
        for pos, j in enumerate(cell.free):
            sign = -1 if pos % 2 else 1
            rest = tuple(x for x in cell.free if x != j)
            top = Cell(tuple(sorted(cell.ones + (j,))), rest)
            bottom = Cell(cell.ones, rest)
            out[top] = out.get(top, 0) + sign
            out[bottom] = out.get(bottom, 0) - sign
        return out


def cubical_pair(S: DisjointnessComplex) -> CubicalPair:
    supports = [()] + sorted(tuple(sorted(s)) for s in S.simplices)
    cells = []
    for J in supports:
        for r in range(len(J) + 1):
            for ones in combinations(J, r):
                free = tuple(x for x in J if x not in ones)
                cells.append(Cell(ones, free))
    cells.sort(key=lambda c: (c.dim, c.ones, c.free))
    return CubicalPair(S.k, tuple(cells), tuple(c.on_boundary for c in cells))


def relative_boundary_matrix(P: CubicalPair, d: int) -> list:
    """Matrix of the relative boundary C_d -> C_{d-1}; rows index (d-1)-cells."""
    src = P.cells_of_dim(d)
    dst = P.cells_of_dim(d - 1)
    index = {c: i for i, c in enumerate(dst)}
    M = [[0] * len(src) for _ in dst]
    for col, cell in enumerate(src):
        for face, coeff in P.boundary(cell).items():
            if face in index:
                M[index[face]][col] += coeff
    return M


def _rank_and_torsion(M, pivot):
    if not M or not M[0]:
        return 0, ()
    snf = smith_normal_form(M, pivot)
    return snf.rank, snf.torsion


def relative_cochain_ranks(S: DisjointnessComplex) -> list:
    P = cubical_pair(S)
    return [len(P.cells_of_dim(d)) for d in range(P.dimension + 1)]


def relative_cohomology(S: DisjointnessComplex, degree: int,
                        pivot: str = "min_abs") -> tuple:
    """(free rank, torsion) of H^degree(P(R), dP(R); Z) for the cubical model."""
    if degree < 0:
        raise ValueError("negative degree")
    P = cubical_pair(S)
    n_d = len(P.cells_of_dim(degree))
    if n_d == 0:
        return 0, ()
    # coboundary ranks equal boundary ranks; torsion of H^d comes from d_d
    rank_out, _ = _rank_and_torsion(relative_boundary_matrix(P, degree + 1), pivot)
    rank_in, torsion = _rank_and_torsion(relative_boundary_matrix(P, degree), pivot)
    return n_d - rank_out - rank_in, torsion


class ConditionIKind(enum.Enum):
    VERIFIED = "Verified"
    DIAGNOSTIC_PASS = "DiagnosticPass"
    DIAGNOSTIC_FAIL = "DiagnosticFail"


@dataclass(frozen=True)
class ConditionIVerdict:
    kind: ConditionIKind
    pattern: Pattern
    rank: int | None = None
    torsion: tuple = ()

    def to_json(self) -> dict:
        out = {"verdict": self.kind.value, "pattern": self.pattern.value}
        if self.rank is not None:
            out["rank"] = self.rank
            out["torsion"] = list(self.torsion)
        if self.kind is ConditionIKind.DIAGNOSTIC_PASS:
            out["note"] = "necessary-style evidence, not a proof"
        return out


def condition_i_check(S: DisjointnessComplex, bplus: int) -> ConditionIVerdict:
    pv = match_condition_i_pattern(S, bplus)
    if pv.verified:
        return ConditionIVerdict(ConditionIKind.VERIFIED, pv.pattern)
    rank, torsion = relative_cohomology(S, bplus)
    kind = (ConditionIKind.DIAGNOSTIC_PASS if (rank, torsion) == (1, ())
            else ConditionIKind.DIAGNOSTIC_FAIL)
    return ConditionIVerdict(kind, Pattern.UNKNOWN, rank, torsion)
