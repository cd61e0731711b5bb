"""Surface configurations and the disjointness complex they induce.

Surfaces are indexed 1..k.  Disjointness is declared by the caller and is
never inferred from algebraic intersection numbers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .lattice import HClass


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceDecl:
    name: str
    cls: HClass
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ConfigError(f"surface {self.name!r}: negative genus {self.genus}")

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus

    @property
    def chi_minus(self) -> int:
        return max(-self.euler, 0)


@dataclass(frozen=True)
class DisjointnessComplex:
    k: int
    edges: frozenset
    simplices: frozenset = field(compare=False)

    def is_simplex(self, I: Iterable[int]) -> bool:
        return frozenset(I) in self.simplices

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def faces(self, size: int) -> list:
        """Simplices with ``size`` vertices, each a sorted tuple, in lexicographic order."""
        return sorted(tuple(sorted(s)) for s in self.simplices if len(s) == size)

    def adjacency(self) -> dict:
        adj = {i: set() for i in range(1, self.k + 1)}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _cliques(k: int, adj: dict) -> set:
    out = set()

    def grow(current: tuple, candidates: list):
        for idx, v in enumerate(candidates):
            nxt = current + (v,)
            out.add(frozenset(nxt))
            grow(nxt, [w for w in candidates[idx + 1:] if w in adj[v]])

    grow((), list(range(1, k + 1)))
    return out


def build_complex(k: int, disjoint_pairs: Iterable) -> DisjointnessComplex:
    """Flag complex of the declared disjointness graph on vertices 1..k."""
    if k < 0:
        raise ConfigError("negative surface count")
    edges = set()
    for pair in disjoint_pairs:
        a, b = pair
        if a == b:
            raise ConfigError(f"self-pair ({a}, {b})")
        for v in (a, b):
            if not 1 <= v <= k:
                raise ConfigError(f"index {v} out of range 1..{k}")
        edges.add(frozenset((a, b)))
    adj = {i: set() for i in range(1, k + 1)}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    return DisjointnessComplex(k, frozenset(edges), frozenset(_cliques(k, adj)))


class Pattern(enum.Enum):
    CYCLE4 = "Cycle4"
    AXES_PAIRS = "AxesPairs"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PatternVerdict:
    pattern: Pattern
    axes: tuple = ()

    @property
    def verified(self) -> bool:
        return self.pattern is not Pattern.UNKNOWN

    def to_json(self) -> dict:
        out = {"pattern": self.pattern.value}
        if self.axes:
            out["axes"] = [list(a) for a in self.axes]
        return out


CYCLE4_EDGES = frozenset(frozenset(p) for p in ((1, 2), (2, 3), (3, 4), (4, 1)))


def match_condition_i_pattern(S: DisjointnessComplex, bplus: int) -> PatternVerdict:
    """Recognise the two complexes whose parameter space is known to be R^{b+}.

    Cycle4 is the 4-cycle 1-2-3-4-1 in index order (the quadrilateral case).
    AxesPairs is the boundary of the b+-dimensional cross-polytope: the
    vertices split into b+ non-adjacent pairs and every cross-pair edge is
    present.  A 4-cycle in another vertex order is reported as AxesPairs.
    """
    if bplus == 2 and S.k == 4 and S.edges == CYCLE4_EDGES:
        return PatternVerdict(Pattern.CYCLE4, ((1, 3), (2, 4)))
    if bplus >= 1 and S.k == 2 * bplus:
        all_pairs = {frozenset(p) for p in combinations(range(1, S.k + 1), 2)}
        missing = all_pairs - S.edges
        covered = set()
        for e in missing:
            covered |= e
        if len(missing) == bplus and len(covered) == S.k:
            axes = tuple(sorted(tuple(sorted(e)) for e in missing))
            return PatternVerdict(Pattern.AXES_PAIRS, axes)
    return PatternVerdict(Pattern.UNKNOWN)
