"""Independent reference computations used only by the tests.

Nothing here imports the package's engines: these are deliberately naive
re-derivations (sympy for integer normal forms, simplicial cohomology of S
for the relative cubical cohomology, ray casting for winding numbers).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def sympy_divisors(M) -> list:
    """Nonzero elementary divisors (positive, sorted) via sympy."""
    if not M or not M[0]:
        return []
    facs = invariant_factors(Matrix(M), domain=ZZ)
    return sorted(abs(int(f)) for f in facs if int(f) != 0)


def flag_simplices(k: int, edges) -> list:
    es = {frozenset(e) for e in edges}
    out = []
    for size in range(1, k + 1):
        for I in combinations(range(1, k + 1), size):
            if all(frozenset(p) in es for p in combinations(I, 2)):
                out.append(I)
    return out


def reduced_simplicial_cohomology(k: int, edges, degree: int) -> tuple:
    """(free rank, torsion) of the reduced cohomology of the flag complex, augmented by the empty face."""
    faces = {-1: [()]}
    for I in flag_simplices(k, edges):
        faces.setdefault(len(I) - 1, []).append(I)

    def coboundary(d):
        # matrix of delta: C^d -> C^{d+1}; rows = (d+1)-faces
        src = faces.get(d, [])
        dst = faces.get(d + 1, [])
        idx = {f: i for i, f in enumerate(src)}
        M = [[0] * len(src) for _ in dst]
        for r, f in enumerate(dst):
            for pos in range(len(f)):
                g = f[:pos] + f[pos + 1:]
                if g in idx:
                    M[r][idx[g]] += (-1) ** pos
        return M

    def rank(M):
        return Matrix(M).rank() if M and M[0] else 0

    n = len(faces.get(degree, []))
    if n == 0:
        return 0, ()
    out = coboundary(degree)
    into = coboundary(degree - 1)
    free = n - rank(out) - rank(into)
    tors = tuple(d for d in sympy_divisors(into) if d > 1)
    return free, tors


def ray_winding(polygon, point=(0, 0)) -> int:
    """Signed crossings of the ray {point + t(1, 0), t > 0}; point must be off the polygon."""
    px, py = Fraction(point[0]), Fraction(point[1])
    pts = [(Fraction(x) - px, Fraction(y) - py) for x, y in polygon]
    w = 0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        if (y1 > 0) != (y2 > 0):
            xc = x1 + (0 - y1) * (x2 - x1) / (y2 - y1)
            if xc > 0:
                w += 1 if y2 > y1 else -1
    return w


def on_polygon(polygon, point=(0, 0)) -> bool:
    px, py = Fraction(point[0]), Fraction(point[1])
    pts = [(Fraction(x), Fraction(y)) for x, y in polygon]
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
        if cross == 0 and min(x1, x2) <= px <= max(x1, x2) and min(y1, y2) <= py <= max(y1, y2):
            return True
    return False


def diag_pairing(m: int, x, y) -> int:
    """x.y on diag(+1^m, -1^n) for flat coordinate tuples."""
    return sum(a * b * (1 if i < m else -1) for i, (a, b) in enumerate(zip(x, y)))
