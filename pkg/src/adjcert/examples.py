"""Worked configurations from the literature, packaged as ready-to-run requests."""
from __future__ import annotations

from .config import SurfaceDecl
from .construct import conn_sum_genus_of
from .lattice import HClass, IntersectionLattice


def _e(n: int, coeffs: dict) -> tuple:
    e = [0] * n
    for q, a in coeffs.items():
        e[q - 1] += a
    return tuple(e)


def _span(lo: int, hi: int, a: int) -> dict:
    return {q: a for q in range(lo, hi + 1)}


def quadruple_2_19():
    """Four square-zero classes in 2CP^2 # 19(-CP^2) with c = H1 - 3H2 - sum E_q."""
    L = IntersectionLattice(2, 19)
    n = L.n
    c = HClass((1, -3), (-1,) * n)
    a1 = HClass((3, 3), _e(n, {**_span(1, 3, -1), **_span(4, 10, 1), 11: 2, 12: 2}))
    a2 = HClass((-3, 2), _e(n, {**_span(1, 3, 1), **_span(13, 18, 1), 19: 2}))
    a3 = HClass((1, 1), _e(n, {12: 1, 13: -1}))
    a4 = HClass((2, -1), _e(n, {**_span(1, 3, -1), 13: -1, 14: 1}))
    # genera are placeholders; no embedding is known, only the lower bound
    surfaces = [SurfaceDecl(f"Sigma_{i}", a, 2) for i, a in enumerate((a1, a2, a3, a4), 1)]
    pairs = [(1, 2), (2, 3), (3, 4), (4, 1)]
    return L, c, surfaces, pairs


def single_surface_family1(d1: int, d2: int, d3: int, n: int | None = None):
    """alpha = d1 H1 - sum E, beta_1 = d2 H2 + sum E, beta_2 = d3 H2 - sum E in 2CP^2 # n(-CP^2)."""
    if n is None:
        n = d1 * d1 + max(d2 * d2, d3 * d3)
    L = IntersectionLattice(2, n)
    c = HClass((3, 1), (-1,) * n)
    base = d1 * d1
    alpha = HClass((d1, 0), _e(n, _span(1, base, -1)))
    b1 = HClass((0, d2), _e(n, _span(base + 1, base + d2 * d2, 1)))
    b2 = HClass((0, d3), _e(n, _span(base + 1, base + d3 * d3, -1)))
    sigma = SurfaceDecl("Sigma", alpha, (d1 - 1) * (d1 - 2) // 2)
    betas = [SurfaceDecl("S_1", b1, conn_sum_genus_of(b1, 2)),
             SurfaceDecl("S_2", b2, conn_sum_genus_of(b2, 2))]
    return L, c, sigma, betas, [(1, 2), (1, 3)]


def family2_params_valid(d1: int, d2: int, d3: int, d4: int) -> bool:
    return (d1 >= 1 and d2 >= 0 and d3 >= 2 and d4 >= 2
            and d3 >= d4 >= max(d2, 2)
            and d1 * d1 + d2 * d2 - 2 * d2 * d3 - 3 * d1 - d2 > 0)


def family2_bound(d1: int, d2: int, d3: int, d4: int) -> int:
    """(d1-1)(d1-2)/2 + (d2/2)(d2 - 2 d3 - 1), always an integer."""
    return (d1 - 1) * (d1 - 2) // 2 + d2 * (d2 - 2 * d3 - 1) // 2


def single_surface_family2(d1: int, d2: int, d3: int, d4: int, n: int | None = None):
    """The (d1, d2, d3, d4) family; index ranges are taken literally, empty when reversed."""
    N = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4 - d2 * d3 - d2 * d4
    if n is None:
        n = max(N, d3 * d3 + d4 * d4, d3 * d3 + d2 * d4, d2 * d3)
    L = IntersectionLattice(2, n)
    c = HClass((3, 1), (-1,) * n)
    s3, s4 = d3 * d3, d4 * d4
    alpha = HClass((d1, d2), _e(n, {**_span(1, d2 * d3, 1),
                                    **_span(s3 + 1, s3 + d2 * d4, -1),
                                    **_span(s3 + s4 + 1, N, -1)}))
    b1 = HClass((0, d3), _e(n, _span(1, s3, 1)))
    b2 = HClass((0, d4), _e(n, _span(s3 + 1, s3 + s4, -1)))
    sigma = SurfaceDecl("Sigma", alpha, max(family2_bound(d1, d2, d3, d4), 0))
    betas = [SurfaceDecl("S_1", b1, conn_sum_genus_of(b1, 2)),
             SurfaceDecl("S_2", b2, conn_sum_genus_of(b2, 2))]
    return L, c, sigma, betas, [(1, 2), (1, 3)]


def single_surface_mcp2(d1: int, dims: list):
    """m = 1 + len(dims) summands; dims holds (d_{p,2}, d_{p,3}) for p = 2..m."""
    m = 1 + len(dims)
    sizes = [d1 * d1] + [max(a * a, b * b) for a, b in dims]
    n = sum(sizes)
    L = IntersectionLattice(m, n)
    c = HClass((3,) + (1,) * (m - 1), (-1,) * n)
    alpha = HClass((d1,) + (0,) * (m - 1), _e(n, _span(1, d1 * d1, -1)))
    betas = []
    start = sizes[0]
    for p, (a, b) in enumerate(dims, 2):
        h1 = [0] * m
        h1[p - 1] = a
        h2 = [0] * m
        h2[p - 1] = b
        x = HClass(h1, _e(n, _span(start + 1, start + a * a, 1)))
        y = HClass(h2, _e(n, _span(start + 1, start + b * b, -1)))
        betas.append(SurfaceDecl(f"S_{p},1", x, conn_sum_genus_of(x, p)))
        betas.append(SurfaceDecl(f"S_{p},2", y, conn_sum_genus_of(y, p)))
        start += sizes[p - 1]
    sigma = SurfaceDecl("Sigma", alpha, (d1 - 1) * (d1 - 2) // 2)
    pairs = [(1, j) for j in range(2, len(betas) + 2)]
    return L, c, sigma, betas, pairs


def strle_thom(d: int, genus: int | None = None):
    """A degree-d class in CP^2 with c = 3H."""
    L = IntersectionLattice(1, 0)
    c = HClass((3,), ())
    g = (d - 1) * (d - 2) // 2 if genus is None else genus
    return L, c, [SurfaceDecl("Sigma", HClass((d,), ()), g)], []
