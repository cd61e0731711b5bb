"""Blow-ups, connected-sum surfaces, and the two reduction pipelines.

``single_surface_pipeline`` turns one zero-square class plus pairs of
adjunction-violating surfaces into a configuration for the general
engine; ``strle_pipeline`` reduces positive-square classes to zero-square
ones by blowing up.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .certify import (Certificate, ConclusionStmt, SurfaceBound, certify_general,
                      input_block)
from .config import ConfigError, SurfaceDecl, build_complex
from .lattice import (HClass, IntersectionLattice, is_characteristic, pairing, square)


@dataclass(frozen=True)
class BlowupResult:
    lattice: IntersectionLattice
    old: IntersectionLattice
    new_E: tuple

    def embed(self, x: HClass) -> HClass:
        self.old.check(x)
        return HClass(x.h, x.e + (0,) * (self.lattice.n - self.old.n))


def blow_up(L: IntersectionLattice, count: int) -> BlowupResult:
    if count < 0:
        raise ValueError("negative blow-up count")
    L2 = IntersectionLattice(L.m, L.n + count)
    return BlowupResult(L2, L, tuple(L2.E(L.n + q) for q in range(1, count + 1)))


def _curve_genus(d: int) -> int:
    # a zero coefficient means no curve in that summand
    if d == 0:
        return 0
    d = abs(d)
    return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class ConnSumSurface:
    a: int
    bs: tuple
    genus: int


def conn_sum_surface(a: int, bs: Sequence[int] = ()) -> ConnSumSurface:
    """Genus of C # (#_q C_q) for a degree-|a| curve and degree-|b_q| curves."""
    bs = tuple(int(b) for b in bs)
    return ConnSumSurface(int(a), bs, _curve_genus(a) + sum(_curve_genus(b) for b in bs))


def conn_sum_genus_of(cls: HClass, p: int) -> int:
    """Genus of the connected-sum representative of a class living in CP^2_p and the E summands."""
    if any(x for j, x in enumerate(cls.h, 1) if j != p):
        raise ValueError(f"class {cls} has H-coefficients outside summand {p}")
    return conn_sum_surface(cls.h[p - 1], cls.e).genus


def violates_adjunction(L: IntersectionLattice, c: HClass, beta: HClass, genus: int) -> bool:
    return 2 * genus - 2 < abs(pairing(L, c, beta))


def _sum(L: IntersectionLattice, classes) -> HClass:
    out = L.zero()
    for x in classes:
        out = out + x
    return out


def single_surface_pipeline(L: IntersectionLattice, c: HClass, sigma: SurfaceDecl,
                            betas: Sequence[SurfaceDecl], disjoint_pairs) -> Certificate:
    """Certify -chi(Sigma) >= |c.alpha| for one surface avoiding violating surfaces.

    ``betas`` are ordered beta_{2,1}, beta_{2,2}, beta_{3,1}, ... (two per
    CP^2 summand beyond the first).  ``disjoint_pairs`` index the list
    [sigma] + betas from 1 and must attest Sigma disjoint from every S_{p,i}.
    """
    surfaces = [sigma] + list(betas)
    disjoint_pairs = [tuple(p) for p in disjoint_pairs]
    cert = Certificate("SingleSurface", input_block(L, c, surfaces, disjoint_pairs,
                                                    "single-surface"))
    m = L.m
    if m < 2:
        cert.fail("bplus_at_least_2", f"b+ = {m}", bplus=m)
        return cert
    if len(betas) != 2 * (m - 1):
        cert.fail("beta_count", f"need {2 * (m - 1)} beta surfaces, got {len(betas)}",
                  expected=2 * (m - 1), got=len(betas))
        return cert
    alpha = sigma.cls

    chk = is_characteristic(L, c)
    (cert.add if chk else cert.fail)("characteristic",
                                     "Pass" if chk else "c is not characteristic", c=str(c))
    c2 = square(L, c)
    if c2 > L.signature:
        cert.add("c_squared_exceeds_signature", "Pass", c_squared=c2, signature=L.signature)
    else:
        cert.fail("c_squared_exceeds_signature", f"c^2 = {c2} <= {L.signature}",
                  c_squared=c2, signature=L.signature)
    cH1 = pairing(L, c, L.H(1))
    if cH1 > -3:
        cert.add("c_dot_H1_exceeds_minus_3", "Pass", c_dot_H1=cH1)
    else:
        cert.fail("c_dot_H1_exceeds_minus_3", f"c.H1 = {cH1}", c_dot_H1=cH1)
    a2 = square(L, alpha)
    if a2 == 0:
        cert.add("alpha_square_zero", "Pass", surface=sigma.name)
    else:
        cert.fail("alpha_square_zero", f"alpha^2 = {a2}", alpha_squared=a2)
    h1a, ca = pairing(L, L.H(1), alpha), pairing(L, c, alpha)
    if h1a * ca < 0:
        cert.add("H1_alpha_times_c_alpha_negative", "Pass", H1_dot_alpha=h1a, c_dot_alpha=ca)
    else:
        cert.fail("H1_alpha_times_c_alpha_negative",
                  f"(H1.alpha)(c.alpha) = {h1a} * {ca} is not negative",
                  H1_dot_alpha=h1a, c_dot_alpha=ca)

    supports = {}
    for idx, b in enumerate(betas):
        p, i = idx // 2 + 2, idx % 2 + 1
        tag = f"beta_{p},{i}"
        bc = b.cls
        if any(x for j, x in enumerate(bc.h, 1) if j != p):
            cert.fail(f"{tag}_in_summand", f"{b.name} has H-coefficients outside H_{p}")
        b2, hb, cb = square(L, bc), pairing(L, L.H(p), bc), pairing(L, c, bc)
        sign = 1 if i == 1 else -1
        ok = b2 == 0 and hb > 0 and sign * cb > 0
        witness = dict(surface=b.name, beta_squared=b2, Hp_dot_beta=hb, c_dot_beta=cb)
        if ok:
            cert.add(f"{tag}_hypotheses", "Pass", **witness)
        else:
            cert.fail(f"{tag}_hypotheses",
                      "need beta^2 = 0, H_p.beta > 0 and (-1)^(i-1) c.beta > 0", **witness)
        if violates_adjunction(L, c, bc, b.genus):
            cert.add(f"{tag}_violates_adjunction", "Pass", genus=b.genus, c_dot_beta=cb)
        else:
            cert.fail(f"{tag}_violates_adjunction",
                      f"-chi = {2 * b.genus - 2} is not below |c.beta| = {abs(cb)}",
                      genus=b.genus, c_dot_beta=cb)
        supports.setdefault(p, set()).update(q for q, x in enumerate(bc.e, 1) if x)
    for p1, p2 in combinations(sorted(supports), 2):
        shared = supports[p1] & supports[p2]
        if shared:
            cert.fail("summands_separate", f"beta classes of summands {p1} and {p2} share "
                      f"exceptional classes {sorted(shared)}")
    try:
        declared = build_complex(len(surfaces), disjoint_pairs).edges
    except ConfigError as exc:
        cert.fail("disjointness_input", str(exc))
        return cert
    need = {frozenset((1, j)) for j in range(2, len(surfaces) + 1)}
    missing = sorted(sorted(e) for e in need - declared)
    if missing:
        cert.fail("sigma_disjoint_from_betas", f"missing attestations {missing}", missing=missing)
    else:
        cert.add("sigma_disjoint_from_betas", "Attested")
    if cert.failures:
        return cert

    mm = abs(cH1) + 1
    bu = blow_up(L, mm * mm)
    L2 = bu.lattice
    newE = _sum(L2, bu.new_E)
    c2_ = bu.embed(c) - newE
    gamma = mm * L2.H(1) + newE
    g_gamma = conn_sum_genus_of(gamma, 1)
    cg = pairing(L2, c2_, gamma)
    if cg != mm * cH1 + mm * mm or cg <= 0 or square(L2, gamma) != 0:
        raise AssertionError("gamma construction broke its defining identities")
    if not violates_adjunction(L2, c2_, gamma, g_gamma):
        raise AssertionError("gamma surface does not violate adjunction")
    cert.add("blow_up", "Done", count=mm * mm, m_gamma=mm, lattice=[L2.m, L2.n])
    cert.add("gamma_violates_adjunction", "Pass", gamma=str(gamma), genus=g_gamma,
             c_prime_dot_gamma=cg)

    sig2 = SurfaceDecl(sigma.name, bu.embed(alpha), sigma.genus)
    gam = SurfaceDecl("S_gamma", gamma, g_gamma)
    bs2 = [SurfaceDecl(b.name, bu.embed(b.cls), b.genus) for b in betas]
    if m == 2:
        config = [sig2, bs2[0], gam, bs2[1]]
        pairs = [(1, 2), (2, 3), (3, 4), (4, 1)]
    else:
        config = [sig2, gam] + bs2
        pairs = [(a, b) for a, b in combinations(range(1, 2 * m + 1), 2)
                 if (a + 1) // 2 != (b + 1) // 2]
    inner = certify_general(L2, c2_, config, pairs)
    cert.extra["reduction"] = inner.to_json()
    cert.assumptions.append(f"{sigma.name} is disjoint from every S_(p,i) (caller attestation)")
    cert.assumptions.append("S_(p,i) for distinct p lie in distinct summands and the gamma "
                            "surface lies in CP^2_1 and the new blow-ups, so they are "
                            "pairwise disjoint by construction")
    if inner.failures:
        cert.failures.append("reduced configuration failed the general engine: "
                             + "; ".join(inner.failures))
        return cert
    if inner.conclusion is None:
        cert.inconclusive_reasons.extend(inner.inconclusive_reasons)
        return cert
    others = [b for b in inner.conclusion.bounds if b.name != sigma.name]
    if not all(b.declared_meets_bound is False for b in others):
        raise AssertionError("a configuration member other than Sigma meets its bound")
    cert.add("others_violate", "Pass", surfaces=[b.name for b in others])
    e = abs(ca)
    cert.conclusion = ConclusionStmt(
        "Single", (SurfaceBound(1, sigma.name, e, e // 2 + 1, declared_genus=sigma.genus),))
    return cert


def strle_pipeline(L: IntersectionLattice, c: HClass, surfaces: Sequence[SurfaceDecl],
                   disjoint_pairs=()) -> Certificate:
    """chi^-(Sigma_i) >= -|c.alpha_i| + alpha_i^2 for at least one of b+ disjoint positive surfaces."""
    disjoint_pairs = [tuple(p) for p in disjoint_pairs]
    cert = Certificate("Strle", input_block(L, c, surfaces, disjoint_pairs, "strle"))
    k = len(surfaces)
    if k != L.bplus:
        cert.fail("count_equals_bplus", f"{k} surfaces for b+ = {L.bplus}", k=k, bplus=L.bplus)
        return cert
    chk = is_characteristic(L, c)
    (cert.add if chk else cert.fail)("characteristic",
                                     "Pass" if chk else "c is not characteristic", c=str(c))
    c2 = square(L, c)
    if c2 > L.signature:
        cert.add("c_squared_exceeds_signature", "Pass", c_squared=c2, signature=L.signature)
    else:
        cert.fail("c_squared_exceeds_signature", f"c^2 = {c2} <= {L.signature}",
                  c_squared=c2, signature=L.signature)
    sq = [square(L, s.cls) for s in surfaces]
    dots = [pairing(L, c, s.cls) for s in surfaces]
    for s, a2 in zip(surfaces, sq):
        if a2 > 0:
            cert.add("positive_self_intersection", "Pass", surface=s.name, alpha_squared=a2)
        else:
            cert.fail("positive_self_intersection", f"{s.name}: alpha^2 = {a2}",
                      surface=s.name, alpha_squared=a2)
    try:
        declared = build_complex(k, disjoint_pairs).edges
    except ConfigError as exc:
        cert.fail("disjointness_input", str(exc))
        return cert
    need = {frozenset(p) for p in combinations(range(1, k + 1), 2)}
    missing = sorted(sorted(e) for e in need - declared)
    if missing:
        cert.fail("pairwise_disjoint", f"missing attestations {missing}", missing=missing)
    elif k > 1:
        cert.add("pairwise_disjoint", "Attested")
    for e in sorted(sorted(e) for e in declared):
        ab = pairing(L, surfaces[e[0] - 1].cls, surfaces[e[1] - 1].cls)
        if ab != 0:
            cert.fail("declared_disjoint_pairs_orthogonal", f"pair {e} pairs to {ab}")
    if cert.failures:
        return cert

    bounds = []
    for i, (s, a2, ca) in enumerate(zip(surfaces, sq, dots), 1):
        B = a2 - abs(ca)
        bounds.append(SurfaceBound(i, s.name, B, B // 2 + 1 if B > 0 else 0, form="strle",
                                   declared_genus=s.genus))
    kind = "Single" if k == 1 else "AtLeastOne"
    trivial = [i for i, (a2, ca) in enumerate(zip(sq, dots), 1) if abs(ca) >= a2]
    if trivial:
        cert.add("trivial_bound_branch", "Pass", indices=trivial,
                 reason="|c.alpha_i| >= alpha_i^2 makes the bound <= 0 <= chi^-")
        cert.conclusion = ConclusionStmt(kind, tuple(bounds))
        cert.notes.append(f"satisfied trivially by surface(s) {trivial}")
        return cert

    total = sum(sq)
    bu = blow_up(L, total)
    L2 = bu.lattice
    blocks, start = [], 0
    for a2 in sq:
        blocks.append(_sum(L2, bu.new_E[start:start + a2]))
        start += a2
    c2_ = bu.embed(c) - _sum(L2, blocks)
    config = []
    for s, Ei, a2, ca in zip(surfaces, blocks, sq, dots):
        a = bu.embed(s.cls)
        plus, minus = a + Ei, a - Ei
        cp, cm = pairing(L2, c2_, plus), pairing(L2, c2_, minus)
        if not (cp == ca + a2 > 0 and cm == ca - a2 < 0):
            raise AssertionError(f"sign identity fails for {s.name}: {cp}, {cm}")
        if square(L2, plus) != 0 or square(L2, minus) != 0:
            raise AssertionError(f"alpha^+- of {s.name} is not square-zero")
        config.append(SurfaceDecl(s.name + "+", plus, s.genus))
        config.append(SurfaceDecl(s.name + "-", minus, s.genus))
    cert.add("blow_up", "Done", count=total, lattice=[L2.m, L2.n])
    cert.add("sign_identities", "Pass",
             c_prime_dot_alpha_plus=[pairing(L2, c2_, x.cls) for x in config[0::2]],
             c_prime_dot_alpha_minus=[pairing(L2, c2_, x.cls) for x in config[1::2]])
    pairs = [(a, b) for a, b in combinations(range(1, 2 * k + 1), 2)
             if (a + 1) // 2 != (b + 1) // 2]
    inner = certify_general(L2, c2_, config, pairs)
    cert.extra["reduction"] = inner.to_json()
    cert.assumptions.append("Sigma_i are pairwise disjoint (caller attestation); "
                            "Sigma_i^+- for distinct i stay disjoint by construction")
    if inner.failures:
        cert.failures.append("reduced configuration failed the general engine: "
                             + "; ".join(inner.failures))
        return cert
    if inner.conclusion is None:
        cert.inconclusive_reasons.extend(inner.inconclusive_reasons)
        return cert
    cert.conclusion = ConclusionStmt(kind, tuple(bounds))
    return cert
