import random

import pytest

from adjcert.certify import (CERTIFIED, HYPOTHESIS_FAILURE, INCONCLUSIVE, InternalFault,
                             certify_general, certify_special, genus_bound,
                             replay_stretch_contradiction)
from adjcert.config import SurfaceDecl
from adjcert.examples import quadruple_2_19
from adjcert.lattice import HClass, IntersectionLattice, pairing
from gen import random_quadruple


def test_example_special_and_general():
    L, c, surfaces, pairs = quadruple_2_19()
    for cert in (certify_special(L, c, surfaces, pairs), certify_general(L, c, surfaces, pairs)):
        d = cert.to_json()
        assert d["status"] == CERTIFIED
        assert d["conclusion"]["statement"] == "at least one g(Sigma_i) >= 2"
        assert [b["minus_euler_bound"] for b in d["conclusion"]["per_surface"]] == [2, 2, 2, 2]
    assert [pairing(L, c, s.cls) for s in surfaces] == [2, 2, -2, 2]


def test_declared_pair_with_nonzero_pairing_fails():
    L, c, surfaces, _ = quadruple_2_19()
    cert = certify_special(L, c, surfaces, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    assert cert.status == HYPOTHESIS_FAILURE
    assert any("declared_disjoint_pairs_orthogonal" in f for f in cert.failures)


def test_missing_cyclic_pair_fails_special():
    L, c, surfaces, _ = quadruple_2_19()
    cert = certify_special(L, c, surfaces, [(1, 2), (2, 3), (3, 4)])
    assert cert.status == HYPOTHESIS_FAILURE


def test_k_not_exceeding_bplus():
    L, c, surfaces, _ = quadruple_2_19()
    cert = certify_general(L, c, surfaces[:2], [(1, 2)])
    assert cert.status == HYPOTHESIS_FAILURE


def test_unbounded_general_is_inconclusive():
    L, c, surfaces, _ = quadruple_2_19()
    # Sigma_1, Sigma_2 and -Sigma_1 style lines cannot enclose the origin with three classes here
    cert = certify_general(L, c, surfaces[:3], [(1, 2), (2, 3)])
    assert cert.status == INCONCLUSIVE
    assert any("recession cone nontrivial" in r for r in cert.inconclusive_reasons)


def _square_with_flap():
    # alpha_5 = alpha_1 + alpha_2 lies in their isotropic plane, so its line is a
    # supporting line through the vertex L1 & L2; the complex is a square with a
    # triangle glued on edge 12, which has the right cohomology but no known pattern
    L, c, surfaces, pairs = quadruple_2_19()
    s5 = SurfaceDecl("Sigma_5", surfaces[0].cls + surfaces[1].cls, 3)
    return L, c, surfaces + [s5], pairs + [(1, 5), (2, 5)]


def test_diagnostic_pass_is_inconclusive_without_acknowledgement():
    L, c, surfaces, pairs = _square_with_flap()
    cert = certify_general(L, c, surfaces, pairs)
    d = cert.to_json()
    assert d["status"] == INCONCLUSIVE
    assert d["conclusion"] is None
    assert d["conditional_conclusion"]["statement"] == "at least one of: " + " or ".join(
        f"g(Sigma_{i}) >= {g}" for i, g in enumerate([2, 2, 2, 2, 3], 1))
    checks = {ch["name"]: ch for ch in d["checks"]}
    assert checks["condition_1_i"]["verdict"] == "DiagnosticPass"
    assert checks["condition_1_ii"]["verdict"] == "Verified"
    assert [1, 2, 5] in checks["condition_1_ii"]["witness"]["witness"]["active_sets"]


def test_diagnostic_pass_with_acknowledgement_certifies():
    L, c, surfaces, pairs = _square_with_flap()
    cert = certify_general(L, c, surfaces, pairs, assume_condition_i=True)
    assert cert.status == CERTIFIED
    assert any("1(i)" in a for a in cert.assumptions)


@pytest.mark.parametrize("seed", range(10))
def test_random_quadruples_certify_with_scaled_bound(seed):
    L, c, surfaces, pairs, k = random_quadruple(random.Random(seed))
    cert = certify_special(L, c, surfaces, pairs)
    assert cert.status == CERTIFIED, cert.failures
    assert cert.conclusion.statement == f"at least one g(Sigma_i) >= {k + 1}"


def test_genus_bound_values():
    L = IntersectionLattice(1, 1)
    c = L.cls((3,), (1,))
    a = L.cls((1,), (1,))
    assert genus_bound(L, c, a) == (2, 2)
    with pytest.raises(ValueError):
        genus_bound(L, c, L.H(1))
    with pytest.raises(InternalFault):
        genus_bound(L, L.cls((2,), (1,)), a)


def test_declared_genus_notes():
    L, c, surfaces, pairs = quadruple_2_19()
    low = [SurfaceDecl(s.name, s.cls, 1) for s in surfaces]
    cert = certify_special(L, c, low, pairs)
    assert cert.status == CERTIFIED
    assert any("cannot be realised" in n for n in cert.notes)


def test_replay_contradiction():
    rep = replay_stretch_contradiction([3, 3, 3, 3], [0, 0, 0, 0], [2, 2, 2, 2], 10)
    assert rep.hypothesis_holds and rep.contradiction
    short = replay_stretch_contradiction([1, 1, 1, 1], [0, 0, 0, 0], [2, 2, 2, 2], 10)
    assert short.hypothesis_holds and not short.contradiction
    sat = replay_stretch_contradiction([5, 5], [2, 0], [2, 2], 1)
    assert not sat.hypothesis_holds
    assert rep.to_json()["single_surface_threshold_R_min"] == "5"


def test_replay_input_errors():
    with pytest.raises(ValueError):
        replay_stretch_contradiction([1], [0, 0], [2, 2], 1)
    with pytest.raises(ValueError):
        replay_stretch_contradiction([-1], [0], [2], 1)
