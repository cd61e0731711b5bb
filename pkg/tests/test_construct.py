import pytest

from adjcert.certify import CERTIFIED, HYPOTHESIS_FAILURE
from adjcert.config import SurfaceDecl
from adjcert.construct import (blow_up, conn_sum_genus_of, conn_sum_surface,
                               single_surface_pipeline, strle_pipeline, violates_adjunction)
from adjcert.examples import (family2_bound, family2_params_valid, single_surface_family1,
                              single_surface_family2, single_surface_mcp2, strle_thom)
from adjcert.lattice import HClass, IntersectionLattice, pairing, square


def test_blow_up_embeds_and_adds_exceptionals():
    L = IntersectionLattice(2, 1)
    B = blow_up(L, 3)
    assert B.lattice.n == 4 and len(B.new_E) == 3
    x = L.cls((1, 2), (3,))
    y = B.embed(x)
    assert y.e == (3, 0, 0, 0)
    assert square(B.lattice, y) == square(L, x)
    assert all(square(B.lattice, E) == -1 for E in B.new_E)
    assert all(pairing(B.lattice, y, E) == 0 for E in B.new_E)


@pytest.mark.parametrize("a,bs,g", [(4, (), 3), (1, (1, 1), 0), (3, (2, 2), 1), (0, (1,), 0),
                                    (-5, (3,), 7)])
def test_connected_sum_genus(a, bs, g):
    assert conn_sum_surface(a, bs).genus == g


def test_conn_sum_genus_rejects_foreign_summand():
    with pytest.raises(ValueError):
        conn_sum_genus_of(HClass((1, 1), ()), 1)


def test_violates_adjunction():
    L = IntersectionLattice(1, 0)
    c = HClass((3,), ())
    assert violates_adjunction(L, c, HClass((2,), ()), 0)   # 2g-2 = -2 < 6
    assert not violates_adjunction(L, c, HClass((2,), ()), 4)


def test_family1_certifies_degree_bound():
    L, c, sigma, betas, pairs = single_surface_family1(4, 1, 2, 20)
    cert = single_surface_pipeline(L, c, sigma, betas, pairs)
    assert cert.status == CERTIFIED
    assert cert.conclusion.statement == "g(Sigma) >= 3"
    red = cert.to_json()["reduction"]
    assert red["status"] == CERTIFIED


@pytest.mark.parametrize("d", [(9, 1, 3, 3), (6, 1, 2, 2), (5, 0, 2, 2), (7, 2, 3, 2)])
def test_family2_valid_parameters(d):
    assert family2_params_valid(*d)
    L, c, sigma, betas, pairs = single_surface_family2(*d)
    cert = single_surface_pipeline(L, c, sigma, betas, pairs)
    assert cert.status == CERTIFIED, cert.failures
    assert cert.conclusion.bounds[0].genus_bound == family2_bound(*d)


def test_family2_invalid_parameters_fail_hypotheses():
    assert not family2_params_valid(1, 3, 9, 3)
    L, c, sigma, betas, pairs = single_surface_family2(1, 3, 9, 3)
    cert = single_surface_pipeline(L, c, sigma, betas, pairs)
    assert cert.status == HYPOTHESIS_FAILURE
    assert square(L, sigma.cls) == -26


def test_mcp2_pipeline_three_summands():
    L, c, sigma, betas, pairs = single_surface_mcp2(4, [(1, 2), (2, 3)])
    cert = single_surface_pipeline(L, c, sigma, betas, pairs)
    assert cert.status == CERTIFIED
    assert cert.conclusion.statement == "g(Sigma) >= 3"


def test_single_surface_rejects_beta_meeting_adjunction():
    L, c, sigma, betas, pairs = single_surface_family1(4, 1, 2, 20)
    fat = [SurfaceDecl(b.name, b.cls, 10) for b in betas]
    cert = single_surface_pipeline(L, c, sigma, fat, pairs)
    assert cert.status == HYPOTHESIS_FAILURE


@pytest.mark.parametrize("d,chi,g", [(4, 4, 3), (5, 10, 6), (6, 18, 10), (7, 28, 15)])
def test_strle_thom_values(d, chi, g):
    L, c, surfaces, pairs = strle_thom(d)
    cert = strle_pipeline(L, c, surfaces, pairs)
    assert cert.status == CERTIFIED
    b = cert.conclusion.bounds[0]
    assert (b.euler_bound, b.genus_bound) == (chi, g) == (d * d - 3 * d, (d - 1) * (d - 2) // 2)
    signs = {ch["name"]: ch for ch in cert.checks}["sign_identities"]["witness"]
    assert signs["c_prime_dot_alpha_plus"] == [3 * d + d * d]
    assert signs["c_prime_dot_alpha_minus"] == [3 * d - d * d]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_strle_trivial_branch(d):
    L, c, surfaces, pairs = strle_thom(d)
    cert = strle_pipeline(L, c, surfaces, pairs)
    assert cert.status == CERTIFIED
    assert cert.conclusion.bounds[0].genus_bound == 0


def test_strle_needs_bplus_surfaces():
    L, c, surfaces, _ = strle_thom(4)
    cert = strle_pipeline(L, c, surfaces * 2, [(1, 2)])
    assert cert.status == HYPOTHESIS_FAILURE


def test_strle_zero_square_rejected():
    L = IntersectionLattice(1, 1)
    cert = strle_pipeline(L, L.cls((3,), (1,)), [SurfaceDecl("S", L.cls((1,), (1,)), 0)])
    assert cert.status == HYPOTHESIS_FAILURE
