from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from adjcert.config import ConfigError, Pattern, SurfaceDecl, build_complex, match_condition_i_pattern
from adjcert.lattice import HClass
from oracles import flag_simplices


@st.composite
def graphs(draw):
    k = draw(st.integers(0, 8))
    pairs = list(combinations(range(1, k + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return k, chosen


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_flag_property_exhaustive_over_subsets(g):
    k, edges = g
    S = build_complex(k, edges)
    es = {frozenset(e) for e in edges}
    for size in range(1, k + 1):
        for I in combinations(range(1, k + 1), size):
            expected = all(frozenset(p) in es for p in combinations(I, 2))
            assert S.is_simplex(I) == expected
    assert sorted(tuple(sorted(s)) for s in S.simplices) == sorted(flag_simplices(k, edges))


def test_cycle4():
    S = build_complex(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert S.dimension == 1
    assert match_condition_i_pattern(S, 2).pattern is Pattern.CYCLE4


def test_cycle_in_other_order_is_axes_pairs():
    S = build_complex(4, [(1, 3), (3, 2), (2, 4), (4, 1)])
    v = match_condition_i_pattern(S, 2)
    assert v.pattern is Pattern.AXES_PAIRS
    assert v.axes == ((1, 2), (3, 4))


@pytest.mark.parametrize("b", [1, 2, 3])
def test_axes_pairs(b):
    k = 2 * b
    edges = [p for p in combinations(range(1, k + 1), 2)
             if not (p[0] % 2 == 1 and p[1] == p[0] + 1)]
    v = match_condition_i_pattern(build_complex(k, edges), b)
    assert v.pattern is Pattern.AXES_PAIRS


def test_unknown_pattern():
    S = build_complex(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert match_condition_i_pattern(S, 2).pattern is Pattern.UNKNOWN


@pytest.mark.parametrize("pairs", [[(1, 1)], [(0, 2)], [(1, 5)]])
def test_bad_pairs(pairs):
    with pytest.raises(ConfigError):
        build_complex(4, pairs)


def test_surface_euler():
    s = SurfaceDecl("S", HClass((1,), ()), 3)
    assert s.euler == -4 and s.chi_minus == 4
    assert SurfaceDecl("T", HClass((1,), ()), 0).chi_minus == 0
    with pytest.raises(ConfigError):
        SurfaceDecl("U", HClass((1,), ()), -1)
