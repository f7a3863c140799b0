import time

import pytest

from mlds.errors import InfeasibleTarget, OracleTimeout, OracleTooLarge
from mlds.exact import exact_mlds, exact_mlds_restricted
from mlds.geometry import Point, build_udg
from mlds.harness import feasible_instances

from conftest import brute_min_lds, line


def test_triangle_and_path(k3, p5):
    t = time.perf_counter()
    assert exact_mlds(k3).optimum_size == 3
    assert exact_mlds(p5).optimum_size == 5
    assert time.perf_counter() - t < 1


def test_two_vertices_infeasible():
    res = exact_mlds(line(2))
    assert res.infeasible and res.solution is None


def test_restricted_examples(p5):
    assert exact_mlds_restricted(p5, {2}).solution == (1, 2)
    assert exact_mlds_restricted(p5, {0, 1}).optimum_size == 3
    assert exact_mlds_restricted(p5, range(5)).solution == exact_mlds(p5).solution


def test_restricted_infeasible_target():
    g = build_udg([Point(0, 0), Point(50, 0), Point(60, 0), Point(70, 0)])
    with pytest.raises(InfeasibleTarget):
        exact_mlds_restricted(g, {0})


def test_cap_and_budget():
    g = build_udg([Point(i * 3, 0) for i in range(30)])
    with pytest.raises(OracleTooLarge):
        exact_mlds(g)
    dense = build_udg([Point(x, y) for x in range(0, 40, 4) for y in range(0, 40, 4)])
    with pytest.raises(OracleTimeout):
        exact_mlds(dense, max_vertices=200, time_budget=0.01)


@pytest.mark.parametrize("pts", feasible_instances(40, n_range=(3, 9), seed=11))
def test_matches_literal_enumeration(pts):
    g = build_udg(pts)
    assert exact_mlds(g).solution == brute_min_lds(g)


@pytest.mark.parametrize("pts", feasible_instances(15, n_range=(4, 8), seed=12))
def test_restricted_matches_enumeration(pts):
    g = build_udg(pts)
    target = tuple(range(0, g.n, 2))
    try:
        got = exact_mlds_restricted(g, target).solution
    except InfeasibleTarget:
        assert brute_min_lds(g, target) is None
        return
    assert got == brute_min_lds(g, target)
