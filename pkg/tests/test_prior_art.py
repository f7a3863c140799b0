from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlds.domination import check_lds, check_lds_of
from mlds.errors import ConstructionFailed, InfeasibleInstance
from mlds.exact import exact_mlds, exact_mlds_restricted
from mlds.geometry import Point, build_udg
from mlds.harness import feasible_instances
from mlds.prior_art import (
    GADGET_Q,
    PLACEMENTS,
    BBPolicy,
    bb_solve,
    gadget_violations,
    gen_counterexample,
    make_gadget,
)

from conftest import counterexample, counterexample_optimum, line


def test_k3_sweep(k3):
    sol, trace = bb_solve(k3.points)
    assert len(sol) <= 4 and check_lds(k3, sol).valid
    # every half disk holds a single point, so each vertex starts an iteration
    assert [it.leftmost for it in trace.iterations] == [0, 2, 1]
    assert trace.iterations[0].case == "case2"


def test_path_sweep(p5):
    sol, trace = bb_solve(p5.points)
    assert sol == (0, 1, 2, 3, 4)
    assert set().union(*(it.chosen for it in trace.iterations)) == set(sol)


def test_infeasible():
    with pytest.raises(InfeasibleInstance):
        bb_solve([Point(0, 0), Point(5, 0)])


def test_trace_union_and_pick_cap():
    for pts in feasible_instances(150, n_range=(3, 30), seed=11):
        sol, trace = bb_solve(pts)
        assert set().union(*(it.chosen for it in trace.iterations)) == set(sol)
        assert max(trace.picks()) <= 11
        removed = [v for it in trace.iterations for v in it.removed]
        assert sorted(removed) == list(range(len(pts)))


def test_policy_alternatives():
    pts = feasible_instances(40, n_range=(6, 20), seed=5)
    variants = [BBPolicy(), BBPolicy(picks_per_q=1), BBPolicy(case2_cap=3),
                BBPolicy(case2_counts_earlier=False)]
    for points in pts:
        sizes = [len(bb_solve(points, policy)[0]) for policy in variants]
        assert sizes[1] <= sizes[0]
        assert all(s >= 1 for s in sizes)


# three points inside one half disk: Case 2 stops at double domination
TIGHT_TRIANGLE = [Point(19, 6), Point(19, 11), Point(22, 5)]


def test_case2_output_can_be_invalid():
    g = build_udg(TIGHT_TRIANGLE)
    sol, trace = bb_solve(TIGHT_TRIANGLE)
    assert len(trace.iterations) == 1 and trace.iterations[0].case == "case2"
    assert sol == (0, 1)
    cert = check_lds(g, sol)
    assert cert.condition1_ok and not cert.condition2_ok


def test_invalid_sweep_output_is_reported_not_raised():
    from mlds.harness import run_experiment

    batch = feasible_instances(120, n_range=(3, 14), seed=2)
    reports = run_experiment(batch, ["bb"], with_optimum=False)
    assert all(r.error is None for r in reports)
    flags = [check_lds(build_udg(pts), bb_solve(pts)[0]).valid for pts in batch]
    assert [r.valid for r in reports] == flags
    # frozen count for this batch; the sweep is often invalid on random input
    assert flags.count(False) == 33


def test_gadget_shape():
    gad = make_gadget(Point(0, 0))
    assert len(gad.qs) == 5 and len(gad.lens) == 10
    assert gad.qs == tuple(Point(*q) for q in GADGET_Q)
    assert len(set(gad.cluster)) == 11


def test_gadget_violation_reported():
    gad = make_gadget(Point(0, 0))
    pts = list(gad.cluster) + list(gad.qs[:4])
    problems = gadget_violations(pts, [gad])
    assert any("q point is missing" in p for p in problems)


def test_rejects_bad_k():
    with pytest.raises(ValueError):
        gen_counterexample(0)


def test_one_gadget():
    ce = counterexample(1)
    g = build_udg(list(ce.points))
    sol, trace = bb_solve(ce.points)
    first = trace.iterations[0]
    assert ce.points[first.leftmost] == Point(0, 0)
    assert first.case == "case1" and len(first.chosen) == 11
    region = exact_mlds_restricted(g, first.removed, max_vertices=len(ce.points))
    assert region.optimum_size == 3  # the red triple alone
    red = ce.red_triples[0]
    assert check_lds_of(g, red, first.removed)


def test_two_gadgets_pick_22():
    ce = counterexample(2)
    _, trace = bb_solve(ce.points)
    starts = {gad.p for gad in ce.gadgets}
    gadget_its = [it for it in trace.iterations if ce.points[it.leftmost] in starts]
    assert len(gadget_its) == 2
    assert sum(len(it.chosen) for it in gadget_its) == 22
    # the pair shares one red triple
    assert ce.triple_of == (0, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_self_verification(k):
    ce = counterexample(k)
    assert [g.p for g in ce.gadgets] == [Point(*p) for p in PLACEMENTS[:k]]
    assert gadget_violations(ce.points, ce.gadgets, ce.red_triples, ce.triple_of) == []
    g = build_udg(list(ce.points))
    assert check_lds(g, ce.witness).valid
    assert ce.bb_valid and check_lds(g, ce.bb_solution).valid
    for gad in ce.gadgets:
        for q in gad.qs:
            assert 100 < q.dist_sq(gad.p) <= 225


def test_tampered_instance_fails_verification():
    ce = counterexample(1)
    pts = list(ce.points)
    # a point left of p takes over the first iteration
    pts.append(Point(-1, 0))
    assert gadget_violations(pts, ce.gadgets, ce.red_triples, ce.triple_of)


def test_ratio_at_three_gadgets():
    ce = counterexample(3)
    ratio = Fraction(len(ce.bb_solution), counterexample_optimum(3))
    assert ratio >= 6 > Fraction(11, 2)
    assert counterexample_optimum(3) <= len(ce.witness)


@pytest.mark.slow
def test_ratio_nondecreasing_up_to_four():
    ratios = [Fraction(len(counterexample(k).bb_solution), counterexample_optimum(k))
              for k in range(1, 5)]
    assert ratios == sorted(ratios)
    assert ratios[2] > Fraction(11, 2)


def test_milp_matches_enumeration_on_small_counterexample_region():
    ce = counterexample(1)
    assert counterexample_optimum(1) <= len(ce.witness)
    # the 11-point cluster plus q's alone is small enough for both oracles
    sub = list(ce.points[:16])
    small = build_udg(sub)
    from mlds.exact import milp_mlds

    assert milp_mlds(small).optimum_size == exact_mlds(small).optimum_size


coords = st.integers(min_value=0, max_value=40)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(coords, coords), min_size=3, max_size=16, unique=True))
def test_sweep_invariants_property(raw):
    g = build_udg(raw)
    try:
        sol, trace = bb_solve(g.points)
    except InfeasibleInstance:
        return
    assert max(trace.picks()) <= 11
    assert set().union(*(it.chosen for it in trace.iterations)) == set(sol)
