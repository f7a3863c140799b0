import functools
import itertools

import pytest

from mlds.geometry import Point, build_udg


def line(n, step=10):
    """n collinear points ``step`` tenths apart (a path when step <= 10)."""
    return build_udg([Point(i * step, 0) for i in range(n)])


def triangle():
    return build_udg([Point(0, 0), Point(10, 0), Point(5, 8)])


def brute_lds_ok(g, d, target=None):
    """The liar's conditions straight from the definition."""
    d = set(d)
    nbhd = [set(g.adjacency[v]) | {v} for v in range(g.n)]
    tgt = range(g.n) if target is None else sorted(set(target))
    if any(len(nbhd[v] & d) < 2 for v in tgt):
        return False
    return all(len((nbhd[u] | nbhd[v]) & d) >= 3 for u, v in itertools.combinations(tgt, 2))


def brute_min_lds(g, target=None):
    """Size-increasing lexicographic enumeration; None if no set works."""
    for size in range(g.n + 1):
        for cand in itertools.combinations(range(g.n), size):
            if brute_lds_ok(g, cand, target):
                return cand
    return None


@pytest.fixture
def p3():
    return line(3)


@pytest.fixture
def p5():
    return line(5)


@pytest.fixture
def k3():
    return triangle()


@functools.cache
def counterexample(k):
    """Built once per session; construction takes seconds for k >= 2."""
    from mlds.prior_art import build_counterexample

    return build_counterexample(k)


@functools.cache
def counterexample_optimum(k):
    from mlds.exact import milp_mlds

    return milp_mlds(build_udg(list(counterexample(k).points))).optimum_size
