"""The earlier left-to-right sweep for liar's domination, and inputs on which
its approximation ratio is large.

Each iteration takes the leftmost remaining point ``p`` and looks at the
remaining points within 1/2, 1 and 3/2 of it.  Points in the ring (1, 3/2]
are thinned to a mutually independent set ``Q``; for each ``q`` in ``Q`` up
to two points of ``Cov_1/2(p)`` within 1 of ``q`` are chosen (Case 1).  If
those sets supply fewer than two points the sweep instead picks at most four
points of ``Cov_1(p)`` (Case 2).  Then ``Cov_1/2(p)`` is deleted.

``build_counterexample`` places gadgets that each make one iteration take
11 points, groups them under red triples that liar-dominate their half
disks, and pads the instance with points that a small witness set already
covers three times, so the optimum stays small while the sweep keeps paying.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .domination import check_lds, check_lds_of, lds_feasible
from .errors import ConstructionFailed, InfeasibleInstance
from .geometry import Point, UnitDiskGraph, VertexSet, build_udg, within

HALF, ONE, THREE_HALVES = 5, 10, 15  # radii in tenths


@dataclass(frozen=True)
class BBPolicy:
    """Every choice the published description leaves open."""

    picks_per_q: int = 2
    case2_cap: int = 4
    # count dominators chosen in earlier iterations when topping up Case 2
    case2_counts_earlier: bool = True


@dataclass(frozen=True)
class SweepIteration:
    leftmost: int
    q_set: VertexSet
    chosen: VertexSet  # points first added in this iteration, p included
    case: str  # "case1" or "case2"
    removed: VertexSet


@dataclass
class SweepTrace:
    iterations: list[SweepIteration] = field(default_factory=list)

    def picks(self) -> list[int]:
        return [len(it.chosen) for it in self.iterations]


def _leftmost(points: Sequence[Point], alive: set[int]) -> int:
    return min(alive, key=lambda i: (points[i].x, points[i].y, i))


def _cov(points: Sequence[Point], centre: int, alive: set[int], radius: int) -> list[int]:
    c = points[centre]
    return sorted(i for i in alive if within(c, points[i], radius))


def bb_solve(points: Sequence[Point], policy: BBPolicy | None = None,
             graph: UnitDiskGraph | None = None) -> tuple[VertexSet, SweepTrace]:
    policy = policy or BBPolicy()
    pts = list(points)
    g = graph or build_udg(pts)
    if not lds_feasible(g):
        raise InfeasibleInstance("point set has a component with fewer than 3 points")
    alive = set(range(len(pts)))
    solution: set[int] = set()
    trace = SweepTrace()
    while alive:
        p = _leftmost(pts, alive)
        before = set(solution)
        solution.add(p)
        half = _cov(pts, p, alive, HALF)
        one = set(_cov(pts, p, alive, ONE))
        ring = [i for i in _cov(pts, p, alive, THREE_HALVES) if i not in one]
        ring.sort(key=lambda i: (pts[i].x, pts[i].y, i))
        q_set: list[int] = []
        for i in ring:
            if all(not within(pts[i], pts[j], ONE) for j in q_set):
                q_set.append(i)
        s_union: set[int] = set()
        for q in q_set:
            s_q = [i for i in half if within(pts[q], pts[i], ONE)]
            s_union.update(s_q)
            solution.update(s_q[:policy.picks_per_q])
        case = "case1"
        if len(s_union) < 2:
            case = "case2"
            _case2(pts, p, half, sorted(one), solution, before, policy)
        removed = tuple(half)
        alive.difference_update(half)
        chosen = tuple(sorted(solution - before))
        trace.iterations.append(SweepIteration(p, tuple(q_set), chosen, case, removed))
    return tuple(sorted(solution)), trace


def _case2(pts: list[Point], p: int, half: list[int], one: list[int],
           solution: set[int], before: set[int], policy: BBPolicy) -> None:
    """Lowest-index points of Cov_1(p) until Cov_1/2(p) is double dominated,
    with at most ``case2_cap`` points taken in this iteration."""
    counted = solution if policy.case2_counts_earlier else solution - before

    def deficient() -> list[int]:
        return [h for h in half
                if sum(1 for d in counted if within(pts[h], pts[d], ONE)) < 2]

    for cand in one:
        # re-read after each addition: counted aliases solution
        need = deficient()
        if not need or len(solution - before) >= policy.case2_cap:
            return
        if cand in solution:
            continue
        if any(within(pts[h], pts[cand], ONE) for h in need):
            solution.add(cand)
            counted = solution if policy.case2_counts_earlier else solution - before


# ----------------------------------------------------------------------
# counterexample family
# ----------------------------------------------------------------------

# q offsets from p, in tenths.  On the tenths lattice this is the only set
# of five independent ring points (up to the choice of lens points) where
# each q owns two half-disk lattice points that no other q can see.
GADGET_Q = ((1, -13), (11, -9), (14, 1), (10, 11), (0, 14))
# a second gadget this far from the first can share the first's red triple
PAIR_OFFSET = (7, -4)
# first gadget positions, picked by an offline search over placements that
# pass gadget_violations (the fourth makes the ratio keep growing); they are
# re-verified on every build
PLACEMENTS = ((0, 0), (7, -4), (12, 9), (17, 25))
FILL_STEP = 2  # filler lattice spacing, tenths
FILL_MARGIN = 10
PLACEMENT_REACH = 30


@dataclass(frozen=True)
class Gadget:
    p: Point
    qs: tuple[Point, ...]
    lens: tuple[Point, ...]  # two per q, in q order

    @property
    def cluster(self) -> tuple[Point, ...]:
        return (self.p, *self.lens)


@dataclass(frozen=True)
class Counterexample:
    points: tuple[Point, ...]
    gadgets: tuple[Gadget, ...]
    # red triples as point indices; triple_of[i] is the triple serving gadget i
    red_triples: tuple[tuple[int, int, int], ...]
    triple_of: tuple[int, ...]
    # an LDS of the instance, so the optimum is at most len(witness)
    witness: VertexSet
    bb_solution: VertexSet
    # whether the sweep's own output is a liar's dominating set; a False here
    # is a finding about the sweep, not a construction failure
    bb_valid: bool


def _d2(a: Point, b: Point) -> int:
    return (a.x - b.x) ** 2 + (a.y - b.y) ** 2


def _lex_after(a: Point, p: Point) -> bool:
    return (a.x, a.y) > (p.x, p.y)


def _half_lattice(p: Point) -> list[Point]:
    """Lattice points within 1/2 of ``p`` that do not displace it as leftmost."""
    return [Point(x, y) for x in range(p.x, p.x + HALF + 1)
            for y in range(p.y - HALF, p.y + HALF + 1)
            if _d2(Point(x, y), p) <= HALF * HALF and _lex_after(Point(x, y), p)]


def make_gadget(p: Point) -> Gadget:
    qs = tuple(Point(p.x + dx, p.y + dy) for dx, dy in GADGET_Q)
    half = _half_lattice(p)
    lens: list[Point] = []
    for q in qs:
        own = [h for h in half if _d2(h, q) <= ONE * ONE
               and all(_d2(h, o) > ONE * ONE for o in qs if o != q)]
        own.sort(key=lambda h: (_d2(h, q), h))
        if len(own) < 2:
            raise ConstructionFailed(f"q {q} owns fewer than two lens points")
        lens.extend(own[:2])
    return Gadget(p, qs, tuple(lens))


def _gadget_points(gadgets: Sequence[Gadget]) -> list[Point]:
    # clusters first so case 1 picks the lens points by lowest index
    return [*(c for g in gadgets for c in g.cluster), *(q for g in gadgets for q in g.qs)]


def _sweep(points: Sequence[Point]) -> tuple[UnitDiskGraph, VertexSet, SweepTrace]:
    g = build_udg(points)
    sol, trace = bb_solve(points, graph=g)
    return g, sol, trace


def _iterations_at(points, trace: SweepTrace, gadgets: Sequence[Gadget]):
    """The iteration started at each gadget's p, or None if one is missing."""
    by_p = {points[it.leftmost]: it for it in trace.iterations}
    its = [by_p.get(g.p) for g in gadgets]
    return None if any(it is None for it in its) else its


def gadget_violations(points: Sequence[Point], gadgets: Sequence[Gadget],
                      red_triples: Sequence[Sequence[int]] = (),
                      triple_of: Sequence[int] = (), *,
                      sweep: tuple[UnitDiskGraph, VertexSet, SweepTrace] | None = None
                      ) -> list[str]:
    """Every way the instance falls short of the construction (empty if none).

    Checked against the actual sweep: each gadget's p starts a Case 1
    iteration whose Q is exactly its five q's, all in the (1, 3/2] ring and
    pairwise more than 1 apart, each seeing exactly two points of the half
    disk removed in that iteration; the iteration picks 11 points; and the
    serving red triple liar-dominates that removed half disk.  ``sweep`` is
    an already computed ``(graph, solution, trace)`` for ``points``.
    """
    problems = []
    if len(set(points)) != len(points):
        problems.append("instance has coincident points")
    g, _, trace = sweep or _sweep(points)
    its = _iterations_at(points, trace, gadgets)
    if its is None:
        return problems + ["some gadget's p never starts an iteration"]
    index = {pt: i for i, pt in enumerate(points)}
    for k, (gad, it) in enumerate(zip(gadgets, its)):
        qs = [index.get(q) for q in gad.qs]
        if None in qs:
            problems.append(f"gadget {k}: a q point is missing")
            continue
        for q in gad.qs:
            if not ONE * ONE < _d2(q, gad.p) <= THREE_HALVES * THREE_HALVES:
                problems.append(f"gadget {k}: q {q} outside the (1, 3/2] ring")
        for a, b in itertools.combinations(gad.qs, 2):
            if _d2(a, b) <= ONE * ONE:
                problems.append(f"gadget {k}: q points {a} and {b} are adjacent")
        if set(it.q_set) != set(qs):
            problems.append(f"gadget {k}: sweep chose Q {it.q_set}, not the five q's")
        for q in qs:
            s_q = [h for h in it.removed if h in g.adjacency[q]]
            if len(s_q) != 2:
                problems.append(f"gadget {k}: |S(q)| = {len(s_q)} for q {points[q]}")
        if it.case != "case1" or len(it.chosen) != 11:
            problems.append(f"gadget {k}: iteration picked {len(it.chosen)} in {it.case}")
        if triple_of:
            red = red_triples[triple_of[k]]
            if not check_lds_of(g, red, it.removed):
                problems.append(f"gadget {k}: red triple {red} misses its half disk")
    return problems


def _fits(gadgets: list[Gadget]) -> bool:
    pts = _gadget_points(gadgets)
    return len(set(pts)) == len(pts) and not gadget_violations(pts, gadgets)


def _partner(p: Point) -> Point:
    return Point(p.x + PAIR_OFFSET[0], p.y + PAIR_OFFSET[1])


def _place_gadgets(k: int) -> list[Gadget]:
    """``PLACEMENTS`` first; after that a group leader's partner, or the
    nearest lattice point past the previous gadget where a new one fits."""
    gadgets: list[Gadget] = []
    for x, y in PLACEMENTS[:k]:
        gadgets.append(make_gadget(Point(x, y)))
        if not _fits(gadgets):
            raise ConstructionFailed(f"listed placement ({x}, {y}) does not fit")
    while len(gadgets) < k:
        last = gadgets[-1].p
        tries = [_partner(last)] if len(_groups(gadgets)[-1]) == 1 else []
        ring = [Point(x, y) for x in range(last.x, last.x + PLACEMENT_REACH)
                for y in range(last.y - PLACEMENT_REACH, last.y + PLACEMENT_REACH + 1)
                if _d2(Point(x, y), last) > HALF * HALF and _lex_after(Point(x, y), last)]
        ring.sort(key=lambda c: (_d2(c, last), c))
        for cand in tries + ring:
            trial = gadgets + [make_gadget(cand)]
            if _fits(trial):
                gadgets = trial
                break
        else:  # pragma: no cover - the search window always has room
            raise ConstructionFailed(f"no room for gadget {len(gadgets) + 1}")
    return gadgets


def _groups(gadgets: Sequence[Gadget]) -> list[list[int]]:
    """Gadget index groups sharing one red triple: partner pairs, else singles."""
    groups: list[list[int]] = []
    i = 0
    while i < len(gadgets):
        a = gadgets[i].p
        if i + 1 < len(gadgets) and gadgets[i + 1].p == Point(a.x + PAIR_OFFSET[0],
                                                              a.y + PAIR_OFFSET[1]):
            groups.append([i, i + 1])
            i += 2
        else:
            groups.append([i])
            i += 1
    return groups


def _choose_triples(gadgets: Sequence[Gadget]) -> tuple[list[Point], list[int]]:
    """First lattice triple inside each group's leading half disk such that
    the construction, reds included, still verifies."""
    base = _gadget_points(gadgets)
    groups = _groups(gadgets)
    reds: list[Point] = []
    triple_of = [0] * len(gadgets)
    for t, group in enumerate(groups):
        for i in group:
            triple_of[i] = t
        served = [i for grp in groups[:t + 1] for i in grp]
        triples = [tuple(range(len(base) + 3 * j, len(base) + 3 * j + 3)) for j in range(t + 1)]
        cands = [h for h in _half_lattice(gadgets[group[0]].p) if h not in set(base + reds)]
        for tri in itertools.combinations(cands, 3):
            trial = base + reds + list(tri)
            if _triples_ok(trial, gadgets, served, triples, triple_of):
                reds.extend(tri)
                break
        else:
            raise ConstructionFailed(f"no red triple for gadgets {group}")
    return reds, triple_of


def _triples_ok(points, gadgets, served, triples, triple_of) -> bool:
    sweep = _sweep(points)
    if gadget_violations(points, gadgets, sweep=sweep):
        return False
    g, _, trace = sweep
    its = _iterations_at(points, trace, gadgets)
    return all(check_lds_of(g, triples[triple_of[i]], its[i].removed) for i in served)


def _pruned_witness(g: UnitDiskGraph) -> VertexSet:
    from .approx import approx_lds

    d = set(approx_lds(g))
    for v in sorted(d, reverse=True):
        if check_lds(g, d - {v}).valid:
            d.discard(v)
    return tuple(sorted(d))


def build_counterexample(k_gadgets: int) -> Counterexample:
    """The counterexample with ``k_gadgets`` gadgets, verified before return."""
    if k_gadgets < 1:
        raise ValueError("k_gadgets must be at least 1")
    gadgets = _place_gadgets(k_gadgets)
    reds, triple_of = _choose_triples(gadgets)
    points = _gadget_points(gadgets) + reds
    n_base = len(points) - len(reds)
    triples = [tuple(range(n_base + 3 * j, n_base + 3 * j + 3)) for j in range(len(reds) // 3)]
    wit_pts = [points[i] for i in _pruned_witness(build_udg(points))]

    xs = [p.x for p in points]
    ys = [p.y for p in points]
    present = set(points)
    size = len(bb_solve(points)[0])
    for x in range(min(xs) - FILL_MARGIN, max(xs) + FILL_MARGIN + 1, FILL_STEP):
        for y in range(min(ys) - FILL_MARGIN, max(ys) + FILL_MARGIN + 1, FILL_STEP):
            c = Point(x, y)
            if c in present or sum(_d2(c, w) <= ONE * ONE for w in wit_pts) < 3:
                continue
            trial = points + [c]
            sweep = _sweep(trial)
            if gadget_violations(trial, gadgets, triples, triple_of, sweep=sweep):
                continue
            trial_size = len(sweep[1])
            if trial_size >= size:
                points, size = trial, trial_size
                present.add(c)

    index = {p: i for i, p in enumerate(points)}
    witness = tuple(sorted(index[w] for w in wit_pts))
    sweep = _sweep(points)
    g, bb_sol, _ = sweep
    problems = gadget_violations(points, gadgets, triples, triple_of, sweep=sweep)
    if not check_lds(g, witness).valid:
        problems.append("witness set is not a liar's dominating set")
    if problems:
        raise ConstructionFailed("; ".join(problems))
    return Counterexample(tuple(points), tuple(gadgets), tuple(triples),
                          tuple(triple_of), witness, bb_sol, check_lds(g, bb_sol).valid)


def gen_counterexample(k_gadgets: int) -> list[Point]:
    return list(build_counterexample(k_gadgets).points)
