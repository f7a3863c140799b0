import pytest

from mlds.errors import EmbeddingInvalid, StubPlacementFailed
from mlds.geometry import Point, build_udg
from mlds.reduction import (
    CORPUS,
    EmbeddedPlanarGraph,
    build_reduction,
    check_correspondence,
    load_corpus,
    min_vertex_cover,
    parse_embedding,
)

SINGLE_EDGE = "2 1\na 0 0\nb 4 0\na b 0 0 4 0\n"


def test_single_edge_has_twelve_points():
    inst = build_reduction(parse_embedding(SINGLE_EDGE))
    assert len(inst.points) == 12
    assert inst.indices("node") == [0, 1]
    joints = inst.segment_joints[0]
    assert [inst.points[j] for j in joints] == [Point(10, 0), Point(15, 0),
                                                Point(25, 0), Point(30, 0)]
    g = build_udg(list(inst.points))
    walk = [0, *joints, 1]
    for a, b in zip(walk, walk[1:]):
        assert b in g.adjacency[a]
    assert joints[1] not in g.adjacency[0]


def test_single_edge_rejected_by_correspondence():
    with pytest.raises(EmbeddingInvalid):
        check_correspondence(parse_embedding(SINGLE_EDGE))


def test_point_count_formula():
    emb = load_corpus("path2")
    inst = build_reduction(emb)
    assert (emb.n, emb.ell) == (3, 2)
    assert len(inst.points) == 4 * (emb.n + emb.ell)


def test_support_stub_takes_free_direction():
    inst = build_reduction(load_corpus("star3"))
    centre = inst.support_triples[0]
    assert centre[0] == 0
    # centre uses +x, -x and -y, so its stub goes up
    assert [inst.points[i] for i in centre[1:]] == [Point(40, 42), Point(40, 52), Point(40, 54)]


def test_vertex_cover():
    assert min_vertex_cover(3, [(0, 1), (1, 2)]) == (1,)
    assert len(min_vertex_cover(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == 2


@pytest.mark.parametrize("text, message", [
    ("2 1\na 0 0\nb 3 0\na b 0 0 3 0\n", "grid"),
    ("2 1\na 0 0\nb 4 4\na b 0 0 4 4\n", "axis-parallel"),
    ("2 0\na 0 0\nb 4 0\n", "no edges"),
    ("2 2\na 0 0\nb 4 0\na b 0 0 4 0\nb a 4 0 0 0\n", "parallel"),
    ("3 1\na 0 0\nb 4 0\na b 0 0 4 0\n", "malformed"),
    ("2 2\na 0 0\nb 4 0\na b 0 0 4 0\n", "promises 2 segments"),
])
def test_rejects_bad_embeddings(text, message):
    with pytest.raises(EmbeddingInvalid, match=message):
        parse_embedding(text)


def test_degree_four_rejected():
    positions = ((4, 4), (0, 4), (8, 4), (4, 0), (4, 8))
    edges = tuple((0, k, (positions[0], positions[k])) for k in range(1, 5))
    with pytest.raises(EmbeddingInvalid, match="degree"):
        EmbeddedPlanarGraph(("c", "l", "r", "d", "u"), positions, edges)


def test_stub_failure_is_reported(monkeypatch):
    import mlds.reduction as red

    monkeypatch.setattr(red, "STUB_DIRECTIONS", ((1, 0),))
    with pytest.raises(StubPlacementFailed):
        build_reduction(load_corpus("path2"))


@pytest.mark.parametrize("name, vc", [("path2", 1), ("star3", 1), ("cycle4", 2), ("bend2", 1)])
def test_corpus_correspondence(name, vc):
    c = check_correspondence(load_corpus(name))
    assert c.vc_opt == vc
    assert c.lds_opt == vc + c.k_offset


def test_corpus_names():
    assert set(CORPUS) == {"path2", "star3", "cycle4", "bend2"}
