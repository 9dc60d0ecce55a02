import os
from pathlib import Path

import pytest

import cliquedyn as cd

FIXTURES = Path(os.environ.get(
    "CLIQUEDYN_FIXTURES",
    Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


def test_generators():
    assert cd.hex_patch(2).order == 19
    assert cd.delta(3).order == 10
    t = cd.torus(4, 4)
    assert (t.order, t.size) == (16, 48)
    assert cd.local_hex_graph().order == 17
    assert cd.octahedron().max_degree() == 4


def test_graph_round_trip():
    g = cd.Graph(4, [(0, 1), (1, 2), (2, 3)], "path")
    h = cd.parse_json(cd.to_json(g))
    assert h.edges() == g.edges()
    assert cd.is_isomorphic(g, h)
    assert "graph" in cd.to_dot(g)
    with pytest.raises(cd.InputError):
        cd.Graph(2, [(0, 0)])


def test_cliques_and_iteration():
    assert len(cd.max_cliques(cd.octahedron())) == 8
    assert cd.clique_graph(cd.complete(5)).order == 1
    trace = cd.iterate(cd.torus(4, 4), 2)
    assert [s["vertices"] for s in trace["steps"]] == [16, 32, 48]
    assert trace["verdict"] == "diverging-evidence"


def test_decisions():
    assert cd.decide(cd.torus(5, 5))["verdict"] == "divergent"
    assert cd.decide(cd.icosahedron())["verdict"] == "unsupported"
    g = cd.read_graph(str(FIXTURES / "genus2.json"))
    d = cd.decide(g)
    assert d["verdict"] == "convergent"
    assert d["gates"][-1] == "6-regular: no"


def plane_triangles(m, r):
    """Size-m triangles, both orientations, inside the radius-r hex ball."""
    def inside(a, b):
        return max(abs(a), abs(b), abs(a + b)) <= r

    if m == 0:
        return sum(inside(a, b) for a in range(-r, r + 1)
                   for b in range(-r, r + 1))
    count = 0
    for a in range(-2 * r, 2 * r + 1):
        for b in range(-2 * r, 2 * r + 1):
            for sign in (1, -1):
                corners = [(a, b), (a + sign * m, b), (a, b + sign * m)]
                count += all(inside(x, y) for x, y in corners)
    return count


def test_geometry_and_covers():
    assert cd.geometric_level_counts(cd.hex_patch(3), 2) == {
        0: plane_triangles(0, 3), 2: plane_triangles(2, 3)}
    rep = cd.verify_equivalence(cd.hex_patch(8), 1)
    assert rep["ok"] and rep["interior_vertices"] > 0
    ball = cd.cover_ball(cd.torus(4, 4), 0, 4)
    assert ball["valid"]
    assert cd.is_isomorphic(ball["graph"], cd.hex_patch(4))
    with pytest.raises(cd.PreconditionError):
        cd.cover_ball(cd.complete(4), 0, 1)


def test_suites():
    for name in cd.suite_names():
        assert cd.run_suite(name, samples=10)["pass"], name
