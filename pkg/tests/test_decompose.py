"""Forest + nice-orientation decomposition of near-triangulations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atforest.decompose import (
    Decomposition,
    decompose,
    decompose_any_planar,
    verify_decomposition,
)
from atforest.errors import (
    Disconnected,
    HandleNotOnBoundary,
    NotNearTriangulation,
)
from atforest.graph import Orientation, build_plane_graph, edge
from atforest.testkit import plane_graph_from_triangles, random_near_triangulation


def triangle_plane():
    return plane_graph_from_triangles(
        ["x", "y", "z"], [("z", "x", "y")], ("x", "z", "y")
    )


def quad_with_chord():
    """4-cycle x-y-u-v with chord yv, outer walk designated as x,y,u,v."""
    pg = plane_graph_from_triangles(
        ["x", "y", "u", "v"],
        [("v", "x", "y"), ("y", "u", "v")],
        ("x", "v", "u", "y"),
    )
    return build_plane_graph(
        sorted(pg.graph.vertices), pg.graph.edges, pg.rotation, ["x", "y", "u", "v"]
    )


def wheel5():
    rim = [f"r{i}" for i in range(1, 6)]
    tris = [(rim[i], rim[(i + 1) % 5], "h") for i in range(5)]
    outer = (rim[0],) + tuple(reversed(rim[1:]))
    return plane_graph_from_triangles(rim + ["h"], tris, outer)


def test_base_case_triangle():
    d = decompose(triangle_plane(), ("x", "y"))
    assert d.forest == {edge("x", "y"), edge("y", "z")}
    assert d.orientation.arcs == {("z", "x")}
    assert verify_decomposition(triangle_plane(), d, "parity").verdict


def test_quadrilateral_chord_case_pinned_output():
    pg = quad_with_chord()
    d = decompose(pg, ("x", "y"))
    assert d.forest == {edge("x", "y"), edge("y", "v"), edge("u", "v")}
    assert d.orientation.arcs == {("v", "x"), ("u", "y")}
    report = verify_decomposition(pg, d, "parity")
    assert report.verdict and report.stats["even"] - report.stats["odd"] == 1


def test_wheel_decomposition_bounds_hub():
    pg = wheel5()
    d = decompose(pg, ("r1", "r2"))
    assert verify_decomposition(pg, d, "parity").verdict
    assert d.orientation.out_degrees()["h"] <= 2


def test_handle_must_be_boundary_edge():
    with pytest.raises(HandleNotOnBoundary):
        decompose(wheel5(), ("r1", "h"))


def test_non_triangulated_input_rejected():
    c4 = build_plane_graph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")],
        {"a": ("b", "d"), "b": ("c", "a"), "c": ("d", "b"), "d": ("a", "c")},
        ["a", "b", "c", "d"],
    )
    with pytest.raises(NotNearTriangulation):
        decompose(c4, ("a", "b"))


def test_verifier_rejects_tampered_output():
    pg = quad_with_chord()
    d = decompose(pg, ("x", "y"))
    # reverse the arc into the handle: out-degree at x becomes 1
    bad_arcs = {("u", "y"), ("x", "v")}
    bad = Decomposition(d.handle, d.forest, Orientation.build(pg.graph, bad_arcs), d.trace)
    report = verify_decomposition(pg, bad, "structural")
    assert not report.verdict and "handle" in report.detail
    # cycle in the claimed forest
    cyc = Decomposition(
        d.handle,
        frozenset({edge("x", "y"), edge("y", "v"), edge("x", "v")}),
        Orientation.build(pg.graph, [("u", "y"), ("u", "v")]),
        d.trace,
    )
    assert not verify_decomposition(pg, cyc, "structural").verdict


def test_decompose_deterministic():
    pg = random_near_triangulation(60, 8, 17)
    h = (pg.outer_face[0], pg.outer_face[1])
    d1, d2 = decompose(pg, h), decompose(pg, h)
    assert d1.forest == d2.forest and d1.orientation.arcs == d2.orientation.arcs


@settings(max_examples=25, deadline=None)
@given(
    st.integers(min_value=4, max_value=60),
    st.integers(min_value=3, max_value=10),
    st.integers(min_value=0, max_value=10**6),
)
def test_random_near_triangulations_verify(n, b, seed):
    if b > n:
        b = n
    pg = random_near_triangulation(n, b, seed)
    handle = (pg.outer_face[0], pg.outer_face[1])
    d = decompose(pg, handle)
    assert verify_decomposition(pg, d, "structural").verdict


def test_decomposition_json_round_trip():
    pg = random_near_triangulation(25, 6, 4)
    d = decompose(pg, (pg.outer_face[0], pg.outer_face[1]))
    back = Decomposition.from_json_dict(d.to_json_dict(), pg.graph)
    assert back.handle == d.handle
    assert back.forest == d.forest
    assert back.orientation.arcs == d.orientation.arcs


def test_any_planar_c4():
    c4 = build_plane_graph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")],
        {"a": ("b", "d"), "b": ("c", "a"), "c": ("d", "b"), "d": ("a", "c")},
        ["a", "b", "c", "d"],
    )
    forest, orientation = decompose_any_planar(c4)
    assert forest <= c4.graph.edges
    assert forest.isdisjoint(orientation.underlying_edges())
    assert forest | orientation.underlying_edges() == c4.graph.edges
    assert orientation.is_acyclic()
    assert all(v <= 2 for v in orientation.out_degrees().values())


def test_any_planar_tree_is_all_forest():
    tree = build_plane_graph(
        ["a", "b", "c"],
        [("a", "b"), ("b", "c")],
        {"a": ("b",), "b": ("a", "c"), "c": ("b",)},
        ["a", "b", "c", "b"],
    )
    forest, orientation = decompose_any_planar(tree)
    assert forest == tree.graph.edges and not orientation.arcs


def test_any_planar_rejects_disconnected():
    pg = build_plane_graph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("c", "d")],
        {"a": ("b",), "b": ("a",), "c": ("d",), "d": ("c",)},
        ["a", "b"],
    )
    with pytest.raises(Disconnected):
        decompose_any_planar(pg)


def test_any_planar_on_near_triangulation():
    pg = random_near_triangulation(20, 5, 9)
    forest, orientation = decompose_any_planar(pg)
    assert forest | orientation.underlying_edges() == pg.graph.edges
    assert orientation.is_acyclic()
    assert all(v <= 2 for v in orientation.out_degrees().values())
