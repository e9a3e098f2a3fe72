"""Forest + nice-orientation decompositions of plane near-triangulations.

Given a near-triangulation and a boundary handle edge xy, produce a forest
F containing xy and an orientation D of the remaining edges with
out-degree 0 at x and y, at most 1 on the boundary, and at most 2 in the
interior.  D is acyclic, so the even/odd Eulerian sub-digraph difference
is 1 and the remaining graph has Alon-Tarsi number at most 3.

The recursion: a boundary chord splits the instance in two (the chord
serves as the second instance's handle and is deleted from its forest
before the union); with no chord, the ear vertex z next to x is removed,
edge zw joins the forest, and arcs z->x plus u->z for the interior path
vertices u extend the orientation.  A triangle is the base case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CAPS, Caps
from .errors import (
    Disconnected,
    HandleNotOnBoundary,
    InvalidEmbedding,
    NotNearTriangulation,
)
from .graph import (
    Graph,
    Orientation,
    PlaneGraph,
    _canonical_outer,
    build_plane_graph,
    edge,
    graph_to_json_dict,
    trace_faces,
    validate_near_triangulation,
)
from .report import VerificationReport


@dataclass
class Decomposition:
    handle: tuple  # ordered (x, y)
    forest: frozenset  # frozenset[Edge]
    orientation: Orientation
    trace: dict  # nested case tags: base | chord | ear

    def to_json_dict(self) -> dict:
        return {
            "handle": list(self.handle),
            "forest": [list(e) for e in sorted(self.forest)],
            "arcs": [list(a) for a in sorted(self.orientation.arcs)],
            "trace": self.trace,
        }

    @staticmethod
    def from_json_dict(data: dict, host: Graph) -> "Decomposition":
        forest = frozenset(edge(u, v) for u, v in data["forest"])
        arcs = Orientation.build(host, [tuple(a) for a in data["arcs"]])
        return Decomposition(tuple(data["handle"]), forest, arcs, data.get("trace", {}))


def _interior_triangles(pg: PlaneGraph) -> list:
    outer = _canonical_outer(pg)
    return [f for f in trace_faces(pg) if f != outer]


def decompose(pg: PlaneGraph, handle: tuple, caps: Caps = DEFAULT_CAPS) -> Decomposition:
    rep = validate_near_triangulation(pg)
    if not rep.verdict:
        raise NotNearTriangulation(rep.detail)
    x0, y0 = handle
    cycle0 = list(pg.outer_face)
    boundary_edges = {
        edge(cycle0[i], cycle0[(i + 1) % len(cycle0)]) for i in range(len(cycle0))
    }
    if edge(x0, y0) not in boundary_edges:
        raise HandleNotOnBoundary(f"{handle} is not a boundary edge")

    tris = [tuple(sorted(t)) for t in _interior_triangles(pg)]
    tri_edges = [
        {edge(t[0], t[1]), edge(t[0], t[2]), edge(t[1], t[2])} for t in tris
    ]
    edge_tris: dict = {}
    vert_tris: dict = {}
    for i, t in enumerate(tris):
        for e in tri_edges[i]:
            edge_tris.setdefault(e, []).append(i)
        for v in t:
            vert_tris.setdefault(v, []).append(i)
    adj = pg.graph.adjacency

    forest: set = set()
    arcs: list = []
    root_trace: dict = {}

    # frame: (triangle id set, vertex set, boundary cycle list, handle,
    #         drop_handle_from_forest, trace node)
    stack = [
        (
            frozenset(range(len(tris))),
            set(pg.graph.vertices),
            cycle0,
            (x0, y0),
            False,
            root_trace,
        )
    ]

    while stack:
        tri_ids, vset, cycle, (x, y), drop, node = stack.pop()

        if len(vset) == 3:
            t = next(v for v in cycle if v not in (x, y))
            node["case"] = "base"
            node["triangle"] = sorted(vset)
            if not drop:
                forest.add(edge(x, y))
            forest.add(edge(y, t))
            arcs.append((t, x))
            continue

        chord = _chord(adj, vset, cycle)
        if chord is not None:
            u, v = chord
            i, j = cycle.index(u), cycle.index(v)
            if i > j:
                i, j = j, i
                u, v = v, u
            path_a = cycle[i : j + 1]          # u .. v in cycle order
            path_b = cycle[j:] + cycle[: i + 1]  # v .. u in cycle order
            handle_on_a = _has_boundary_edge(path_a, x, y)

            side_a_tris = _flood_side(tri_ids, edge_tris, tri_edges, path_a, chord)
            side_b_tris = tri_ids - side_a_tris
            verts_a = {w for i2 in side_a_tris for w in tris[i2]}
            verts_b = {w for i2 in side_b_tris for w in tris[i2]}

            node["case"] = "chord"
            node["chord"] = [chord[0], chord[1]]
            child_handle: dict = {}
            child_other: dict = {}
            node["children"] = [child_handle, child_other]

            if handle_on_a:
                hside = (side_a_tris, verts_a, path_a, (x, y), drop, child_handle)
                oside = (
                    side_b_tris,
                    verts_b,
                    path_b,
                    (path_b[0], path_b[-1]),
                    True,
                    child_other,
                )
            else:
                hside = (side_b_tris, verts_b, path_b, (x, y), drop, child_handle)
                oside = (
                    side_a_tris,
                    verts_a,
                    path_a,
                    (path_a[0], path_a[-1]),
                    True,
                    child_other,
                )
            stack.append(oside)
            stack.append(hside)
            continue

        # ear case: remove z, the boundary neighbor of x other than y
        k = len(cycle)
        ix = cycle.index(x)
        forward = cycle[(ix + 1) % k] != y  # direction away from y
        step = 1 if forward else -1
        z = cycle[(ix + step) % k]
        w = cycle[(ix + 2 * step) % k]
        link = _link_path(tri_ids, vert_tris, tri_edges, tris, z, x, w)

        node["case"] = "ear"
        node["vertex"] = z
        child: dict = {}
        node["child"] = child

        forest.add(edge(z, w))
        arcs.append((z, x))
        for u2 in link[1:-1]:
            arcs.append((u2, z))

        new_tris = tri_ids - {i2 for i2 in vert_tris[z] if i2 in tri_ids}
        new_vset = vset - {z}
        iz = cycle.index(z)
        inner = link[1:-1] if forward else list(reversed(link[1:-1]))
        new_cycle = cycle[:iz] + inner + cycle[iz + 1 :]
        stack.append((new_tris, new_vset, new_cycle, (x, y), drop, child))

    orientation = Orientation.build(pg.graph, arcs)
    return Decomposition((x0, y0), frozenset(forest), orientation, root_trace)


def _has_boundary_edge(path: list, x: str, y: str) -> bool:
    for i in range(len(path) - 1):
        if {path[i], path[i + 1]} == {x, y}:
            return True
    return False


def _chord(adj: dict, vset: set, cycle: list) -> tuple:
    on_cycle = set(cycle)
    k = len(cycle)
    boundary = {edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    best = None
    for u in cycle:
        for v in adj[u]:
            if v in on_cycle and v in vset:
                e = edge(u, v)
                if e not in boundary and (best is None or e < best):
                    best = e
    return best


def _flood_side(tri_ids, edge_tris, tri_edges, path_a, chord) -> frozenset:
    """Triangles on the side of the chord whose boundary includes path_a."""
    first = edge(path_a[0], path_a[1])
    seeds = [i for i in edge_tris.get(first, []) if i in tri_ids]
    if len(seeds) != 1:
        raise InvalidEmbedding(f"boundary edge {first} not on exactly one triangle")
    side = {seeds[0]}
    frontier = [seeds[0]]
    while frontier:
        t = frontier.pop()
        for e in tri_edges[t]:
            if e == chord:
                continue
            for t2 in edge_tris[e]:
                if t2 in tri_ids and t2 not in side:
                    side.add(t2)
                    frontier.append(t2)
    return frozenset(side)


def _link_path(tri_ids, vert_tris, tri_edges, tris, z, x, w) -> list:
    """Neighbors of z within the sub-triangulation, ordered as the path
    from x to w along the fan of triangles at z."""
    nbr_edges: dict = {}
    for i in vert_tris[z]:
        if i not in tri_ids:
            continue
        others = [v for v in tris[i] if v != z]
        a, b = others
        nbr_edges.setdefault(a, []).append(b)
        nbr_edges.setdefault(b, []).append(a)
    path = [x]
    prev = None
    cur = x
    while cur != w:
        nxt = [v for v in nbr_edges.get(cur, []) if v != prev]
        if len(nxt) != 1:
            raise InvalidEmbedding(f"link of {z!r} is not a path at {cur!r}")
        prev, cur = cur, nxt[0]
        path.append(cur)
    if len(path) - 1 < 2:
        raise InvalidEmbedding(f"ear path at {z!r} shorter than two edges")
    return path


def verify_decomposition(
    pg: PlaneGraph, d: Decomposition, mode: str = "structural", caps: Caps = DEFAULT_CAPS
) -> VerificationReport:
    """Check the nice-orientation conditions; in parity mode also brute-force
    the even/odd Eulerian sub-digraph difference (must be 1)."""
    from .alon_tarsi import eulerian_diff

    g = pg.graph
    x, y = d.handle
    arcs = d.orientation.arcs
    arc_edges = {edge(t, h) for t, h in arcs}
    stats = {"forest_edges": len(d.forest), "arcs": len(arcs)}

    if d.forest | arc_edges != g.edges or d.forest & arc_edges:
        return VerificationReport(
            False, "forest and arcs do not partition the edge set", stats=stats
        )
    if edge(x, y) not in d.forest:
        return VerificationReport(False, "handle missing from forest", stats=stats)
    if not _is_forest(d.forest):
        return VerificationReport(False, "forest contains a cycle", stats=stats)

    boundary = set(_canonical_outer(pg))
    out = d.orientation.out_degrees()
    if out[x] != 0 or out[y] != 0:
        return VerificationReport(
            False, "out-degree at handle", counterexample={"x": out[x], "y": out[y]}, stats=stats
        )
    for v in g.vertices:
        bound = 1 if v in boundary else 2
        if v in (x, y):
            bound = 0
        if out[v] > bound:
            return VerificationReport(
                False,
                f"out-degree {out[v]} exceeds bound {bound}",
                counterexample=v,
                stats=stats,
            )
    if not d.orientation.is_acyclic():
        return VerificationReport(False, "orientation has a directed cycle", stats=stats)

    if mode == "parity":
        pc = eulerian_diff(d.orientation, caps)
        stats["even"] = pc.even_count
        stats["odd"] = pc.odd_count
        if pc.diff != 1:
            return VerificationReport(False, f"parity difference {pc.diff} != 1", stats=stats)
        return VerificationReport(True, "structural and parity checks hold", stats=stats)
    if mode != "structural":
        raise ValueError(f"unknown mode {mode!r}")
    return VerificationReport(True, "structural checks hold", stats=stats)


def _is_forest(edges) -> bool:
    parent: dict = {}

    def find(v):
        root = v
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(v, v) != v:
            parent[v], v = root, parent[v]
        return root

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# ---------------------------------------------------------------------------
# general plane graphs: augment, decompose, restrict

def decompose_any_planar(pg: PlaneGraph, caps: Caps = DEFAULT_CAPS) -> tuple:
    """Forest F within E(G) and an acyclic orientation of G - E(F) with max
    out-degree at most 2, for any connected plane graph.

    The input is augmented with chords until every face is a triangle, the
    near-triangulation is decomposed, and the result is restricted to the
    original edges.  Sub-orientations of acyclic orientations stay acyclic,
    so the restricted certificate still witnesses Alon-Tarsi number <= 3.
    """
    g = pg.graph
    if len(g.connected_components()) != 1:
        raise Disconnected("decompose components separately")
    if _is_forest(g.edges):
        return frozenset(g.edges), Orientation.build(g, [])

    aug = _triangulate_embedding(pg)
    cycle = list(_canonical_outer(aug))
    handle = min(
        (edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
    )
    d = decompose(aug, handle, caps)
    forest = frozenset(e for e in d.forest if e in g.edges)
    arcs = [(t, h) for t, h in sorted(d.orientation.arcs) if edge(t, h) in g.edges]
    return forest, Orientation.build(g, arcs)


def _triangulate_embedding(pg: PlaneGraph) -> PlaneGraph:
    """Add chords until every face (outer included) is a triangle, then
    re-designate one face as the boundary."""
    rotation = {v: list(nbrs) for v, nbrs in pg.rotation.items()}
    edges = set(pg.graph.edges)
    faces = [list(f) for f in trace_faces(pg)]

    def insert_after(v: str, anchor: str, new: str) -> None:
        rotation[v].insert(rotation[v].index(anchor) + 1, new)

    pending = [f for f in faces if len(f) > 3]
    done = [f for f in faces if len(f) <= 3]
    guard = 0
    while pending:
        guard += 1
        if guard > 10 * (len(edges) + len(pg.graph.vertices)) + 100:
            raise InvalidEmbedding("face triangulation did not converge")
        walk = pending.pop()
        k = len(walk)
        pick = None
        # prefer a triangle-splitting chord two steps apart
        for i in range(k):
            a, c = walk[i], walk[(i + 2) % k]
            if a != c and edge(a, c) not in edges:
                pick = (i, (i + 2) % k)
                break
        if pick is None:
            for i in range(k):
                for j in range(i + 2, k):
                    if (j + 1) % k == i or i == j:
                        continue
                    a, c = walk[i], walk[j]
                    if a != c and edge(a, c) not in edges:
                        pick = (i, j)
                        break
                if pick is not None:
                    break
        if pick is None:
            raise InvalidEmbedding(f"cannot triangulate face {walk}")
        i, j = pick
        a, c = walk[i], walk[j]
        insert_after(a, walk[i - 1], c)
        insert_after(c, walk[j - 1], a)
        edges.add(edge(a, c))
        walk1 = walk[i : j + 1] if i < j else walk[i:] + walk[: j + 1]
        walk2 = walk[j:] + walk[: i + 1] if i < j else walk[j : i + 1]
        for piece in (walk1, walk2):
            (pending if len(piece) > 3 else done).append(piece)

    rot = {v: tuple(nbrs) for v, nbrs in rotation.items()}
    outer = tuple((done + pending)[0]) if done else tuple(faces[0])
    # length-2 walks (bridges) cannot appear: the graph contains a cycle
    # and triangulation only shortens walks to length 3
    for piece in done:
        if len(piece) != 3:
            raise InvalidEmbedding(f"face {piece} not a triangle after augmentation")
    return build_plane_graph(pg.graph.vertices, edges, rot, outer)
