"""Simple graphs, plane embeddings via rotation systems, and orientations.

Vertices are opaque strings ordered lexicographically; this order is also
the variable order of the graph polynomial.  Edges are stored as sorted
pairs.  Rotation systems list, for each vertex, the cyclic order of its
neighbors; faces are recovered by the next-edge traversal rule.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import (
    DuplicateEdge,
    EulerViolation,
    NotNearTriangulation,
    RotationMismatch,
    UnknownVertex,
)
from .report import VerificationReport

Edge = tuple[str, str]
Arc = tuple[str, str]


def edge(u: str, v: str) -> Edge:
    """Normalize an unordered pair to a sorted tuple."""
    if u == v:
        raise DuplicateEdge(f"loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset  # frozenset[Edge]

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        vs = tuple(sorted(vertices))
        if len(vs) != len(set(vs)):
            raise DuplicateEdge("duplicate vertex identifiers")
        vset = set(vs)
        es = set()
        for u, v in edges:
            e = edge(u, v)
            if e[0] not in vset or e[1] not in vset:
                raise UnknownVertex(f"edge {e} has an unlisted endpoint")
            if e in es:
                raise DuplicateEdge(f"edge {e} listed twice")
            es.add(e)
        return Graph(vs, frozenset(es))

    @cached_property
    def adjacency(self) -> dict:
        adj: dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: str, v: str) -> bool:
        return edge(u, v) in self.edges

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def subgraph_without_edges(self, removed: Iterable[tuple[str, str]]) -> "Graph":
        gone = {edge(u, v) for u, v in removed}
        return Graph(self.vertices, self.edges - gone)

    def connected_components(self) -> list:
        seen: set = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps


@dataclass(frozen=True)
class Orientation:
    """A directed assignment on a subset of the host's edges."""

    host: Graph
    arcs: frozenset  # frozenset[Arc], each (tail, head)

    @staticmethod
    def build(host: Graph, arcs: Iterable[tuple[str, str]]) -> "Orientation":
        seen_edges = set()
        out = set()
        for t, h in arcs:
            e = edge(t, h)
            if e not in host.edges:
                raise UnknownVertex(f"arc {(t, h)} is not over a host edge")
            if e in seen_edges:
                raise DuplicateEdge(f"two arcs on edge {e}")
            seen_edges.add(e)
            out.add((t, h))
        return Orientation(host, frozenset(out))

    def out_degrees(self) -> dict:
        d = {v: 0 for v in self.host.vertices}
        for t, _ in self.arcs:
            d[t] += 1
        return d

    def underlying_edges(self) -> frozenset:
        return frozenset(edge(t, h) for t, h in self.arcs)

    def is_acyclic(self) -> bool:
        succ: dict[str, list] = {}
        indeg: dict[str, int] = {}
        for t, h in self.arcs:
            succ.setdefault(t, []).append(h)
            indeg[h] = indeg.get(h, 0) + 1
            indeg.setdefault(t, indeg.get(t, 0))
        queue = [v for v in indeg if indeg[v] == 0]
        done = 0
        while queue:
            v = queue.pop()
            done += 1
            for w in succ.get(v, ()):
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return done == len(indeg)


@dataclass
class PlaneGraph:
    graph: Graph
    rotation: dict  # vertex -> tuple of neighbors in cyclic order
    outer_face: tuple  # closed boundary walk, first vertex not repeated
    faces: tuple = field(default=())  # filled by build_plane_graph

    @property
    def boundary_vertices(self) -> set:
        return set(self.outer_face)

    def boundary_edges(self) -> set:
        w = self.outer_face
        return {edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w))}

    def interior_faces(self) -> list:
        return [f for f in self.faces if f is not self.outer_face]


def _trace_all_faces(graph: Graph, rotation: dict) -> list:
    """Return the facial walks of the embedding, one per dart cycle.

    The next dart after (u, v) is (v, w) where w follows u in the
    rotation at v.
    """
    succ_index = {}
    for v, nbrs in rotation.items():
        for i, u in enumerate(nbrs):
            succ_index[(v, u)] = nbrs[(i + 1) % len(nbrs)]
    darts = set()
    for u, v in graph.edges:
        darts.add((u, v))
        darts.add((v, u))
    faces = []
    remaining = set(darts)
    while remaining:
        start = min(remaining)
        walk = []
        d = start
        while True:
            walk.append(d[0])
            remaining.discard(d)
            d = (d[1], succ_index[(d[1], d[0])])
            if d == start:
                break
            if d not in remaining:
                raise EulerViolation("face trace revisits a consumed dart")
        faces.append(tuple(walk))
    return faces


def _walk_darts(walk: tuple) -> set:
    k = len(walk)
    return {(walk[i], walk[(i + 1) % k]) for i in range(k)}


def build_plane_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str]],
    rotation: dict,
    outer_face: Iterable[str],
) -> PlaneGraph:
    g = Graph.build(vertices, edges)
    rot = {v: tuple(nbrs) for v, nbrs in rotation.items()}
    if set(rot) != set(g.vertices):
        raise RotationMismatch("rotation must cover exactly the vertex set")
    for v, nbrs in rot.items():
        if sorted(nbrs) != sorted(g.adjacency[v]):
            raise RotationMismatch(f"rotation at {v!r} does not list its incident edges")

    faces = _trace_all_faces(g, rot)

    # Euler's formula per connected component; an isolated vertex has the
    # one trivial face around it.
    comps = g.connected_components()
    vert_comp = {}
    for i, comp in enumerate(comps):
        for v in comp:
            vert_comp[v] = i
    e_count = [0] * len(comps)
    f_count = [0] * len(comps)
    for u, v in g.edges:
        e_count[vert_comp[u]] += 1
    for f in faces:
        f_count[vert_comp[f[0]]] += 1
    for i, comp in enumerate(comps):
        fc = f_count[i] if e_count[i] > 0 else 1
        if len(comp) - e_count[i] + fc != 2:
            raise EulerViolation(
                f"component {i}: V-E+F = {len(comp)}-{e_count[i]}+{fc} != 2"
            )

    outer = tuple(outer_face)
    if not outer:
        raise RotationMismatch("outer face walk is empty")
    target = _walk_darts(outer) if len(outer) > 1 else None
    matched = None
    for f in faces:
        if len(f) == len(outer) and (
            target is None or _walk_darts(f) in (target, {(b, a) for a, b in target})
        ):
            if target is None or set(f) == set(outer):
                matched = f
                break
    if matched is None:
        raise RotationMismatch("designated outer face is not a face of the embedding")
    pg = PlaneGraph(g, rot, outer, tuple(faces))
    return pg


def trace_faces(pg: PlaneGraph) -> list:
    """Facial walks of the embedding; each dart lies in exactly one walk."""
    return list(pg.faces) if pg.faces else _trace_all_faces(pg.graph, pg.rotation)


def _canonical_outer(pg: PlaneGraph) -> tuple:
    """The traced face matching the designated outer walk."""
    target = _walk_darts(pg.outer_face)
    rev = {(b, a) for a, b in target}
    for f in trace_faces(pg):
        if len(f) == len(pg.outer_face) and _walk_darts(f) in (target, rev):
            return f
    raise RotationMismatch("outer face lost")


def validate_near_triangulation(pg: PlaneGraph) -> VerificationReport:
    """PASS iff the boundary is a simple cycle and interior faces are triangles."""
    outer = pg.outer_face
    if len(outer) < 3:
        return VerificationReport(False, f"boundary walk of length {len(outer)} is not a cycle")
    if len(set(outer)) != len(outer):
        return VerificationReport(False, "boundary walk repeats a vertex")
    outer_canon = _canonical_outer(pg)
    bad = [f for f in trace_faces(pg) if f != outer_canon and len(f) != 3]
    if bad:
        return VerificationReport(
            False, f"interior face of length {len(bad[0])}", counterexample=list(bad[0])
        )
    return VerificationReport(True, "near-triangulation")


def find_chord(pg: PlaneGraph) -> Optional[Edge]:
    """Lexicographically smallest edge joining two non-consecutive boundary vertices."""
    rep = validate_near_triangulation(pg)
    if not rep.verdict:
        raise NotNearTriangulation(rep.detail)
    return chord_of_cycle(pg.graph, list(pg.outer_face))


def chord_of_cycle(g: Graph, cycle: list) -> Optional[Edge]:
    on_cycle = set(cycle)
    k = len(cycle)
    boundary = {edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    best = None
    for u in cycle:
        for v in g.adjacency[u]:
            if v in on_cycle:
                e = edge(u, v)
                if e not in boundary and (best is None or e < best):
                    best = e
    return best


def ear_path(pg: PlaneGraph, x: str, y: str) -> tuple:
    """The ear vertex z next to x, its far boundary neighbor w, and the
    path of z's neighbors from x to w in rotation order."""
    rep = validate_near_triangulation(pg)
    if not rep.verdict:
        raise NotNearTriangulation(rep.detail)
    if len(pg.graph.vertices) <= 3:
        raise NotNearTriangulation("no ear on a bare triangle")
    if chord_of_cycle(pg.graph, list(pg.outer_face)) is not None:
        raise ChordPresent("boundary cycle has a chord")
    cycle = list(pg.outer_face)
    if edge(x, y) not in pg.boundary_edges():
        raise HandleNotOnBoundary(f"{(x, y)} is not a boundary edge")
    k = len(cycle)
    ix = cycle.index(x)
    n1, n2 = cycle[(ix + 1) % k], cycle[(ix - 1) % k]
    z = n1 if n2 == y else n2
    iz = cycle.index(z)
    zn1, zn2 = cycle[(iz + 1) % k], cycle[(iz - 1) % k]
    w = zn1 if zn2 == x else zn2
    path = _rotation_path(pg.rotation[z], x, w)
    boundary = set(cycle)
    for u in path[1:-1]:
        if u in boundary:
            raise NotNearTriangulation(f"ear path crosses the boundary at {u!r}")
    return z, w, path


def _rotation_path(rot: tuple, x: str, w: str) -> list:
    """Order a cyclic neighbor list as a path from x to w.

    x and w must be cyclically adjacent in the rotation (the gap is the
    outer face); the path runs the other way around.
    """
    k = len(rot)
    ix = rot.index(x)
    if rot[(ix + 1) % k] == w:
        return [rot[(ix - i) % k] for i in range(k)]
    if rot[(ix - 1) % k] == w:
        return [rot[(ix + i) % k] for i in range(k)]
    raise NotNearTriangulation("ear endpoints are not adjacent in the rotation")


def find_k4(g: Graph, limit: Optional[int] = None) -> Optional[tuple]:
    """Lexicographically first 4-clique, or None."""
    from itertools import combinations

    adj = g.adjacency
    verts = g.vertices if limit is None else g.vertices[:limit]
    candidates = [v for v in verts if len(adj[v]) >= 3]
    for quad in combinations(candidates, 4):
        a, b, c, d = quad
        if (
            b in adj[a]
            and c in adj[a]
            and d in adj[a]
            and c in adj[b]
            and d in adj[b]
            and d in adj[c]
        ):
            return quad
    return None


# ---------------------------------------------------------------------------
# serialization

def graph_to_json_dict(g: Graph, pg: Optional[PlaneGraph] = None) -> dict:
    out = {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }
    if pg is not None:
        out["rotation"] = {v: list(pg.rotation[v]) for v in g.vertices}
        out["outer_face"] = list(pg.outer_face)
    return out


def graph_to_json(g: Graph, pg: Optional[PlaneGraph] = None) -> str:
    return json.dumps(graph_to_json_dict(g, pg), sort_keys=True, separators=(",", ":"))


def graph_from_json_dict(data: dict):
    """Parse the Graph JSON format; returns a PlaneGraph when an embedding
    is present, a bare Graph otherwise."""
    vertices = [str(v) for v in data["vertices"]]
    edges = [(str(u), str(v)) for u, v in data["edges"]]
    if "rotation" in data and "outer_face" in data:
        rotation = {str(v): tuple(str(u) for u in nbrs) for v, nbrs in data["rotation"].items()}
        return build_plane_graph(vertices, edges, rotation, [str(v) for v in data["outer_face"]])
    return Graph.build(vertices, edges)


def graph_from_json(text: str):
    return graph_from_json_dict(json.loads(text))


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
