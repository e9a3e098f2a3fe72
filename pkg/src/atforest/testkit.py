"""Seeded generators and independent oracles for tests and acceptance runs.

The PRNG is an in-repo xorshift64* so that streams are identical across
platforms and Python versions.  Substreams are derived with `split` so
concurrent consumers cannot perturb each other.
"""

from __future__ import annotations

from .config import DEFAULT_CAPS, Caps
from .errors import BadParameters, CapExceeded
from .graph import Graph, Orientation, PlaneGraph, build_plane_graph, edge

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    x = (x + _GOLDEN) & _M64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class Rng:
    """xorshift64* with splitmix64 seeding."""

    def __init__(self, seed: int):
        s = _splitmix64(seed & _M64)
        self.state = s if s != 0 else _GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= (x >> 12)
        x ^= (x << 25) & _M64
        x ^= (x >> 27)
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _M64

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise BadParameters("randrange needs n >= 1")
        # rejection sampling for an unbiased draw
        limit = _M64 - (_M64 + 1) % n
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % n

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def split(self, label: int) -> "Rng":
        child = Rng.__new__(Rng)
        s = _splitmix64(self.state ^ _splitmix64(label & _M64))
        child.state = s if s != 0 else _GOLDEN
        return child


def _vertex_names(n: int) -> list:
    width = max(3, len(str(max(n - 1, 0))))
    return [f"v{i:0{width}d}" for i in range(n)]


def random_near_triangulation(n: int, boundary_len: int, seed: int) -> PlaneGraph:
    """Random ear-triangulated polygon with random interior vertex stacking.

    The result has a simple boundary cycle of the requested length, all
    interior faces triangles, and exactly 3n - 3 - boundary_len edges.
    """
    if n < 3 or boundary_len < 3 or boundary_len > n:
        raise BadParameters(f"need 3 <= boundary_len <= n, got n={n}, b={boundary_len}")
    rng = Rng(seed)
    names = _vertex_names(n)
    poly = names[:boundary_len]

    triangles: list = []

    def triangulate(chain: list) -> None:
        # chain is an oriented polygon; interior triangles keep its direction
        stack = [chain]
        while stack:
            p = stack.pop()
            m = len(p)
            if m == 3:
                triangles.append((p[0], p[1], p[2]))
                continue
            k = 1 + rng.randrange(m - 2)
            triangles.append((p[m - 1], p[0], p[k]))
            if k >= 2:
                stack.append(p[: k + 1])
            if m - 1 - k >= 2:
                stack.append(p[k:])

    triangulate(poly)
    for name in names[boundary_len:]:
        i = rng.randrange(len(triangles))
        a, b, c = triangles[i]
        triangles[i] = (a, b, name)
        triangles.append((b, c, name))
        triangles.append((c, a, name))

    outer = (poly[0],) + tuple(reversed(poly[1:]))
    return plane_graph_from_triangles(names, triangles, outer)


def plane_graph_from_triangles(vertices: list, triangles: list, outer: tuple) -> PlaneGraph:
    """Assemble a PlaneGraph from consistently oriented interior triangles
    plus the outer walk (oriented oppositely)."""
    succ: dict = {v: {} for v in vertices}

    def corner(a: str, b: str, c: str) -> None:
        # darts a->b then b->c in one face: c follows a in the rotation at b
        succ[b][a] = c

    for a, b, c in triangles:
        corner(a, b, c)
        corner(b, c, a)
        corner(c, a, b)
    k = len(outer)
    for i in range(k):
        corner(outer[i], outer[(i + 1) % k], outer[(i + 2) % k])

    rotation = {}
    for v in vertices:
        chain = succ[v]
        if not chain:
            rotation[v] = ()
            continue
        start = min(chain)
        order = [start]
        cur = chain[start]
        while cur != start:
            order.append(cur)
            cur = chain[cur]
        rotation[v] = tuple(order)

    edges = set()
    for a, b, c in triangles:
        edges |= {edge(a, b), edge(b, c), edge(c, a)}
    return build_plane_graph(vertices, edges, rotation, outer)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Erdos-Renyi style simple graph, deterministic per seed."""
    if n < 1 or not (0.0 <= edge_probability <= 1.0):
        raise BadParameters(f"bad parameters n={n}, p={edge_probability}")
    rng = Rng(seed)
    names = _vertex_names(n)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                edges.append((names[i], names[j]))
    return Graph.build(names, edges)


def random_orientation(g: Graph, rng: Rng) -> Orientation:
    arcs = []
    for u, v in sorted(g.edges):
        arcs.append((u, v) if rng.randrange(2) == 0 else (v, u))
    return Orientation.build(g, arcs)


def brute_force_eulerian_diff_oracle(d: Orientation, caps: Caps = DEFAULT_CAPS):
    """Independent parity count: plain DFS over arcs carrying the per-vertex
    out-minus-in degree vector.  Cross-checks alon_tarsi.eulerian_diff."""
    from .alon_tarsi import ParityCount  # local import to stay independent

    arcs = sorted(d.arcs)
    if len(arcs) > caps.oracle_arcs:
        raise CapExceeded(f"{len(arcs)} arcs exceeds oracle cap {caps.oracle_arcs}")
    counts = [0, 0]  # even, odd

    def rec(i: int, balance: dict, size: int) -> None:
        if i == len(arcs):
            if all(x == 0 for x in balance.values()):
                counts[size % 2] += 1
            return
        rec(i + 1, balance, size)
        t, h = arcs[i]
        balance[t] = balance.get(t, 0) + 1
        balance[h] = balance.get(h, 0) - 1
        rec(i + 1, balance, size + 1)
        balance[t] -= 1
        balance[h] += 1

    rec(0, {}, 0)
    return ParityCount(counts[0], counts[1])
