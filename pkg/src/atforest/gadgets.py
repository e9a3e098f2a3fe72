"""Planar gadget constructions and their machine verifications.

The pieces, glued along designated handle edges:

* J1/J2: 4-wheels sharing handle ab; six of them glued on ab form the
  family whose members are never 3-choosable.
* J3: ab joined to a 5-path c-d-e-f-g, with four apexes h, i, j, k, each
  adjacent to one of a/b and a consecutive path pair.  Deleting any
  max-degree-3 set of edges away from a, b leaves K4 or an anchored J1/J2.
* S: nine J3's glued on ab.  G1: a 4-star at c, one S per star edge.
* A: x, y adjacent and complete to three disjoint 4-paths; star forests
  centered away from x, y always leave a K4.
* D: K4 plus one apex per face.  G2: one A glued on each of D's 18 edges;
  no star forest of G2 can kill every K4.

Exhaustive verification where the space is small (J3 subsets, A star
forests, D center configurations); the glued giants are checked through
the pigeonhole reduction plus seeded random sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Optional

from .choosability import (
    ALPHA,
    BETA,
    GAMMA,
    OMEGA,
    ListAssignment,
    build_lemma1_lists,
    is_l_colorable,
    verify_witness_not_k_choosable,
)
from .errors import BadSelector, PreconditionViolated
from .graph import Edge, Graph, edge, find_k4
from .report import VerificationReport
from .testkit import Rng


# ---------------------------------------------------------------------------
# star forests

@dataclass(frozen=True)
class StarForest:
    edges: frozenset  # frozenset[Edge]
    centers: frozenset  # designated star centers (covers K2 components)

    def validate(self, host: Optional[Graph] = None) -> VerificationReport:
        degree: dict = {}
        for u, v in self.edges:
            if host is not None and edge(u, v) not in host.edges:
                return VerificationReport(False, f"edge {(u, v)} not in host", counterexample=[u, v])
            in_u, in_v = u in self.centers, v in self.centers
            if in_u == in_v:
                return VerificationReport(
                    False,
                    "edge must join a center to a leaf",
                    counterexample=[u, v],
                )
            leaf = v if in_u else u
            degree[leaf] = degree.get(leaf, 0) + 1
            if degree[leaf] > 1:
                return VerificationReport(False, "leaf in two components", counterexample=leaf)
        return VerificationReport(True, "star forest")


def random_star_forest(g: Graph, rng: Rng) -> StarForest:
    """Random center election, then each non-center greedily picks at most
    one adjacent center."""
    centers = {v for v in g.vertices if rng.randrange(2) == 0}
    chosen = set()
    for v in g.vertices:
        if v in centers:
            continue
        options = [None] + sorted(u for u in g.adjacency[v] if u in centers)
        pick = rng.choice(options)
        if pick is not None:
            chosen.add(edge(v, pick))
    return StarForest(frozenset(chosen), frozenset(centers))


# ---------------------------------------------------------------------------
# builders

_J1_EDGES = [
    ("a", "b"), ("a", "c"), ("b", "c"), ("a", "e"), ("b", "e"),
    ("c", "d"), ("d", "e"), ("a", "d"),
]
_J2_EDGES = [e for e in _J1_EDGES if e != ("a", "d")] + [("b", "d")]

_J3_ROLES = "cdefghijk"
_J3_PATH = ["c", "d", "e", "f", "g"]
# apex -> (attachment, consecutive path pair)
_J3_APEXES = {"h": ("a", ("d", "e")), "i": ("a", ("e", "f")),
              "j": ("b", ("d", "e")), "k": ("b", ("e", "f"))}


@dataclass(frozen=True)
class J3Copy:
    a: str
    b: str
    verts: dict  # role letter -> vertex name

    def path_edges(self) -> list:
        return [edge(self.verts[p], self.verts[q])
                for p, q in zip(_J3_PATH, _J3_PATH[1:])]

    def free_edges(self) -> list:
        out = self.path_edges()
        for m, (_, (p, q)) in sorted(_J3_APEXES.items()):
            out.append(edge(self.verts[m], self.verts[p]))
            out.append(edge(self.verts[m], self.verts[q]))
        return out

    def all_edges(self) -> list:
        out = [edge(self.a, self.b)]
        for r in _J3_PATH:
            out.append(edge(self.a, self.verts[r]))
            out.append(edge(self.b, self.verts[r]))
        out.extend(self.path_edges())
        for m, (attach, (p, q)) in sorted(_J3_APEXES.items()):
            anchor = self.a if attach == "a" else self.b
            out.append(edge(self.verts[m], anchor))
            out.append(edge(self.verts[m], self.verts[p]))
            out.append(edge(self.verts[m], self.verts[q]))
        return out

    def b_incident_edges(self) -> list:
        return [e for e in self.all_edges() if self.b in e and self.a not in e]


def _j3_copy(a: str, b: str, prefix: str) -> J3Copy:
    return J3Copy(a, b, {r: f"{prefix}{r}" for r in _J3_ROLES})


def build_j3(a: str = "a", b: str = "b", prefix: str = "") -> tuple:
    copy = _j3_copy(a, b, prefix)
    verts = [a, b] + [copy.verts[r] for r in _J3_ROLES]
    return Graph.build(verts, set(copy.all_edges())), copy


@dataclass(frozen=True)
class SGadget:
    graph: Graph
    a: str
    b: str
    copies: tuple  # 9 J3Copy

    def a_incident_edges(self) -> set:
        return {e for e in self.graph.edges if self.a in e}


def build_s(a: str = "a", b: str = "b", prefix: str = "s") -> SGadget:
    copies = tuple(_j3_copy(a, b, f"{prefix}{j}") for j in range(1, 10))
    verts = {a, b}
    edges = set()
    for copy in copies:
        verts.update(copy.verts.values())
        edges.update(copy.all_edges())
    return SGadget(Graph.build(verts, edges), a, b, copies)


@dataclass(frozen=True)
class G1Gadget:
    graph: Graph
    center: str
    leaves: tuple
    s_gadgets: tuple  # one SGadget per star edge, handle center-leaf

    def center_edges_in(self, i: int) -> set:
        s = self.s_gadgets[i]
        return {e for e in s.graph.edges if self.center in e}


def build_g1() -> G1Gadget:
    center = "c"
    leaves = tuple(f"v{i}" for i in range(1, 5))
    s_gadgets = tuple(
        build_s(center, leaves[i - 1], prefix=f"g{i}s") for i in range(1, 5)
    )
    verts = {center, *leaves}
    edges = set()
    for s in s_gadgets:
        verts.update(s.graph.vertices)
        edges.update(s.graph.edges)
    return G1Gadget(Graph.build(verts, edges), center, leaves, s_gadgets)


@dataclass(frozen=True)
class AGadget:
    x: str
    y: str
    paths: tuple  # three 4-tuples of vertex names

    def vertices(self) -> list:
        return [self.x, self.y] + [v for p in self.paths for v in p]

    def edges(self) -> list:
        out = [edge(self.x, self.y)]
        for p in self.paths:
            out.extend(edge(u, v) for u, v in zip(p, p[1:]))
            for v in p:
                out.append(edge(self.x, v))
                out.append(edge(self.y, v))
        return out

    def k4_candidates(self) -> list:
        """One candidate clique per path edge: {x, y, u, v}."""
        cands = []
        for p in self.paths:
            for u, v in zip(p, p[1:]):
                cands.append(
                    (
                        {self.x, self.y, u, v},
                        {edge(self.x, self.y), edge(self.x, u), edge(self.x, v),
                         edge(self.y, u), edge(self.y, v), edge(u, v)},
                    )
                )
        return cands


def build_a(x: str = "x", y: str = "y", prefix: str = "p") -> AGadget:
    paths = tuple(
        tuple(f"{prefix}{i}{j}" for j in range(1, 5)) for i in range(1, 4)
    )
    return AGadget(x, y, paths)


@dataclass(frozen=True)
class DGadget:
    graph: Graph
    core: tuple  # the K4 (a, b, c, d)
    apexes: dict  # face triple -> apex name

    def k4_candidates(self) -> list:
        cands = [(set(self.core), {edge(u, v) for u, v in combinations(self.core, 2)})]
        for face, z in sorted(self.apexes.items()):
            verts = set(face) | {z}
            es = {edge(u, v) for u, v in combinations(sorted(verts), 2)
                  if not (u in self.apexes.values() and v in self.apexes.values())}
            cands.append((verts, es))
        return cands


def build_d() -> DGadget:
    core = ("a", "b", "c", "d")
    apexes = {face: "z" + "".join(face) for face in combinations(core, 3)}
    verts = list(core) + list(apexes.values())
    edges = [edge(u, v) for u, v in combinations(core, 2)]
    for face, z in apexes.items():
        edges += [edge(z, v) for v in face]
    return DGadget(Graph.build(verts, edges), core, dict(apexes))


@dataclass(frozen=True)
class G2Gadget:
    graph: Graph
    d_gadget: DGadget
    a_copies: tuple  # one AGadget per edge of D, handle = that edge

    def k4_candidates(self) -> list:
        cands = list(self.d_gadget.k4_candidates())
        for a in self.a_copies:
            cands.extend(a.k4_candidates())
        return cands


def build_g2() -> G2Gadget:
    d = build_d()
    a_copies = []
    verts = set(d.graph.vertices)
    edges = set(d.graph.edges)
    for u, v in sorted(d.graph.edges):
        a = build_a(u, v, prefix=f"A_{u}_{v}_p")
        a_copies.append(a)
        verts.update(a.vertices())
        edges.update(a.edges())
    return G2Gadget(Graph.build(verts, edges), d, tuple(a_copies))


def build_gadget(gadget_id: str, selector: Optional[str] = None) -> Graph:
    """Gadget graph by name; JFamily needs a length-6 selector over {a,b}."""
    gid = gadget_id.upper() if gadget_id.lower() != "jfamily" else "JFamily"
    if gid == "J1":
        return Graph.build("abcde", _J1_EDGES)
    if gid == "J2":
        return Graph.build("abcde", _J2_EDGES)
    if gid == "JFamily":
        if selector is None:
            raise BadSelector("JFamily needs --selector, a length-6 word over {a,b}")
        return build_lemma1_lists(selector)[0]
    if gid == "J3":
        return build_j3()[0]
    if gid == "S":
        return build_s().graph
    if gid == "G1":
        return build_g1().graph
    if gid == "A":
        a = build_a()
        return Graph.build(a.vertices(), set(a.edges()))
    if gid == "D":
        return build_d().graph
    if gid == "G2":
        return build_g2().graph
    raise BadSelector(f"unknown gadget {gadget_id!r}")


# ---------------------------------------------------------------------------
# per-copy extraction inside a J3 whose handle-incident edges survive

@dataclass
class Obstruction:
    kind: str  # "k4" | "j_member"
    vertices: tuple
    selector: str = ""
    graph: Optional[Graph] = None
    lists: Optional[ListAssignment] = None
    pieces: tuple = ()


def _extract_from_copy(copy: J3Copy, h: set):
    """K4 or a surviving J1/J2 piece inside one J3 copy whose a- and
    b-incident edges avoid h."""
    v = copy.verts
    for p, q in zip(_J3_PATH, _J3_PATH[1:]):
        if edge(v[p], v[q]) not in h:
            return ("k4", (copy.a, copy.b, v[p], v[q]))
    for m, (attach, (p, q)) in sorted(_J3_APEXES.items()):
        if edge(v[m], v[p]) not in h and edge(v[m], v[q]) not in h:
            return ("j", attach, v[p], v[q], v[m])
    raise PreconditionViolated(
        "no apex survives; the deleted set has a vertex of degree > 3"
    )


def extract_obstruction(s: SGadget, h: set) -> Obstruction:
    """Apply the pigeonhole reduction to an S gadget: pick at least six J3
    copies whose b-incident edges avoid h, extract per copy, and return a
    K4 or an assembled six-piece family member with its bad lists."""
    h = {edge(u, v) for u, v in h}
    unknown = [e for e in h if e not in s.graph.edges]
    if unknown:
        raise PreconditionViolated(f"edge {unknown[0]} not in the gadget")
    if any(s.a in e for e in h):
        raise PreconditionViolated("deleted set touches the protected handle end")
    degree: dict = {}
    for u, v in h:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if degree and max(degree.values()) > 3:
        raise PreconditionViolated("deleted set has maximum degree > 3")

    clear = [c for c in s.copies if not any(e in h for e in c.b_incident_edges())]
    if len(clear) < 6:
        raise PreconditionViolated("fewer than six clear copies; pigeonhole violated")

    pieces = []
    for copy in clear:
        got = _extract_from_copy(copy, h)
        if got[0] == "k4":
            return Obstruction("k4", got[1])
        pieces.append(got)
        if len(pieces) == 6:
            break

    perms = list(permutations((ALPHA, BETA, GAMMA)))
    verts = [s.a, s.b]
    edges = [(s.a, s.b)]
    lists = {s.a: (ALPHA, BETA, GAMMA), s.b: (ALPHA, BETA, GAMMA)}
    selector = ""
    for i, (_, attach, p, q, m) in enumerate(pieces):
        x, y, z = perms[i]
        selector += attach
        anchor = s.a if attach == "a" else s.b
        verts += [p, q, m]
        edges += [(s.a, p), (s.b, p), (s.a, q), (s.b, q), (p, m), (q, m), (anchor, m)]
        lists[p] = (ALPHA, BETA, GAMMA)
        lists[q] = (x, y, OMEGA)
        lists[m] = (x, z, OMEGA) if attach == "a" else (y, z, OMEGA)
    witness = Graph.build(verts, edges)
    return Obstruction(
        "j_member",
        tuple(verts),
        selector,
        witness,
        ListAssignment.build(lists),
        tuple(pieces),
    )


# ---------------------------------------------------------------------------
# exhaustive verifiers

def verify_lemma1(selector: str) -> VerificationReport:
    """The glued six-piece gadget with its constructed 3-lists admits no
    proper coloring."""
    g, lists = build_lemma1_lists(selector)
    rep = verify_witness_not_k_choosable(g, lists, 3)
    rep.stats["selector"] = selector
    return rep


def verify_lemma2() -> VerificationReport:
    """Exhaustive over all max-degree-3 subsets H of the 12 J3 edges not
    touching a or b: J3 - E(H) contains K4 or an anchored J1/J2 piece."""
    g, copy = build_j3()
    free = copy.free_edges()
    examined = 0
    tally = {"k4": 0, "j_piece": 0}
    for mask in range(1 << len(free)):
        h = {free[i] for i in range(len(free)) if mask >> i & 1}
        degree: dict = {}
        ok = True
        for u, v in h:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
            if degree[u] > 3 or degree[v] > 3:
                ok = False
                break
        if not ok:
            continue
        examined += 1
        remaining = g.subgraph_without_edges(h)
        if find_k4(remaining) is not None:
            tally["k4"] += 1
            continue
        try:
            got = _extract_from_copy(copy, h)
        except PreconditionViolated:
            got = None
        if got is None or got[0] != "j":
            return VerificationReport(
                False,
                "no K4 and no anchored J1/J2 piece",
                counterexample=sorted(list(e) for e in h),
                stats={"cases_examined": examined},
            )
        tally["j_piece"] += 1
    return VerificationReport(
        True,
        "every deletion leaves K4 or an anchored piece",
        stats={"cases_examined": examined, **tally},
    )


def _path_configs(path: tuple) -> list:
    """All (center set, internal forest edges) pairs on one 4-path that are
    locally consistent with a star forest."""
    internal = [edge(u, v) for u, v in zip(path, path[1:])]
    configs = []
    for centers in product((False, True), repeat=4):
        cset = {path[i] for i in range(4) if centers[i]}
        for picks in product((False, True), repeat=3):
            chosen = {internal[i] for i in range(3) if picks[i]}
            leaf_deg: dict = {}
            ok = True
            for u, v in chosen:
                if (u in cset) == (v in cset):
                    ok = False
                    break
                leaf = v if u in cset else u
                leaf_deg[leaf] = leaf_deg.get(leaf, 0) + 1
                if leaf_deg[leaf] > 1:
                    ok = False
                    break
            if ok:
                configs.append((cset, chosen))
    return configs


def verify_lemma6() -> VerificationReport:
    """Exhaustive over all star forests of A whose centers avoid x and y.

    The enumeration factorizes: a forest is an independent combination of
    x's leaf edge, y's leaf edge, and one local configuration per 4-path;
    a K4 of the form {x, y, u, v} survives or not per path, depending only
    on that path's configuration and on where x and y attach.  A combined
    case fails only if every path has a blocked configuration.
    """
    a = build_a()
    path_cfgs = [_path_configs(p) for p in a.paths]
    all_path_verts = [v for p in a.paths for v in p]
    attach_options = [None] + all_path_verts
    examined = 0

    for cx in attach_options:
        for cy in attach_options:
            total = 1
            blocked_all = True
            blocked_example = []
            for pi, path in enumerate(a.paths):
                compatible = 0
                blocked_cfg = None
                for cset, chosen in path_cfgs[pi]:
                    if cx in set(path) and cx not in cset:
                        continue
                    if cy in set(path) and cy not in cset:
                        continue
                    compatible += 1
                    hit = all(
                        e in chosen or u in (cx, cy) or v in (cx, cy)
                        for e, (u, v) in zip(
                            [edge(p1, p2) for p1, p2 in zip(path, path[1:])],
                            zip(path, path[1:]),
                        )
                    )
                    if hit and blocked_cfg is None:
                        blocked_cfg = (cset, chosen)
                total *= compatible
                if blocked_cfg is None:
                    blocked_all = False
                else:
                    blocked_example.append(blocked_cfg)
            examined += total
            if blocked_all and total > 0:
                forest_edges = set()
                centers = set()
                for cset, chosen in blocked_example:
                    forest_edges |= chosen
                    centers |= cset
                if cx is not None:
                    forest_edges.add(edge(a.x, cx))
                if cy is not None:
                    forest_edges.add(edge(a.y, cy))
                return VerificationReport(
                    False,
                    "a star forest kills every K4 candidate",
                    counterexample={
                        "forest": sorted(list(e) for e in forest_edges),
                        "centers": sorted(centers),
                    },
                    stats={"cases_examined": examined},
                )
    return VerificationReport(
        True,
        "K4 survives every star forest with centers off the handle",
        stats={"cases_examined": examined},
    )


def verify_theorem7_core() -> VerificationReport:
    """Exhaustive over center sets C covering every edge of D and leaf-edge
    sets F crossing C, with each leaf used once: D - F keeps a K4."""
    d = build_d()
    g = d.graph
    verts = list(g.vertices)
    cands = d.k4_candidates()
    examined = 0
    for bits in range(1 << len(verts)):
        centers = {verts[i] for i in range(len(verts)) if bits >> i & 1}
        if any(u not in centers and v not in centers for u, v in g.edges):
            continue
        outside = sorted(set(verts) - centers)
        leaf_options = [
            [None] + sorted(
                edge(v, u) for u in g.adjacency[v] if u in centers
            )
            for v in outside
        ]
        for picks in product(*leaf_options):
            forest = {e for e in picks if e is not None}
            examined += 1
            if not any(es.isdisjoint(forest) for _, es in cands):
                return VerificationReport(
                    False,
                    "a center configuration kills every K4",
                    counterexample={
                        "centers": sorted(centers),
                        "forest": sorted(list(e) for e in forest),
                    },
                    stats={"cases_examined": examined},
                )
    return VerificationReport(
        True,
        "K4 survives every center-covered deletion",
        stats={"cases_examined": examined},
    )


# ---------------------------------------------------------------------------
# seeded sampling over the glued giants

def _random_max_degree_subgraph(g: Graph, rng: Rng, max_degree: int = 3,
                                forbidden: Optional[set] = None) -> set:
    """Greedy maximal edge set with all degrees <= max_degree."""
    edges = sorted(g.edges)
    rng.shuffle(edges)
    degree: dict = {}
    out = set()
    for u, v in edges:
        if forbidden and (u in forbidden or v in forbidden):
            continue
        if degree.get(u, 0) < max_degree and degree.get(v, 0) < max_degree:
            out.add((u, v))
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
    return out


def verify_sampled(target: str, n: int, seed: int) -> VerificationReport:
    """Seeded random sampling over the constructions too large to exhaust.

    theorem2: random maximal max-degree-3 subgraphs of G1, obstruction
    extracted through the quiet S copy at the star center.  theorem7:
    random star forests of G2, K4 survival.  corollary3: random deletions
    on a single S avoiding its handle end a.
    """
    if n < 0:
        raise PreconditionViolated("sample count must be non-negative")
    if n == 0:
        return VerificationReport(
            True, "vacuous pass: zero samples requested", stats={"samples": 0}, seed=seed
        )
    rng = Rng(seed)
    if target == "theorem7":
        return _sample_theorem7(n, rng, seed)
    if target == "theorem2":
        return _sample_theorem2(n, rng, seed)
    if target == "corollary3":
        return _sample_corollary3(n, rng, seed)
    raise PreconditionViolated(f"unknown target {target!r}")


def _sample_theorem7(n: int, rng: Rng, seed: int) -> VerificationReport:
    g2 = build_g2()
    cands = g2.k4_candidates()
    for i in range(n):
        forest = random_star_forest(g2.graph, rng.split(i))
        assert forest.validate(g2.graph).verdict
        if not any(es.isdisjoint(forest.edges) for _, es in cands):
            return VerificationReport(
                False,
                f"sample {i}: star forest kills every K4",
                counterexample=sorted(list(e) for e in forest.edges),
                stats={"samples": i + 1},
                seed=seed,
            )
    return VerificationReport(
        True, "K4 survived every sampled star forest",
        stats={"samples": n, "survivors": n}, seed=seed,
    )


def _sample_theorem2(n: int, rng: Rng, seed: int) -> VerificationReport:
    g1 = build_g1()
    tally = {"k4": 0, "j_member": 0}
    for i in range(n):
        h = _random_max_degree_subgraph(g1.graph, rng.split(i), 3)
        hedges = {edge(u, v) for u, v in h}
        quiet = None
        for idx in range(4):
            if not any(e in hedges for e in g1.center_edges_in(idx)):
                quiet = idx
                break
        if quiet is None:
            return VerificationReport(
                False, f"sample {i}: center degree exceeds 3", stats={"samples": i + 1}, seed=seed
            )
        s = g1.s_gadgets[quiet]
        h_local = {e for e in hedges if e in s.graph.edges}
        obstruction = extract_obstruction(s, h_local)
        if obstruction.kind == "k4":
            tally["k4"] += 1
            continue
        recheck = verify_witness_not_k_choosable(obstruction.graph, obstruction.lists, 3)
        if not recheck.verdict:
            return VerificationReport(
                False,
                f"sample {i}: assembled member is 3-choosable after all",
                counterexample=recheck.counterexample,
                stats={"samples": i + 1},
                seed=seed,
            )
        tally["j_member"] += 1
    return VerificationReport(
        True, "every sample produced a verified obstruction",
        stats={"samples": n, **tally}, seed=seed,
    )


def _sample_corollary3(n: int, rng: Rng, seed: int) -> VerificationReport:
    s = build_s()
    tally = {"k4": 0, "j_member": 0}
    for i in range(n):
        h = _random_max_degree_subgraph(s.graph, rng.split(i), 3, forbidden={s.a})
        obstruction = extract_obstruction(s, {edge(u, v) for u, v in h})
        tally[obstruction.kind] += 1
        if obstruction.kind == "j_member":
            recheck = verify_witness_not_k_choosable(obstruction.graph, obstruction.lists, 3)
            if not recheck.verdict:
                return VerificationReport(
                    False, f"sample {i}: member recheck failed",
                    stats={"samples": i + 1}, seed=seed,
                )
    return VerificationReport(
        True, "every sample produced an obstruction",
        stats={"samples": n, **tally}, seed=seed,
    )
