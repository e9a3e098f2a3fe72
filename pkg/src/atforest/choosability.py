"""List-coloring search and non-choosability witnesses.

The explicit bad 3-list assignment lives on a gadget glued from six
wheel-shaped pieces sharing a handle edge ab: whatever distinct colors a
and b receive, one piece runs out of colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .errors import BadSelector, CapExceeded
from .graph import Graph
from .report import VerificationReport

ALPHA, BETA, GAMMA, OMEGA = "alpha", "beta", "gamma", "omega"


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple  # tuple of (vertex, tuple-of-colors), sorted

    @staticmethod
    def build(mapping: dict) -> "ListAssignment":
        return ListAssignment(
            tuple((v, tuple(sorted(set(cols)))) for v, cols in sorted(mapping.items()))
        )

    def as_dict(self) -> dict:
        return {v: set(cols) for v, cols in self.lists}

    def to_json_dict(self) -> dict:
        return {"lists": {v: list(cols) for v, cols in self.lists}}

    @staticmethod
    def from_json_dict(data: dict) -> "ListAssignment":
        return ListAssignment.build({str(v): [str(c) for c in cols] for v, cols in data["lists"].items()})


def is_l_colorable(g: Graph, l: ListAssignment) -> Optional[dict]:
    """A proper coloring from the lists, by backtracking with forward
    checking over the sorted vertex order; None if there is none."""
    lists = l.as_dict()
    if set(lists) != set(g.vertices):
        raise BadSelector("lists must cover exactly the vertex set")
    order = list(g.vertices)
    domains = {v: sorted(lists[v]) for v in order}
    adj = g.adjacency
    coloring: dict = {}

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for color in domains[v]:
            if any(coloring.get(w) == color for w in adj[v]):
                continue
            coloring[v] = color
            # forward check: an uncolored neighbor must keep an option
            dead = False
            for w in adj[v]:
                if w not in coloring and all(
                    c == color or any(coloring.get(u) == c for u in adj[w])
                    for c in domains[w]
                ):
                    dead = True
                    break
            if not dead and assign(i + 1):
                return True
            del coloring[v]
        return False

    return dict(coloring) if assign(0) else None


def _piece_edges(i: int, attach: str) -> list:
    c, d, e = f"c{i}", f"d{i}", f"e{i}"
    return [
        ("a", c), ("b", c), ("a", e), ("b", e), (c, d), (d, e), (attach, d),
    ]


def build_lemma1_lists(selector: str) -> tuple:
    """The glued six-piece gadget for an attachment word over {a, b}, with
    the 3-lists that admit no proper coloring.

    Piece i uses the i-th permutation (x, y, z) of {alpha, beta, gamma} in
    lexicographic order: c_i gets {alpha, beta, gamma}, e_i gets
    {x, y, omega}, and d_i gets {x, z, omega} when attached to a,
    {y, z, omega} when attached to b.
    """
    if len(selector) != 6 or any(ch not in "ab" for ch in selector):
        raise BadSelector(f"selector must be a length-6 word over {{a,b}}: {selector!r}")
    perms = list(permutations((ALPHA, BETA, GAMMA)))
    vertices = ["a", "b"]
    edges = [("a", "b")]
    lists = {"a": (ALPHA, BETA, GAMMA), "b": (ALPHA, BETA, GAMMA)}
    for i, attach in enumerate(selector, start=1):
        x, y, z = perms[i - 1]
        c, d, e = f"c{i}", f"d{i}", f"e{i}"
        vertices += [c, d, e]
        edges += _piece_edges(i, attach)
        lists[c] = (ALPHA, BETA, GAMMA)
        lists[e] = (x, y, OMEGA)
        lists[d] = (x, z, OMEGA) if attach == "a" else (y, z, OMEGA)
    return Graph.build(vertices, edges), ListAssignment.build(lists)


def verify_witness_not_k_choosable(g: Graph, l: ListAssignment, k: int) -> VerificationReport:
    """PASS iff every list has exactly k colors and no proper coloring
    from the lists exists."""
    sizes = {v: len(cols) for v, cols in l.lists}
    wrong = [v for v, s in sizes.items() if s != k]
    if wrong:
        return VerificationReport(
            False, f"list at {wrong[0]!r} has size {sizes[wrong[0]]}, not {k}", counterexample=wrong[0]
        )
    coloring = is_l_colorable(g, l)
    if coloring is not None:
        return VerificationReport(False, "a proper coloring exists", counterexample=coloring)
    return VerificationReport(True, f"no coloring from the {k}-lists")


def chromatic_number(g: Graph, cap: int = 64) -> int:
    """Least k with a proper k-coloring, by backtracking with a color
    symmetry break (a new color only when all used ones fail)."""
    if not g.edges:
        return 1 if g.vertices else 0
    order = sorted(g.vertices, key=lambda v: -g.degree(v))
    adj = g.adjacency
    n = len(order)

    def colorable(k: int) -> bool:
        coloring: dict = {}

        def rec(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            limit = min(used + 1, k)
            for c in range(limit):
                if any(coloring.get(w) == c for w in adj[v]):
                    continue
                coloring[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                del coloring[v]
            return False

        return rec(0, 0)

    for k in range(2, len(g.vertices) + 1):
        if k > cap:
            raise CapExceeded("chromatic search cap exceeded")
        if colorable(k):
            return k
    return len(g.vertices)
