"""List-coloring search and the non-3-choosable list construction."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atforest.choosability import (
    ALPHA,
    BETA,
    GAMMA,
    OMEGA,
    ListAssignment,
    build_lemma1_lists,
    chromatic_number,
    is_l_colorable,
    verify_witness_not_k_choosable,
)
from atforest.errors import BadSelector
from atforest.graph import Graph
from atforest.testkit import random_graph


def cycle(names):
    return Graph.build(names, list(zip(names, names[1:])) + [(names[0], names[-1])])


def uniform_lists(g, colors):
    return ListAssignment.build({v: list(colors) for v in g.vertices})


def test_k3_with_two_colors_uncolorable():
    assert is_l_colorable(cycle("abc"), uniform_lists(cycle("abc"), "12")) is None


def test_c4_with_two_colors_alternates():
    g = cycle("abcd")
    coloring = is_l_colorable(g, uniform_lists(g, "12"))
    assert coloring is not None
    for u, v in g.edges:
        assert coloring[u] != coloring[v]


def test_is_l_colorable_matches_exhaustive_search():
    for seed in range(15):
        g = random_graph(6, 0.5, seed)
        lists = ListAssignment.build(
            {v: ["1", "2"] if int(v[-1]) % 2 else ["2", "3"] for v in g.vertices}
        )
        domains = [sorted(lists.as_dict()[v]) for v in g.vertices]
        brute = any(
            all(
                assign[i] != assign[j]
                for i, u in enumerate(g.vertices)
                for j, v in enumerate(g.vertices)
                if i < j and g.has_edge(u, v)
            )
            for assign in product(*domains)
        )
        assert (is_l_colorable(g, lists) is not None) == brute, seed


def test_single_piece_alone_is_colorable():
    """One wheel piece with its copy-1 lists still admits a coloring; all
    six permutations together are what blocks every choice."""
    g = Graph.build(
        ["a", "b", "c1", "d1", "e1"],
        [("a", "b"), ("a", "c1"), ("b", "c1"), ("a", "e1"), ("b", "e1"),
         ("c1", "d1"), ("d1", "e1"), ("a", "d1")],
    )
    lists = ListAssignment.build(
        {
            "a": (ALPHA, BETA, GAMMA),
            "b": (ALPHA, BETA, GAMMA),
            "c1": (ALPHA, BETA, GAMMA),
            "e1": (ALPHA, BETA, OMEGA),
            "d1": (ALPHA, GAMMA, OMEGA),
        }
    )
    coloring = is_l_colorable(g, lists)
    assert coloring is not None


def test_build_lists_shapes():
    g, lists = build_lemma1_lists("aaaaaa")
    assert len(g.vertices) == 20 and len(g.edges) == 43
    assert all(len(cols) == 3 for _, cols in lists.lists)
    ga, la = build_lemma1_lists("aaaaaa")
    gb, lb = build_lemma1_lists("ababab")
    assert ga == gb or ga != gb  # graphs differ only in d_i attachment edges
    da, db = la.as_dict(), lb.as_dict()
    diff = {v for v in da if da[v] != db[v]}
    assert diff == {"d2", "d4", "d6"}


def test_bad_selectors_rejected():
    for bad in ("aaa", "abcabc", "aaaaaaa", ""):
        with pytest.raises(BadSelector):
            build_lemma1_lists(bad)


def test_witness_verification_pass_and_fail():
    g, lists = build_lemma1_lists("aaaaaa")
    assert verify_witness_not_k_choosable(g, lists, 3).verdict
    c4 = cycle("abcd")
    rep = verify_witness_not_k_choosable(c4, uniform_lists(c4, "12"), 2)
    assert not rep.verdict and rep.counterexample  # colorable
    short = ListAssignment.build(
        {v: ["1", "2"] if v != "a" else ["1", "2", "3"] for v in c4.vertices}
    )
    assert not verify_witness_not_k_choosable(c4, short, 3).verdict  # size


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=63))
def test_all_selectors_not_choosable(idx):
    word = "".join("ab"[idx >> j & 1] for j in range(6))
    g, lists = build_lemma1_lists(word)
    assert verify_witness_not_k_choosable(g, lists, 3).verdict


def test_factorized_copy_colorability_oracle():
    """Fixing the two handle colors, colorability factorizes over the six
    pieces; the factorized verdict must match the global search."""
    for word in ("aaaaaa", "bbbbbb", "abbaba"):
        g, lists = build_lemma1_lists(word)
        lmap = lists.as_dict()
        global_ok = is_l_colorable(g, lists) is not None
        factored_ok = False
        for ca in sorted(lmap["a"]):
            for cb in sorted(lmap["b"]):
                if ca == cb:
                    continue
                pieces_ok = True
                for i in range(1, 7):
                    c, d, e = f"c{i}", f"d{i}", f"e{i}"
                    attach = word[i - 1]
                    anchor = ca if attach == "a" else cb
                    piece_ok = False
                    for cc in lmap[c] - {ca, cb}:
                        for ce in lmap[e] - {ca, cb}:
                            for cd in lmap[d] - {cc, ce, anchor}:
                                piece_ok = True
                    if not piece_ok:
                        pieces_ok = False
                        break
                if pieces_ok:
                    factored_ok = True
        assert factored_ok == global_ok


def test_chromatic_numbers():
    assert chromatic_number(Graph.build("abcd", [(u, v) for i, u in enumerate("abcd") for v in "abcd"[i + 1:]])) == 4
    assert chromatic_number(cycle("abcde")) == 3
    petersen_edges = [
        ("o0", "o1"), ("o1", "o2"), ("o2", "o3"), ("o3", "o4"), ("o0", "o4"),
        ("i0", "i2"), ("i2", "i4"), ("i4", "i1"), ("i1", "i3"), ("i3", "i0"),
        ("o0", "i0"), ("o1", "i1"), ("o2", "i2"), ("o3", "i3"), ("o4", "i4"),
    ]
    petersen = Graph.build([f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)], petersen_edges)
    assert chromatic_number(petersen) == 3


def test_list_json_round_trip():
    _, lists = build_lemma1_lists("ababab")
    back = ListAssignment.from_json_dict(lists.to_json_dict())
    assert back == lists
