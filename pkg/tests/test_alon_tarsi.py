"""Eulerian parity counts, polynomial coefficients, and exact bound values."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atforest.alon_tarsi import (
    ParityCount,
    acyclic_orientation,
    at_number,
    eulerian_diff,
    find_at_orientation,
    poly_coefficient,
)
from atforest.config import Caps
from atforest.errors import CapExceeded, DegreeMismatch, ParityCapExceeded
from atforest.graph import Graph, Orientation
from atforest.testkit import (
    Rng,
    brute_force_eulerian_diff_oracle,
    random_graph,
    random_orientation,
)


def cycle(names):
    return Graph.build(names, list(zip(names, names[1:])) + [(names[0], names[-1])])


def k_complete(names):
    return Graph.build(names, [(u, v) for i, u in enumerate(names) for v in names[i + 1 :]])


def test_acyclic_orientation_has_difference_one():
    g = k_complete("abcd")
    d, deg = acyclic_orientation(g)
    assert d.is_acyclic() and deg == 3
    assert eulerian_diff(d) == ParityCount(1, 0)


def test_directed_triangle_parity():
    g = cycle("abc")
    d = Orientation.build(g, [("a", "b"), ("b", "c"), ("c", "a")])
    # the empty sub-digraph (even) and the full 3-cycle (odd)
    assert eulerian_diff(d) == ParityCount(1, 1)


def test_directed_four_cycle_parity():
    g = cycle("abcd")
    d = Orientation.build(g, [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    # empty and the full 4-cycle, both even
    assert eulerian_diff(d) == ParityCount(2, 0)


def test_parity_cap_enforced():
    g = random_graph(8, 1.0, 0)
    d = random_orientation(g, Rng(0))
    with pytest.raises(ParityCapExceeded):
        eulerian_diff(d, Caps(parity_arcs=10))


def test_triangle_coefficient_sign():
    # (x2-x1)(x3-x1)(x3-x2): the only x1^2 x2 term is (-x1)(-x1)(-x2)
    g = cycle(["1", "2", "3"])
    assert poly_coefficient(g, {"1": 2, "2": 1, "3": 0}) == -1
    assert poly_coefficient(g, {"1": 0, "2": 1, "3": 2}) == 1


def test_coefficient_rejects_bad_exponents():
    g = cycle("abc")
    with pytest.raises(DegreeMismatch):
        poly_coefficient(g, {"a": 1, "b": 1})  # missing vertex
    with pytest.raises(DegreeMismatch):
        poly_coefficient(g, {"a": 1, "b": 1, "c": 2})  # wrong total


def test_identity_coefficient_equals_parity_difference():
    """|coefficient at the out-degree vector| == |even - odd| for random
    orientations."""
    for seed in range(30):
        g = random_graph(6, 0.6, seed)
        if not g.edges:
            continue
        d = random_orientation(g, Rng(seed))
        coeff = poly_coefficient(g, d.out_degrees())
        assert abs(coeff) == abs(eulerian_diff(d).diff), seed


def test_oracle_agreement():
    for seed in range(40):
        g = random_graph(6, 0.5, seed + 1000)
        d = random_orientation(g, Rng(seed))
        assert eulerian_diff(d) == brute_force_eulerian_diff_oracle(d)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_deletion_recurrence(seed):
    """Dropping one edge uv (u < v): the coefficient splits into the
    v-branch minus the u-branch."""
    g = random_graph(5, 0.6, seed)
    if not g.edges:
        return
    d = random_orientation(g, Rng(seed))
    eta = d.out_degrees()
    u, v = sorted(g.edges)[seed % len(g.edges)]
    rest = g.subgraph_without_edges([(u, v)])

    def minus(vertex):
        out = dict(eta)
        out[vertex] -= 1
        return out

    left = poly_coefficient(g, eta)
    terms = []
    for vertex in (v, u):
        reduced = minus(vertex)
        terms.append(
            0 if reduced[vertex] < 0 else poly_coefficient(rest, reduced)
        )
    assert left == terms[0] - terms[1]


def test_exact_at_values():
    assert at_number(cycle("abc")) == 3
    assert at_number(k_complete("abcd")) == 4
    assert at_number(cycle("abcd")) == 2
    assert at_number(cycle("abcde")) == 3


def test_cycle_at_values_by_parity():
    assert at_number(cycle("abcdef")) == 2
    assert at_number(cycle("abcdefg")) == 3


def test_find_at_orientation_c4_k2_is_a_directed_cycle():
    g = cycle("abcd")
    d = find_at_orientation(g, 2)
    assert d is not None
    assert all(c == 1 for c in d.out_degrees().values())
    assert eulerian_diff(d).diff != 0


def test_find_at_orientation_respects_budget_and_cap():
    g = cycle("abc")
    assert find_at_orientation(g, 2) is None  # AT(K3) = 3
    big = random_graph(10, 0.9, 1)
    with pytest.raises(CapExceeded):
        find_at_orientation(big, 3, Caps(orientation_edges=5, parity_arcs=24))


def test_at_number_at_least_chromatic_number():
    from atforest.choosability import chromatic_number

    for seed in range(15):
        g = random_graph(6, 0.5, seed)
        if not g.edges:
            continue
        assert at_number(g) >= chromatic_number(g)
