"""Command-line surface: grammar, exit codes, JSON round-trips."""

import json

import pytest

from atforest.cli import EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, run
from atforest.graph import graph_from_json


def go(*argv):
    return run(list(argv))


@pytest.fixture
def tri_file(tmp_path):
    path = tmp_path / "tri.json"
    result = go(
        "gen", "triangulation", "--n", "12", "--boundary", "5",
        "--seed", "7", "--output", str(path),
    )
    assert result.exit_code == EXIT_PASS
    return path


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps({
        "vertices": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "d"]],
    }))
    return path


def test_gadget_build_json_round_trips():
    result = go("gadget", "build", "J3")
    assert result.exit_code == EXIT_PASS
    g = graph_from_json(result.output())
    assert (len(g.vertices), len(g.edges)) == (11, 27)


def test_gadget_build_dot():
    result = go("gadget", "build", "J1", "--format", "dot")
    assert result.exit_code == EXIT_PASS and result.output().startswith("graph")


def test_gadget_build_unknown_is_usage_error():
    assert go("gadget", "build", "nosuch").exit_code == EXIT_USAGE
    assert go("gadget", "build", "JFamily").exit_code == EXIT_USAGE


def test_decompose_and_verify_round_trip(tri_file, tmp_path):
    tri = json.loads(tri_file.read_text())
    handle = f"{tri['outer_face'][0]},{tri['outer_face'][1]}"
    dec = tmp_path / "dec.json"
    result = go(
        "decompose", "--input", str(tri_file), "--handle", handle,
        "--check", "parity", "--output", str(dec),
    )
    assert result.exit_code == EXIT_PASS
    verify = go(
        "verify", "decomposition", "--input", str(tri_file),
        "--decomposition", str(dec), "--check", "parity", "--json",
    )
    assert verify.exit_code == EXIT_PASS
    assert json.loads(verify.output())["verdict"] == "PASS"


def test_decompose_bad_handle_is_usage_error(tri_file):
    assert go("decompose", "--input", str(tri_file), "--handle", "xyz").exit_code == EXIT_USAGE
    assert go("decompose", "--input", str(tri_file), "--handle", "a,b,c").exit_code == EXIT_USAGE


def test_decompose_needs_embedding(k4_file):
    assert go("decompose", "--input", str(k4_file), "--handle", "a,b").exit_code == EXIT_USAGE


def test_verify_lemma_exit_codes():
    assert go("verify", "lemma", "--name", "lemma2").exit_code == EXIT_PASS
    assert go("verify", "lemma", "--name", "nosuch").exit_code == EXIT_USAGE
    assert go("verify", "lemma", "--name", "lemma1", "--selector", "aaaaaa").exit_code == EXIT_PASS
    assert go("verify", "lemma", "--name", "lemma1", "--selector", "ab").exit_code == EXIT_USAGE


def test_verify_lemma_report_shape():
    result = go("verify", "lemma", "--name", "lemma2", "--json")
    data = json.loads(result.output())
    assert data["verdict"] == "PASS" and data["cases_examined"] == 2437


def test_verify_sampled(tmp_path):
    result = go(
        "verify", "sampled", "--target", "theorem7", "--count", "3",
        "--seed", "5", "--json",
    )
    assert result.exit_code == EXIT_PASS
    data = json.loads(result.output())
    assert data["seed"] == 5 and data["samples"] == 3
    assert go("verify", "sampled", "--target", "nosuch", "--count", "1", "--seed", "1").exit_code == EXIT_USAGE
    # --seed is required
    assert go("verify", "sampled", "--target", "theorem7", "--count", "1").exit_code == EXIT_USAGE


def test_at_number_and_coefficient(k4_file, tmp_path):
    result = go("at", "number", "--input", str(k4_file))
    assert result.exit_code == EXIT_PASS and result.output() == "4"
    k3 = tmp_path / "k3.json"
    k3.write_text(json.dumps({
        "vertices": ["1", "2", "3"],
        "edges": [["1", "2"], ["1", "3"], ["2", "3"]],
    }))
    result = go("at", "coefficient", "--input", str(k3), "--eta", "1=2,2=1,3=0")
    assert result.exit_code == EXIT_PASS and result.output() == "-1"
    assert go("at", "coefficient", "--input", str(k3), "--eta", "1=9,2=0,3=0").exit_code == EXIT_USAGE


def test_at_orientation(k4_file, tmp_path):
    c4 = tmp_path / "c4.json"
    c4.write_text(json.dumps({
        "vertices": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]],
    }))
    ok = go("at", "orientation", "--input", str(c4), "--k", "2", "--json")
    assert ok.exit_code == EXIT_PASS
    data = json.loads(ok.output())
    assert len(data["arcs"]) == 4 and data["even"] != data["odd"]
    assert go("at", "orientation", "--input", str(c4), "--k", "1").exit_code == EXIT_FAIL


def test_cap_exit_code(tmp_path):
    # a dense graph beyond the orientation-search cap with degeneracy >= k
    from atforest.graph import graph_to_json
    from atforest.testkit import random_graph

    big = tmp_path / "big.json"
    big.write_text(graph_to_json(random_graph(12, 1.0, 0)))
    result = go("at", "orientation", "--input", str(big), "--k", "3")
    assert result.exit_code == EXIT_CAP


def test_choose_check(tmp_path):
    c4 = tmp_path / "c4.json"
    c4.write_text(json.dumps({
        "vertices": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]],
    }))
    lists = tmp_path / "lists.json"
    lists.write_text(json.dumps({"lists": {v: ["1", "2"] for v in "abcd"}}))
    ok = go("choose", "check", "--input", str(c4), "--lists", str(lists), "--json")
    assert ok.exit_code == EXIT_PASS
    assert json.loads(ok.output())["coloring"]
    # witness mode: C4 with 2-lists is colorable, so "not 2-choosable" fails
    bad = go("choose", "check", "--input", str(c4), "--lists", str(lists), "--k", "2")
    assert bad.exit_code == EXIT_FAIL


def test_gen_graph_deterministic(tmp_path):
    a = go("gen", "graph", "--n", "9", "--p", "0.4", "--seed", "3")
    b = go("gen", "graph", "--n", "9", "--p", "0.4", "--seed", "3")
    assert a.exit_code == EXIT_PASS and a.output() == b.output()
    g = graph_from_json(a.output())
    assert len(g.vertices) == 9


def test_usage_errors():
    assert go().exit_code == EXIT_USAGE
    assert go("nosuch").exit_code == EXIT_USAGE
    assert go("at", "number", "--input", "/does/not/exist.json").exit_code == EXIT_USAGE
    assert go("gen", "graph", "--n", "5", "--p", "0.5").exit_code == EXIT_USAGE  # no seed
