"""CLI surface: schemas, formats, exit codes."""

import json

import pytest

from tfree.cli import EXIT_ASSERTION, EXIT_INPUT, EXIT_OK, main

M6_EDGES = "0-1,1-2,0-3,1-4,2-5"
P6_EDGES = "0-1,1-2,2-3,3-4,4-5"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_classify_tree_schema(capsys):
    code, payload = run_json(capsys, "classify-tree", "--tree", M6_EDGES)
    assert code == EXIT_OK
    assert payload["schema"] == "tfree-classify/1"
    assert payload["class"] == "SpikedStar"
    assert payload["alpha"] == 3
    assert payload["matching_kind"] == "perfect"
    assert payload["claims"]["ok"] is True
    assert set(payload) == {
        "schema",
        "tree_id",
        "n",
        "edges",
        "alpha",
        "matching_kind",
        "matching_edges",
        "missed",
        "class",
        "center",
        "base_vertices",
        "chain_edge",
        "claims",
    }


def test_classify_tree_graph6_input(capsys):
    from tfree.graphs import encode_graph6
    from tfree.trees import m6_tree

    g6 = encode_graph6(m6_tree().to_graph())
    code, payload = run_json(capsys, "classify-tree", "--tree", g6)
    assert code == EXIT_OK and payload["class"] == "SpikedStar"


def test_verify_claims_exit_zero(capsys):
    code, payload = run_json(capsys, "verify-claims", "--max-n", "6")
    assert code == EXIT_OK
    assert payload["ok"] is True and payload["trees_checked"] == 13


def test_check_partition_witnessing_true(capsys):
    # complete host split into two triangles witnesses the spiked star
    code, payload = run_json(
        capsys,
        "check-partition",
        "--graph", "E~~w",  # K6
        "--tree", M6_EDGES,
        "--parts", "0,0,0,1,1,1",
    )
    assert code == EXIT_OK
    assert payload["witnessing"] is True
    assert payload["structural"] is True
    assert payload["case"] == "all_comatchings"
    assert payload["noncliques"] == 0


def test_check_partition_failing_assignment(capsys):
    from tfree.census import graph_from_edge_mask
    from tfree.graphs import encode_graph6
    from tfree.trees import m6_tree

    g6 = encode_graph6(m6_tree().to_graph())
    code, payload = run_json(
        capsys,
        "check-partition",
        "--graph", g6,
        "--tree", M6_EDGES,
        "--parts", "0,0,0,0,0,1",
    )
    assert code == EXIT_OK
    assert payload["witnessing"] is False
    assert payload["failing_assignment"] is not None


def test_find_partition_modes(capsys):
    code, payload = run_json(
        capsys, "find-partition", "--graph", "E~~w", "--tree", M6_EDGES, "--mode", "sound"
    )
    assert code == EXIT_OK and payload["found"] is True
    # the seven-cycle has no sound certificate: assertion exit
    code, payload = run_json(
        capsys, "find-partition", "--graph", "F~~~w", "--tree", M6_EDGES
    )
    # F~~~w is K7 which is certifiable; use C7 instead
    from tfree.graphs import Graph, encode_graph6

    c7 = encode_graph6(Graph.cycle(7))
    code, payload = run_json(
        capsys, "find-partition", "--graph", c7, "--tree", M6_EDGES
    )
    assert code == EXIT_ASSERTION and payload["found"] is False


def test_census_json_and_csv(capsys):
    code, payload = run_json(capsys, "census", "--tree", P6_EDGES, "--n", "5")
    assert code == EXIT_OK
    assert payload["schema"] == "tfree-census/1"
    assert payload["t_free"] == 1024 and payload["sound_certified"] == 1024
    code, out = run_cli(
        capsys, "census", "--tree", P6_EDGES, "--n", "5", "--format", "csv"
    )
    assert code == EXIT_OK
    assert out.splitlines()[0] == "tree_id,n,total_graphs,t_free,sound_certified,avg_certificates"


def test_trend_exit_codes(capsys):
    # strictly falling proportion over a span of two: assertion exit
    code, payload = run_json(
        capsys, "trend", "--tree", M6_EDGES, "--n-min", "4", "--n-max", "6"
    )
    assert payload["schema"] == "tfree-trend/1"
    assert code == EXIT_ASSERTION
    # a single point only reports
    code, payload = run_json(
        capsys, "trend", "--tree", M6_EDGES, "--n-min", "5", "--n-max", "5"
    )
    assert code == EXIT_OK and payload["trend_holds"] is None


def test_count_family_and_tables(capsys):
    code, payload = run_json(capsys, "count", "--family", "F1", "--max-l", "6")
    assert code == EXIT_OK and payload["ok"] is True
    assert payload["rows"][3] == {"l": 3, "count": 7, "oracle": 7}
    code, out = run_cli(capsys, "count", "--table", "families", "--max-l", "5", "--format", "csv")
    assert code == EXIT_OK and out.splitlines()[0] == "l,f1,f2,f3,f4,bell,bell_times_2^l"
    code, payload = run_json(capsys, "count", "--table", "matchings", "--l-values", "10,100")
    assert code == EXIT_OK and payload["rows"][0]["l"] == 10


def test_cliques_construct(capsys):
    code, payload = run_json(capsys, "cliques-construct", "--j", "5")
    assert code == EXIT_OK
    assert payload["count"] == 25 and payload["guaranteed"] == 9
    assert len(payload["cliques"][0]) == 5


def test_trees_listing(capsys):
    code, payload = run_json(capsys, "trees", "--n", "6")
    assert code == EXIT_OK and payload["count"] == 6
    classes = {t["class"] for t in payload["trees"]}
    assert "SpikedStar" in classes and "P6" in classes


def test_equivalence_subcommand(capsys):
    code, payload = run_json(
        capsys,
        "equivalence",
        "--tree", M6_EDGES,
        "--n", "24",
        "--samples", "10",
        "--seed", "1",
    )
    assert code == EXIT_OK
    assert payload["discrepancies"] == []


def test_input_error_exit_codes(capsys):
    code, payload = run_json(capsys, "census", "--tree", "0-1", "--n", "5")
    assert code == EXIT_INPUT and payload["error"] == "input"
    code, payload = run_json(capsys, "classify-tree", "--tree", "not-a-tree")
    assert code == EXIT_INPUT
    code, out = run_cli(capsys, "no-such-command")
    assert code == EXIT_INPUT


def test_text_format(capsys):
    code, out = run_cli(capsys, "trees", "--n", "4", "--format", "text")
    assert code == EXIT_OK and "count: 2" in out
