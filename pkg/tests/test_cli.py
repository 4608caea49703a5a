import json

import pytest

from ccwidth.cli import main
from ccwidth.generators import complete_graph, grid_graph, star_graph
from ccwidth.graphs import serialize_graph


@pytest.fixture()
def k4_file(tmp_path):
    path = tmp_path / "k4.graph"
    path.write_text(serialize_graph(complete_graph(4)))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_roundtrip(capsys, k4_file):
    code, report = run(capsys, ["parse", k4_file, "--to", "json"])
    assert code == 0
    assert report["results"]["n"] == 4 and report["results"]["m"] == 6


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("p 2 1\ne 0 5")
    code, report = run(capsys, ["parse", str(bad)])
    assert code == 2 and "error" in report


def test_ccw_exact_clique(capsys, k4_file, tmp_path):
    code, report = run(capsys, ["--out", str(tmp_path), "ccw", k4_file, "--exact"])
    assert code == 0
    assert report["results"]["ccw"] == 0
    witness = json.loads((tmp_path / "ccw_witness_cover.json").read_text())
    assert witness["parts"] == [[0, 1, 2, 3]]


def test_ccw_exact_limit_exit(capsys, tmp_path):
    big = tmp_path / "big.graph"
    big.write_text(serialize_graph(complete_graph(30)))
    code, _ = run(capsys, ["--out", str(tmp_path), "ccw", str(big), "--exact"])
    assert code == 3


def test_ccw_greedy_star_interval(capsys, tmp_path):
    graph_path = tmp_path / "star.graph"
    graph_path.write_text(serialize_graph(star_graph(5)))
    code, report = run(capsys, ["--out", str(tmp_path), "ccw", str(graph_path), "--greedy"])
    assert code == 0
    assert report["results"] == {"lower": 2, "upper": 4}


def test_ccw_greedy_recognition_failure(capsys, tmp_path):
    from ccwidth.generators import cycle_graph

    path = tmp_path / "c5.graph"
    path.write_text(serialize_graph(cycle_graph(5)))
    code, _ = run(capsys, ["--out", str(tmp_path), "ccw", str(path), "--greedy"])
    assert code == 5


def test_decompose_and_verify(capsys, tmp_path):
    from ccwidth.generators import cycle_graph

    path = tmp_path / "c5.graph"
    path.write_text(serialize_graph(cycle_graph(5)))
    cover_path = tmp_path / "cover.json"
    cover_path.write_text(json.dumps({"parts": [[0], [1], [2], [3], [4]]}))
    code, report = run(
        capsys,
        ["--out", str(tmp_path), "decompose", str(path), "--cover", str(cover_path), "--verify"],
    )
    assert code == 0
    assert report["results"]["factor_count"] == 4
    assert all(c["passed"] for c in report["results"]["verification"])

    code, report = run(
        capsys,
        ["verify", str(path), "--decomposition", str(tmp_path / "decomposition.json")],
    )
    assert code == 0 and report["results"]["all_passed"]

    # tamper: drop an edge from the first factor
    stored = json.loads((tmp_path / "decomposition.json").read_text())
    stored["factors"][0]["graph"]["edges"].pop()
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(stored))
    code, report = run(capsys, ["verify", str(path), "--decomposition", str(tampered)])
    assert code == 4 and not report["results"]["all_passed"]


def test_star_on_grid(capsys, tmp_path):
    path = tmp_path / "grid.graph"
    path.write_text(serialize_graph(grid_graph(4, 4)))
    code, report = run(capsys, ["star", str(path)])
    assert code == 0 and report["results"]["star_leaves"] == 4


def test_gen_poset_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        code, _ = run(capsys, ["--seed", "7", "--out", str(out), "gen", "poset", "20", "0.5"])
        assert code == 0
    name = "poset_20_7.graph.json"
    assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    oname = "poset_20_7.orientation.json"
    assert (out1 / oname).read_bytes() == (out2 / oname).read_bytes()


def test_ramsey_corollary(capsys):
    code, report = run(capsys, ["ramsey", "--corollary", "2"])
    assert code == 0
    assert report["results"]["ramsey"] == 9 and report["results"]["star_bound"] == 8


def test_ramsey_verify_tiny(capsys):
    code, report = run(capsys, ["ramsey", "3", "3", "--verify-tiny"])
    assert code == 0
    assert report["results"]["verification"]["upper_verified"]


def test_stats(capsys, k4_file):
    code, report = run(capsys, ["stats", k4_file])
    assert code == 0
    assert report["results"]["components"] == 1 and report["results"]["max_degree"] == 3


def test_report_stable_excluding_timing(capsys, k4_file, tmp_path):
    _, r1 = run(capsys, ["--out", str(tmp_path), "ccw", k4_file, "--exact"])
    _, r2 = run(capsys, ["--out", str(tmp_path), "ccw", k4_file, "--exact"])
    r1.pop("timing_ms")
    r2.pop("timing_ms")
    assert r1 == r2
