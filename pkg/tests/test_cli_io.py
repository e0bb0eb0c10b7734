import json
import random

import pytest

from protrusionkit.cli import main
from protrusionkit.generators import (bounded_degree, modulator_instance,
                                      planar_triangulation_sample,
                                      planted_disjoint_fvs, planted_fvs,
                                      random_graph, series_parallel, tree)
from protrusionkit.graphs import Graph, complete_graph
from protrusionkit.io import (GraphParseError, parse_graph, parse_vertex_set,
                              serialize_graph)
from protrusionkit.minors import is_minor
from protrusionkit.treewidth import exact_treewidth


def test_round_trip_random():
    rng = random.Random(1)
    for trial in range(25):
        n = rng.randint(1, 12)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), trial)
        again = parse_graph(serialize_graph(g))
        assert again.vertices == g.vertices
        assert again == g


def test_round_trip_pattern_multiplicity():
    from protrusionkit.graphs import theta_graph
    text = serialize_graph(theta_graph(3))
    assert "0 1 3" in text
    back = parse_graph(text, pattern=True)
    assert back.multiplicity(0, 1) == 3


def test_parse_errors_have_line_numbers():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_graph("2 1\n0 5\n")
    with pytest.raises(GraphParseError, match="line 1"):
        parse_graph("nope\n")
    with pytest.raises(GraphParseError, match="multiplicity requires"):
        parse_graph("2 1\n0 1 2\n")


def test_parse_vertex_set():
    assert parse_vertex_set("1, 2\n# comment\n3\n") == frozenset({1, 2, 3})


def test_generators_deterministic():
    assert serialize_graph(tree(10, 1)) == serialize_graph(tree(10, 1))
    assert serialize_graph(series_parallel(12, 5)) == serialize_graph(series_parallel(12, 5))


def test_tree_generator_shape():
    g = tree(10, 1)
    assert g.n == 10 and g.m == 9 and len(g.components()) == 1


def test_planted_fvs_remainder_is_forest():
    g, planted = planted_fvs(12, 2, 3)
    rest = g.without(planted)
    assert rest.m <= rest.n - len(rest.components())
    assert not is_minor(complete_graph(3, pattern=True), rest)


def test_series_parallel_k4_free():
    for seed in range(10):
        g = series_parallel(12, seed)
        assert not is_minor(complete_graph(4, pattern=True), g)


def test_planar_triangulation_sample():
    g = planar_triangulation_sample(9, 2)
    assert g.n == 9 and g.m == 3 + 3 * 6
    assert not is_minor(complete_graph(5, pattern=True), g)


def test_bounded_degree():
    g = bounded_degree(15, 4, max_degree=3)
    assert max(g.degree(v) for v in g.vertices) <= 3


def test_modulator_instance_bound_holds():
    for t in (1, 2, 3):
        g, x = modulator_instance(14, 3, t, seed=t)
        w, _ = exact_treewidth(g.without(x))
        assert w <= t - 1


def test_planted_disjoint_fvs_is_yes_instance():
    g, x, alt = planted_disjoint_fvs(14, 3, 5)
    K3 = complete_graph(3, pattern=True)
    assert not is_minor(K3, g.without(x))
    assert not is_minor(K3, g.without(alt))
    assert not (alt & x) and len(alt) < len(x)


def test_cli_generate_solve_oracle_roundtrip(tmp_path):
    gpath = tmp_path / "g.txt"
    assert main(["generate", "--kind", "tree", "--n", "10", "--seed", "1",
                 "--out", str(gpath)]) == 0
    fam = tmp_path / "k3.txt"
    fam.write_text(serialize_graph(complete_graph(3, pattern=True)))
    assert main(["solve", "--input", str(gpath), "--family", str(fam), "--k", "0"]) == 0
    assert main(["oracle", "--input", str(gpath), "--family", str(fam), "--k", "0"]) == 0


def test_cli_solve_no_instance(tmp_path, capsys):
    gpath = tmp_path / "g.txt"
    from protrusionkit.graphs import disjoint_union
    two = disjoint_union(complete_graph(3), complete_graph(3))
    gpath.write_text(serialize_graph(two))
    fam = tmp_path / "k3.txt"
    fam.write_text(serialize_graph(complete_graph(3, pattern=True)))
    code = main(["solve", "--input", str(gpath), "--family", str(fam), "--k", "1"])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["answer"] == "NO" and payload["solution"] is None


def test_cli_decompose_and_validate(tmp_path):
    g, x = modulator_instance(10, 3, 2, seed=4)
    gpath = tmp_path / "g.txt"
    relabel = {v: i for i, v in enumerate(g.vertices)}
    gpath.write_text(serialize_graph(g))
    xpath = tmp_path / "x.txt"
    xpath.write_text(" ".join(str(relabel[v]) for v in sorted(x)))
    dpath = tmp_path / "d.json"
    assert main(["decompose", "--input", str(gpath), "--modulator", str(xpath),
                 "--r", "3", "--t", "2", "--out", str(dpath)]) == 0
    assert main(["validate", "--graph", str(gpath), "--decomposition", str(dpath),
                 "--kind", "pd"]) == 0


def test_cli_decompose_invalid_modulator(tmp_path):
    gpath = tmp_path / "g.txt"
    gpath.write_text(serialize_graph(complete_graph(5)))
    xpath = tmp_path / "x.txt"
    xpath.write_text("0\n")
    code = main(["decompose", "--input", str(gpath), "--modulator", str(xpath),
                 "--r", "2", "--t", "2"])
    assert code == 3


def test_cli_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 9\n")
    fam = tmp_path / "k3.txt"
    fam.write_text(serialize_graph(complete_graph(3, pattern=True)))
    assert main(["solve", "--input", str(bad), "--family", str(fam), "--k", "1"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_cli_kernel_eds(tmp_path, capsys):
    gpath = tmp_path / "g.txt"
    from protrusionkit.graphs import star_graph
    gpath.write_text(serialize_graph(star_graph(12)))
    assert main(["kernel-eds", "--input", str(gpath), "--k", "1", "--r", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["answer"]["answer"] == "kernel"
    assert report["answer"]["n"] <= 13


def test_cli_kernel_eds_no(tmp_path):
    gpath = tmp_path / "g.txt"
    g = Graph(range(10), [(2 * i, 2 * i + 1) for i in range(5)])
    gpath.write_text(serialize_graph(g))
    assert main(["kernel-eds", "--input", str(gpath), "--k", "1", "--r", "3"]) == 1


def test_cli_bounds(capsys):
    assert main(["bounds", "--k", "2", "--r", "4", "--t", "2"]) == 0
    out = capsys.readouterr().out
    assert "eds_kernel_bound" in out and "cluster_count_bound" in out


def test_cli_generate_unknown_kind(tmp_path):
    assert main(["generate", "--kind", "mystery", "--n", "5",
                 "--out", str(tmp_path / "x.txt")]) == 2


def test_cli_bench_empty_and_full(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    assert main(["bench", "--corpus", str(corpus)]) == 0
    header = capsys.readouterr().out.strip().splitlines()
    assert header and header[0].startswith("instance,")
    for i in range(3):
        main(["generate", "--kind", "series-parallel", "--n", "12", "--seed",
              str(i), "--out", str(corpus / f"g{i}.txt")])
    out_csv = tmp_path / "bench.csv"
    assert main(["bench", "--corpus", str(corpus), "--out", str(out_csv)]) == 0
    import csv as csv_mod
    with open(out_csv, newline="") as fh:
        rows = list(csv_mod.DictReader(fh))
    assert len(rows) == 3
    for row in rows:
        assert not row["error"]
        # series-parallel instances are K4-minor-free, so the measured kernel
        # stays under the formula column
        if row["kernel_size"] and row["kernel_bound"]:
            assert float(row["kernel_size"]) <= float(row["kernel_bound"])


def test_cli_bench_parallel(tmp_path, monkeypatch, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for i in range(4):
        main(["generate", "--kind", "tree", "--n", "8", "--seed", str(i),
              "--out", str(corpus / f"t{i}.txt")])
    capsys.readouterr()
    monkeypatch.setenv("PROTRUSIONKIT_THREADS", "3")
    assert main(["bench", "--corpus", str(corpus)]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) == 5


def test_cli_solve_with_test_cap(tmp_path, capsys):
    g = Graph(range(6), [(0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    gpath = tmp_path / "g.txt"
    gpath.write_text(serialize_graph(g))
    fam = tmp_path / "k3.txt"
    fam.write_text(serialize_graph(complete_graph(3, pattern=True)))
    code = main(["solve", "--input", str(gpath), "--family", str(fam),
                 "--k", "2", "--test-cap", "4"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["answer"] == "YES" and len(payload["solution"]) <= 2


def test_round_trip_non_contiguous_ids():
    from protrusionkit.graphs import is_isomorphic
    g = Graph([4, 9, 17], [(4, 9), (9, 17)])
    back = parse_graph(serialize_graph(g))
    assert back.vertices == (0, 1, 2)  # relabeled by order
    assert is_isomorphic(back, g)


def test_cli_validate_tree_decomposition(tmp_path):
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    gpath = tmp_path / "g.txt"
    gpath.write_text(serialize_graph(g))
    _w, td = exact_treewidth(g)
    dpath = tmp_path / "td.json"
    dpath.write_text(json.dumps(td.to_json()))
    assert main(["validate", "--graph", str(gpath),
                 "--decomposition", str(dpath)]) == 0
    broken = td.to_json()
    broken["bags"] = broken["bags"][:-1]
    broken["parent"] = broken["parent"][:-1]
    dpath.write_text(json.dumps(broken))
    assert main(["validate", "--graph", str(gpath),
                 "--decomposition", str(dpath)]) == 3
