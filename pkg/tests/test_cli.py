import json
from fractions import Fraction

import pytest

from sgt import certify, graph
from sgt.cli import main
from sgt.generators import StarParams, gen_bouquet, gen_star


def path_tree(tmp_path):
    g = graph.MetricGraph(2, (graph.Edge(0, 0, 1, Fraction(1)),))
    path = tmp_path / "tree.json"
    graph.save(g, path)
    return str(path)


@pytest.fixture
def k4_path(tmp_path, k4_unit):
    path = tmp_path / "k4.json"
    graph.save(k4_unit, path)
    return str(path)


def test_info(k4_path, capsys):
    assert main(["info", k4_path]) == 0
    out = capsys.readouterr().out
    assert "vertices: 4" in out
    assert "betti: 3" in out
    assert "systole: 3 (~3)" in out
    assert "holds" in out


def test_info_tree(tmp_path, capsys):
    assert main(["info", path_tree(tmp_path)]) == 0
    assert "systole: absent" in capsys.readouterr().out


def test_systole(k4_path, capsys):
    assert main(["systole", k4_path]) == 0
    out = capsys.readouterr().out
    assert "systole: 3 (~3)" in out
    assert "steps:" in out


def test_systole_forest_is_usage_error(tmp_path, capsys):
    assert main(["systole", path_tree(tmp_path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["info", "/nonexistent/g.json"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_loops_stdout_is_verified_certificate(k4_path, k4_unit, capsys):
    assert main(["loops", k4_path, "--n", "2"]) == 0
    captured = capsys.readouterr()
    doc = captured.out
    parsed = certify.parse_certificate(doc)
    ok, reasons = certify.verify_certificate(k4_unit, parsed)
    assert ok, reasons
    assert "verified: n=2" in captured.err


def test_loops_out_file(k4_path, tmp_path, capsys):
    dest = tmp_path / "cert.json"
    assert main(["loops", k4_path, "--n", "3", "--out", str(dest)]) == 0
    payload = json.loads(dest.read_text())
    assert payload["n"] == 3
    assert len(payload["loops"]) == 3
    assert "certificate written" in capsys.readouterr().out


def test_loops_bad_n(k4_path, capsys):
    assert main(["loops", k4_path, "--n", "9"]) == 2
    assert main(["loops", k4_path, "--n", "0"]) == 2


def test_gen_bouquet_roundtrip(capsys):
    assert main(["gen", "bouquet", "--b", "2", "--lengths", "1", "7/2"]) == 0
    g = graph.from_document(capsys.readouterr().out)
    assert g == gen_bouquet(2, ["1", "7/2"])


def test_gen_star_to_file(tmp_path, capsys):
    dest = tmp_path / "star.json"
    argv = ["gen", "star", "--m", "5", "--p", "2", "--L", "3", "--l", "1/2",
            "--out", str(dest)]
    assert main(argv) == 0
    assert graph.load(dest) == gen_star(StarParams(5, 2, Fraction(3), Fraction(1, 2)))


def test_gen_random_deterministic(capsys):
    argv = ["gen", "random", "--v", "6", "--b", "4", "--seed", "9",
            "--law", "uniform:0.1:2.0"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_gen_random_bad_law(capsys):
    argv = ["gen", "random", "--v", "3", "--b", "2", "--seed", "0",
            "--law", "exponential"]
    assert main(argv) == 2


def test_oracle_systole(k4_path, capsys):
    assert main(["oracle", "systole", k4_path]) == 0
    assert "brute_systole: 3 (~3)" in capsys.readouterr().out


def test_oracle_systole_guard(tmp_path, capsys):
    from sgt.generators import gen_random

    path = tmp_path / "big.json"
    graph.save(gen_random(4, 12, 0, "unit"), path)
    assert main(["oracle", "systole", str(path)]) == 2


def test_oracle_rank_fixed_base(k4_path, capsys):
    assert main(["oracle", "rank", k4_path, "--budget", "3", "--base", "0"]) == 0
    out = capsys.readouterr().out
    assert "rank: 3" in out  # the three triangles through vertex 0
    assert out.count("witness") == 3


def test_oracle_rank_best_base(tmp_path, capsys):
    path = tmp_path / "bouquet.json"
    graph.save(gen_bouquet(3, [1, 1, 1]), path)
    assert main(["oracle", "rank", str(path), "--budget", "1"]) == 0
    out = capsys.readouterr().out
    assert "rank: 3" in out and "base: 0" in out


def test_oracle_rank_cap(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SGT_ORACLE_CAP", "10")
    path = tmp_path / "star.json"
    graph.save(gen_star(StarParams(6, 3, Fraction(2), Fraction(1, 2))), path)
    assert main(["oracle", "rank", str(path), "--budget", "4"]) == 3
    assert "error:" in capsys.readouterr().err


def test_growth(capsys):
    assert main(["growth", "--rank", "2", "--radius", "2"]) == 0
    assert "= 17" in capsys.readouterr().out


def test_verify_batch_table_and_certificates(tmp_path, capsys):
    out_dir = tmp_path / "certs"
    argv = ["verify-batch", "--count", "3", "--seed", "5",
            "--b-min", "2", "--b-max", "6", "--out-dir", str(out_dir)]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "max length/bound" in out
    assert "FAIL" not in out
    written = sorted(out_dir.iterdir())
    assert written
    for path in written:
        payload = json.loads(path.read_text())
        assert payload["format"] == certify.CERTIFICATE_FORMAT
        assert payload["metadata"]["prng"] == "python-random-mt19937"


def test_verify_batch_repeat_is_byte_identical(tmp_path):
    outs = []
    for run in ("a", "b"):
        out_dir = tmp_path / run
        main(["verify-batch", "--count", "4", "--seed", "11",
              "--b-min", "2", "--b-max", "8", "--n-policy", "one", "half",
              "--out-dir", str(out_dir)])
        outs.append({p.name: p.read_bytes() for p in out_dir.iterdir()})
    assert outs[0] == outs[1]


def test_verify_batch_policy_filtering(capsys):
    # b ranges over [2, 3]; policy "betti" alone gives exactly one n per row
    assert main(["verify-batch", "--count", "2", "--seed", "1",
                 "--b-min", "2", "--b-max", "3", "--n-policy", "betti"]) == 0
    out = capsys.readouterr().out
    rows = [ln for ln in out.splitlines() if ln.strip().endswith("pass")]
    assert len(rows) == 2


def test_verify_batch_bad_args(capsys):
    assert main(["verify-batch", "--count", "1", "--seed", "0",
                 "--b-min", "5", "--b-max", "3"]) == 2
