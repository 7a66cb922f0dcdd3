"""CLI behavior: subcommands, exit codes, pipelines, determinism."""

import io
import json
import sys

import pytest

from bookembed.cli import main

TRI111 = '{"edges":[["a","b","1"],["b","c","1"],["a","c","1"]]}'
TRI_5_6_11 = '{"edges":[["a","b","5"],["b","c","6"],["a","c","11"]]}'


def run_cli(argv, stdin_text=""):
    old_in, old_out, old_err = sys.stdin, sys.stdout, sys.stderr
    sys.stdin = io.StringIO(stdin_text)
    sys.stdout = io.StringIO()
    sys.stderr = io.StringIO()
    try:
        code = main(argv)
        return code, sys.stdout.getvalue(), sys.stderr.getvalue()
    finally:
        sys.stdin, sys.stdout, sys.stderr = old_in, old_out, old_err


def test_embed_max_rejects_equal_triangle(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(TRI111)
    code, out, _ = run_cli(["embed-max", str(path)])
    assert code == 1
    doc = json.loads(out)
    assert doc["exists"] is False
    assert doc["reason"] == "no unique maximum-weight edge"


def test_embed_sum_rejects_equal_triangle(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(TRI111)
    code, out, _ = run_cli(["embed-sum", str(path)])
    assert code == 1 and not json.loads(out)["exists"]


def test_embed_max_success_stdout():
    code, out, _ = run_cli(["embed-max"], stdin_text=TRI_5_6_11)
    assert code == 0
    order = json.loads(out)
    assert sorted(order) == ["a", "b", "c"]
    assert {order[0], order[-1]} == {"a", "c"}


def test_embed_2d_accepts_equal_triangle_and_renders():
    code, out, _ = run_cli(["embed-2d", "--eps", "1"], stdin_text=TRI111)
    assert code == 0
    doc = json.loads(out)
    assert len(doc["edges"]) == 3
    code, svg, _ = run_cli(["render", "--style", "rect"], stdin_text=out)
    assert code == 0 and svg.count("<rect") == 3
    code, svg2, _ = run_cli(["render", "--style", "disk"], stdin_text=out)
    assert code == 0 and "<circle" in svg2
    code, svg3, _ = run_cli(["render", "--style", "arc"], stdin_text=out)
    assert code == 0 and svg3.count("<path") == 3


def test_check_subcommand(tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"edges":[["3","4","3"],["5","7","11"],["3","7","12"]]}')
    code, out, _ = run_cli(
        ["check", "sum", str(path), "--order", '["3","4","5","7"]']
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    assert doc["violation"]["edge"][:2] == ["3", "7"]
    code, out, _ = run_cli(
        ["check", "max", str(path), "--order", '["3","4","5","7"]']
    )
    assert code == 0 and json.loads(out)["ok"]


def test_gen_embed_pipeline_determinism():
    _, g1, _ = run_cli(["gen", "--n", "6", "--seed", "1"])
    _, g2, _ = run_cli(["gen", "--n", "6", "--seed", "1"])
    assert g1 == g2
    c1, v1, _ = run_cli(["embed-sum"], stdin_text=g1)
    c2, v2, _ = run_cli(["embed-sum"], stdin_text=g2)
    assert (c1, v1) == (c2, v2)


def test_gen_edge_list_round_trip(tmp_path):
    _, gtext, _ = run_cli(["gen", "--n", "5", "--seed", "2", "--biconnected"])
    code, out, _ = run_cli(["embed-minres"], stdin_text=gtext)
    assert code in (0, 1)


def test_render_arc_from_bare_order(tmp_path):
    gpath = tmp_path / "g.json"
    gpath.write_text(TRI_5_6_11)
    code, order, _ = run_cli(["embed-max", str(gpath)])
    assert code == 0
    code, svg, _ = run_cli(
        ["render", "--style", "arc", "--graph", str(gpath)], stdin_text=order
    )
    assert code == 0 and svg.count("<path") == 3


def test_bench_csv():
    code, out, _ = run_cli(
        ["bench", "--algo", "max", "--sizes", "50,100", "--seed", "3"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "algo,n,seconds"
    assert len(lines) == 3
    for line in lines[1:]:
        algo, n, seconds = line.split(",")
        assert algo == "max" and float(seconds) >= 0


def test_bench_kernel_comparison():
    code, out, _ = run_cli(
        ["bench", "--algo", "oracle-max", "--sizes", "5", "--impl", "both"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert any("[native]" in line for line in lines[1:]) or any(
        "[pure]" in line for line in lines[1:]
    )


def test_parse_error_exit_2():
    code, _, err = run_cli(["embed-max"], stdin_text='{"edges":[["a","a","1"]]}')
    assert code == 2
    assert "self-loop" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["embed-unknown"])
    assert exc.value.code == 2


def test_threads_env_fallback(monkeypatch):
    monkeypatch.setenv("BOOKEMBED_THREADS", "2")
    code, out, _ = run_cli(
        ["embed-minres"], stdin_text='{"edges":[["a","b","2"],["b","c","1"]]}'
    )
    assert code == 0
    assert sorted(json.loads(out)) == ["a", "b", "c"]


def test_disconnected_input_handled():
    g = '{"vertices":["z"],"edges":[["a","b","2"],["c","d","3"]]}'
    code, out, _ = run_cli(["embed-max"], stdin_text=g)
    assert code == 0
    order = json.loads(out)
    assert order[-1] == "z"
    code, out, _ = run_cli(["embed-2d"], stdin_text=g)
    assert code == 0
