"""End-to-end tests for the command-line interface."""

import contextlib
import io
import json

from pba.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()


def test_check_jacobi_true():
    code, out, _ = run_cli("check-jacobi", "--f", "y", "--g", "-x", "--h", "0")
    assert code == 0
    assert "Jacobi" in out


def test_check_jacobi_false_prints_witness():
    code, out, _ = run_cli("check-jacobi", "--f", "y", "--g", "z", "--h", "x")
    assert code == 1
    assert "-x - y - z" in out


def test_check_jacobi_parse_error():
    code, _, err = run_cli("check-jacobi", "--f", "y^", "--g", "z", "--h", "x")
    assert code == 2
    assert "--f" in err and "offset" in err


def test_bracket_pins():
    code, out, _ = run_cli(
        "bracket", "--f", "x", "--g", "y", "--h", "z", "--lhs", "x", "--rhs", "y"
    )
    assert (code, out) == (0, "z\n")
    code, out, _ = run_cli(
        "bracket", "--f", "2 - 2*y*z", "--g", "2 - 2*x*z", "--h", "2 - 2*x*y",
        "--lhs", "x", "--rhs", "y",
    )
    assert code == 0
    assert out == "-2*x*y + 2\n"
    code, out, _ = run_cli(
        "bracket", "--f", "x", "--g", "y", "--h", "z", "--lhs", "x + y", "--rhs", "x + y"
    )
    assert (code, out) == (0, "0\n")


def test_spectrum_text_report():
    code, out, _ = run_cli(
        "spectrum", "--s", "1/2*z^2 - 2*x*y", "--t", "1", "--params", "1:0,1:1"
    )
    assert code == 0
    assert "dimension 0" in out
    assert "point (0, 0, 0)" in out
    assert "x*y - 1/4*z^2" in out
    assert "primitive" in out


def test_spectrum_coordinate_pencil():
    code, out, _ = run_cli("spectrum", "--s", "x", "--t", "y", "--params", "1:0,0:1,1:-1")
    assert code == 0
    assert "dimension 1" in out
    for gen in ("(x)", "(y)", "(x + y)"):
        assert gen in out


def test_spectrum_not_coprime():
    code, _, err = run_cli("spectrum", "--s", "x", "--t", "x", "--params", "1:0")
    assert code == 2
    assert "factor" in err


def test_spectrum_default_t_is_one():
    code, out, _ = run_cli("spectrum", "--s", "1/2*z^2 - 2*x*y", "--params", "1:0")
    assert code == 0
    assert "qm_exact(-2*x*y + 1/2*z^2, 1)" in out


def test_spectrum_bad_param_syntax():
    code, _, err = run_cli("spectrum", "--s", "x", "--params", "1;0")
    assert code == 2
    assert "lambda:mu" in err


def test_spectrum_json_round_trip():
    code, out, _ = run_cli(
        "spectrum", "--s", "1/2*z^2 - 2*x*y", "--params", "1:0,1:1", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "pba/1"
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out


def test_lift_certificate():
    code, out, _ = run_cli("lift", "--f", "x", "--g", "y", "--h", "z", "--weight", "4")
    assert code == 0
    assert "cycles: 0" in out
    assert "point: (-1, -1, -1)" in out
    assert "d[0,0,0]=0" in out and "d[1,0,0]=1" in out
    assert "verified" in out


def test_lift_immediate_single_component():
    code, out, _ = run_cli("lift", "--f", "1 + x^2", "--g", "0", "--h", "0", "--weight", "3")
    assert code == 0
    assert "point: (0, 0, 0)" in out
    assert "b (degree <= 3): x^2 + 1" in out
    assert "d (degree <= 4): x" in out


def test_lift_negative_weight_usage_error():
    code, _, err = run_cli("lift", "--f", "x", "--g", "y", "--h", "z", "--weight", "-2")
    assert code == 2
    assert "non-negative" in err


def test_lift_non_poisson():
    code, out, _ = run_cli("lift", "--f", "y", "--g", "z", "--h", "x", "--weight", "2")
    assert code == 1
    assert "-x - y - z" in out


def test_lift_point_search_failure():
    code, out, _ = run_cli(
        "lift", "--f", "x", "--g", "y", "--h", "z", "--weight", "2", "--search-box", "0"
    )
    assert code == 1
    assert "no certificate" in out


def test_corpus_bundled_passes():
    code, out, _ = run_cli("corpus", "run")
    assert code == 0
    assert out.count("PASS") == 11
    assert "11/11 passed" in out


def test_corpus_detects_mismatch(tmp_path):
    data = json.loads(run_cli("corpus", "run", "--json")[1])
    assert all(e["passed"] for e in data)
    from pba.corpus import bundled_corpus_text

    entries = json.loads(bundled_corpus_text())
    target = next(e for e in entries if e["name"] == "sl2")
    target["expected"]["maximal_points"] = [["1", "1", "1"]]
    bad = tmp_path / "corpus.json"
    bad.write_text(json.dumps([target]))
    code, out, _ = run_cli("corpus", "run", "--file", str(bad))
    assert code == 1
    assert "FAIL  sl2" in out
    assert "maximal_points" in out


def test_corpus_missing_file():
    code, _, err = run_cli("corpus", "run", "--file", "/nonexistent/corpus.json")
    assert code == 2
    assert "cannot read" in err


def test_corpus_malformed_file(tmp_path):
    bad = tmp_path / "corpus.json"
    bad.write_text("{not json")
    code, _, err = run_cli("corpus", "run", "--file", str(bad))
    assert code == 2
    assert "not valid JSON" in err


def test_corpus_json_output():
    code, out, _ = run_cli("corpus", "run", "--json")
    data = json.loads(out)
    assert code == 0
    assert len(data) == 11
    assert all(e["passed"] and e["diffs"] == [] for e in data)


def test_unknown_command_is_usage_error():
    code, _, _ = run_cli("frobnicate")
    assert code == 2
