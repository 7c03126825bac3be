"""Command line surface: formats, exit codes, batch files, worker knobs."""

import json
from fractions import Fraction

import pytest

from vicalc.cli import PAPER_LITERAL_REFUSAL, _execute, main


def run(*argv):
    return _execute(list(argv))


def test_vi_json_example():
    code, out, err = run("vi", "--n", "4", "--k", "2", "--g", "1", "--e", "0",
                         "--format", "json")
    assert (code, err) == (0, "")
    assert out == '{"value":"6","integral":true}\n'


def test_vi_text_block():
    code, out, err = run("vi", "--n", "4", "--k", "2", "--g", "1", "--e", "0")
    assert code == 0
    lines = dict(line.split(None, 1) for line in out.splitlines())
    assert lines["value"] == "6"
    assert lines["integral"] == "true"
    assert lines["terms"] == "6"
    assert lines["monomial"] == "-"


def test_vi_csv_schema():
    code, out, err = run("vi", "--n", "4", "--k", "2", "--g", "0", "--e", "0",
                         "--monomial", "1,1,1,1", "--convention", "dual",
                         "--format", "csv")
    assert code == 0
    header, row = out.splitlines()
    assert header == "n,k,g,e,d,monomial,convention,value,integral,terms"
    assert row == '4,2,0,0,0,"1,1,1,1",dual,2,true,6'


def test_count_max_example():
    code, out, err = run("count-max", "--n", "2", "--d", "1", "--k", "1",
                         "--g", "2", "--format", "json")
    assert (code, err) == (0, "")
    assert json.loads(out) == {"value": "4", "integral": True}


def test_count_max_csv_shares_query_schema():
    code, out, err = run("count-max", "--n", "4", "--d", "0", "--k", "2",
                         "--g", "1", "--format", "csv")
    assert code == 0
    header, row = out.splitlines()
    assert header == "n,k,g,e,d,monomial,convention,value,integral,terms"
    assert row == "4,2,1,,0,,dual,6,true,6"


def test_inadmissible_query_exits_3():
    code, out, err = run("vi", "--n", "4", "--k", "2", "--g", "0", "--e", "0",
                         "--monomial", "1")
    assert code == 3
    assert out == ""
    assert "inadmissible query" in err
    assert "degree condition violated" in err


def test_count_max_sign_exponent_exits_3():
    code, out, err = run("count-max", "--n", "3", "--d", "1", "--k", "2", "--g", "2")
    assert code == 3
    assert "non-integral sign exponent" in err


def test_count_max_zero_power_exits_3():
    code, out, err = run("count-max", "--n", "4", "--d", "8", "--k", "2",
                         "--g", "2", "--convention", "paper")
    assert code == 3
    assert "negative power" in err


def test_s_invariant_rational_round_trip():
    code, out, err = run("s-invariant", "--n", "4", "--k", "2", "--g", "1",
                         "--eps", "2", "--group-order", "2",
                         "--weights", "1/4", "--format", "json")
    assert code == 0
    assert Fraction(json.loads(out)["value"]) == Fraction(5, 2)


def test_s_invariant_exponent_form():
    code, out, err = run("s-invariant", "--n", "2", "--k", "1", "--g", "1",
                         "--eps", "1", "--group-order", "2",
                         "--exponents", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == "2"
    code, _, err = run("s-invariant", "--n", "2", "--k", "1", "--g", "1",
                       "--eps", "1", "--weights", "0", "--exponents", "1",
                       "--group-order", "2")
    assert code == 2
    assert "not both" in err


def test_qh_table_single_product():
    code, out, err = run("qh-table", "--k", "2", "--n", "4",
                         "--lhs", "1", "--rhs", "1")
    assert (code, err) == (0, "")
    assert out == "s[1] * s[1] = s[1,1] + s[2]\n"


def test_qh_table_quantum_term():
    code, out, err = run("qh-table", "--k", "2", "--n", "4",
                         "--lhs", "2", "--rhs", "1,1")
    assert code == 0
    assert out == "s[2] * s[1,1] = q*s[]\n"


def test_qh_table_full_box():
    code, out, err = run("qh-table", "--k", "2", "--n", "4")
    assert code == 0
    assert len(out.splitlines()) == 6 * 7 // 2
    code, out, err = run("qh-table", "--k", "2", "--n", "4", "--format", "csv")
    assert out.splitlines()[0] == "left,right,partition,q,coeff"


def test_qh_table_needs_both_sides():
    code, _, err = run("qh-table", "--k", "2", "--n", "4", "--lhs", "1")
    assert code == 2
    assert "together" in err


def test_parabolic_degree_cli():
    code, out, err = run("parabolic-degree", "--rank", "2", "--degree", "0",
                         "--point", "1/4:1,3/4:1", "--format", "json")
    assert (code, err) == (0, "")
    assert json.loads(out) == {"value": "1"}
    code, out, err = run("parabolic-degree", "--rank", "2", "--degree", "0",
                         "--point", "1/4:1,3/4:1", "--format", "csv")
    assert out.splitlines() == [
        "rank,degree,points,value",
        "2,0,1/4:1;3/4:1,1",
    ]
    code, _, err = run("parabolic-degree", "--rank", "2", "--degree", "0",
                       "--point", "nope")
    assert code == 2


def test_corollary_report_differs():
    code, out, err = run("corollary-report", "--n", "2", "--g", "1",
                         "--format", "json")
    assert (code, err) == (0, "")
    assert json.loads(out) == {
        "n": 2, "d": 1, "g": 1, "claimed": "4", "derived": "0", "differ": True,
    }


def test_corollary_report_text_states_both():
    code, out, err = run("corollary-report", "--n", "3", "--g", "2")
    assert code == 0
    assert "published corollary" in out
    assert "root-of-unity sum" in out
    assert "values differ" in out
    assert "not adjudicated" in out


def test_corollary_report_can_agree():
    code, out, err = run("corollary-report", "--n", "3", "--g", "0", "--d", "1")
    assert code == 0
    assert "values agree" in out


def test_paper_literal_refused():
    code, out, err = run("vi", "--n", "4", "--k", "2", "--g", "1", "--e", "0",
                         "--paper-literal")
    assert (code, out) == (2, "")
    assert err == PAPER_LITERAL_REFUSAL
    assert "ordered product" in err
    assert "prod_{i<j}" in err


def test_usage_errors_exit_2():
    assert run("frobnicate")[0] == 2
    assert run("vi", "--n", "4")[0] == 2
    assert run("vi", "--n", "4", "--k", "2", "--g", "1", "--e", "0",
               "--monomial", "spam")[0] == 2


def test_internal_failure_exits_4(monkeypatch):
    def boom(query, workers=0):
        raise RuntimeError("lost exactness")

    monkeypatch.setattr("vicalc.cli.evaluate", boom)
    code, out, err = run("vi", "--n", "4", "--k", "2", "--g", "1", "--e", "0")
    assert code == 4
    assert "internal invariant violation" in err
    assert "lost exactness" in err


def test_workers_do_not_change_bytes():
    argv = ["vi", "--n", "8", "--k", "2", "--g", "1", "--e", "0",
            "--format", "json"]
    serial = run(*argv, "--workers", "1")
    quad = run(*argv, "--workers", "4")
    assert serial == quad
    assert serial[0] == 0


def test_env_overrides_workers_flag(monkeypatch):
    argv = ["vi", "--n", "6", "--k", "2", "--g", "1", "--e", "0",
            "--format", "json", "--workers", "4"]
    monkeypatch.setenv("VI_WORKERS", "1")
    forced = run(*argv)
    monkeypatch.delenv("VI_WORKERS")
    free = run(*argv)
    assert forced == free
    assert forced[0] == 0


def test_batch_runs_in_input_order(tmp_path):
    jobs = [
        {"subcommand": "vi", "output_format": "json",
         "parameters": {"n": 4, "k": 2, "g": 1, "e": 0}},
        {"subcommand": "vi", "output_format": "json",
         "parameters": {"n": 4, "k": 2, "g": 0, "e": 0, "monomial": [1]},
         "convention": "dual"},
        {"subcommand": "count-max", "output_format": "json",
         "parameters": {"n": 2, "d": 1, "k": 1, "g": 2}, "parallelism": 2},
    ]
    path = tmp_path / "jobs.ndjson"
    path.write_text("\n".join(json.dumps(j) for j in jobs) + "\n")
    code, out, err = run("batch", str(path))
    assert code == 3
    assert out.splitlines() == [
        '{"value":"6","integral":true}',
        '{"value":"4","integral":true}',
    ]
    assert "batch line 2:" in err
    assert "degree condition violated" in err


def test_batch_rejects_bad_lines(tmp_path):
    path = tmp_path / "jobs.ndjson"
    path.write_text('{"subcommand": "nope"}\nnot json\n')
    code, out, err = run("batch", str(path))
    assert code == 2
    assert out == ""
    assert "vicalc: batch line 1:" in err
    assert "vicalc: batch line 2:" in err
    assert run("batch", str(tmp_path / "missing.ndjson"))[0] == 2


def test_main_streams_and_code(capsys):
    code = main(["vi", "--n", "4", "--k", "2", "--g", "1", "--e", "0",
                 "--format", "json"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == '{"value":"6","integral":true}\n'
    assert captured.err == ""
