import csv
import io
import json

import pytest

from qaff.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_braid_symbolic(capsys):
    code, out, _ = run(capsys, "braid", "--mu", "sym", "--json", "--no-meta")
    assert code == 0
    rows = json.loads(out)["results"]["matrix"]["rows"]
    assert rows == [["1/mu^2", "0", "0", "0"], ["0", "0", "1/mu^2", "0"],
                    ["0", "mu^2", "0", "0"], ["0", "0", "0", "mu^2"]]


def test_curvature_c11(capsys):
    code, out, _ = run(capsys, "curvature", "--p", "1", "--q", "1", "--json", "--no-meta")
    report = json.loads(out)
    assert code == 0
    assert report["results"]["c_pq"] == "(-mu^8+2*mu^4-1)/mu^4"
    assert report["results"]["c_pq_factored"] == "(1-mu^-4)*(1-mu^4)"
    assert [c["status"] for c in report["checks"]] == ["pass"]


def test_verify_all_at_minus_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-degree", "3", "--mu", "-1", "--json", "--no-meta")
    report = json.loads(out)
    assert code == 0
    assert report["results"]["upsilon_dimension"] == 3
    assert all(c["status"] == "pass" for c in report["checks"])


def test_schema(capsys):
    code, out, _ = run(capsys, "relations", "--json")
    report = json.loads(out)
    assert set(report) == {"command", "mu", "params", "results", "checks", "schema", "meta"}
    assert report["schema"] == "qaff/1" and report["command"] == "relations"
    assert all(set(c) <= {"name", "status", "witness"} for c in report["checks"])


@pytest.mark.parametrize("argv", [["braid"], ["symalg"], ["curvature", "--n", "3"], ["gamma", "--mu", "1/2"],
                                  ["sigma", "xi", "a"], ["translation", "xis"]])
def test_deterministic_json(capsys, argv):
    first = run(capsys, *argv, "--json", "--no-meta")
    second = run(capsys, *argv, "--json", "--no-meta")
    assert first == second and first[0] == 0


def test_csv_tables(capsys):
    code, out, _ = run(capsys, "curvature", "--csv", "--max-degree", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["p", "q", "c_pq", "c_pq_factored", "status"]
    assert len(rows) == 1 + 5 and all(r[-1] == "pass" for r in rows[1:])
    code, out, _ = run(capsys, "symalg", "--csv")
    assert out.splitlines()[:3] == ["degree,dim_S,dim_exterior", "0,1,1", "1,2,2"]


@pytest.mark.parametrize("argv,code", [
    (["coproduct", "xi**U"], 2),
    (["coproduct", "e+"], 2),
    (["antipode", "a*g"], 2),
    (["coproduct", "xi/(mu-mu)"], 2),
    (["curvature", "--p", "0", "--q", "0"], 2),
    (["braid", "--mu", "x"], 2),
    (["nosuchcommand"], 2),
    (["translaton", "--mutation", "weight"], 1),
    (["translaton", "--mutation", "regular"], 1),
    (["translaton"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_syntax_error_reports_offset(capsys):
    code, _, err = run(capsys, "coproduct", "xi**U")
    assert code == 2 and "offset 3" in err


@pytest.mark.parametrize("expr,target", [("xi*U^2", "affine"), ("a*xi", "bundle"), ("e+*a", "horizontal"),
                                         ("(1-mu^2)*xis", "affine")])
def test_evaluation_target(expr, target):
    from qaff.cli import target_of
    from qaff.expr import parse

    assert target_of(parse(expr)) == target


def test_expression_values(capsys):
    code, out, _ = run(capsys, "coproduct", "xi", "--json", "--no-meta")
    assert json.loads(out)["results"]["coproduct"] == "1 (x) xi + xi (x) U^2"
    code, out, _ = run(capsys, "antipode", "xi", "--json", "--no-meta")
    assert json.loads(out)["results"]["antipode"] == "-mu^2*U^(-2)*xi"
    code, out, _ = run(capsys, "coproduct", "a", "--json", "--no-meta")
    assert json.loads(out)["results"]["coaction"] == "a (x) U"
