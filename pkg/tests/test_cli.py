import json

import pytest

from exact1q.cli import main
from exact1q.jsonio import (
    function_from_dict,
    function_to_dict,
    parse_rational,
    witness_from_dict,
    witness_to_dict,
)
from exact1q.core import from_strings
from exact1q.errors import SchemaError
from exact1q.feasibility import decide


@pytest.fixture
def deutsch_file(tmp_path):
    path = tmp_path / "fn.json"
    path.write_text(json.dumps({"n": 2, "ones": ["01", "10"], "zeros": ["00", "11"]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_roundtrip(capsys, deutsch_file):
    code, out, _ = run(capsys, "decide", deutsch_file)
    assert code == 0
    data = json.loads(out)
    assert data["feasible"] is True
    assert data["witness"] == {"z0": "0", "z": ["1/2", "1/2"]}


def test_decide_constant_is_exit_2(capsys, tmp_path):
    path = tmp_path / "const.json"
    path.write_text(json.dumps({"n": 2, "ones": ["00", "11"], "zeros": []}))
    code, _, err = run(capsys, "decide", str(path))
    assert code == 2
    assert "non-constant" in err


def test_missing_file_is_exit_3(capsys):
    code, _, err = run(capsys, "decide", "/nonexistent/fn.json")
    assert code == 3


def test_malformed_json_is_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "decide", str(path))
    assert code == 2


def test_reduce_emits_schema(capsys, deutsch_file):
    code, out, _ = run(capsys, "reduce", deutsch_file)
    assert code == 0
    data = json.loads(out)
    assert data == {"n": 2, "ones": ["01", "10"], "zeros": ["00"]}
    # emitted function JSON re-parses to an equal value
    assert function_to_dict(function_from_dict(data)) == data


def test_represent_and_polyfn(capsys, deutsch_file):
    code, out, _ = run(capsys, "represent", deutsch_file)
    assert code == 0
    assert json.loads(out) == {"coefficients": ["1", "1"]}

    code, out, _ = run(capsys, "polyfn", "--coeffs", "1/2,1/2,1/2")
    assert code == 0
    data = json.loads(out)
    assert data["zeros"] == ["000"]
    assert data["ones"] == ["011", "101", "110"]


def test_construct_and_dj(capsys):
    code, out, _ = run(capsys, "construct", "--k", "0,2,6", "--a", "1/6,1/12")
    assert code == 0
    data = json.loads(out)
    assert data["level_solutions"] == [[1, 4], [2, 2]]
    assert len(data["function"]["ones"]) == 8

    code, out, _ = run(capsys, "dj", "--n", "4")
    assert code == 0
    family = json.loads(out)
    assert [len(fn["ones"]) for fn in family] == [6, 4, 1]


def test_construct_bad_profile_is_exit_2(capsys):
    code, _, err = run(capsys, "construct", "--k", "0,2", "--a", "1/8")
    assert code == 2
    assert "total weight" in err


def test_enumerate_csv_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["enumerate", "--n", "3", "--out", str(a)]) == 0
    assert main(["enumerate", "--n", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == (
        "support,feasible,witness,symmetric,fewer_bits,dj_computable,"
        "maximal,included_by,non_trivial"
    )
    assert len(lines) == 1 + 127


def test_enumerate_workers_match_single(tmp_path, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["enumerate", "--n", "3", "--out", str(a)]) == 0
    monkeypatch.setenv("EXACT1Q_WORKERS", "2")
    assert main(["enumerate", "--n", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_tables_n3_report(capsys, tmp_path):
    out = tmp_path / "report.json"
    assert main(["tables", "--n", "3", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["n"] == 3
    assert all(row["agree"] for row in report["rows"])
    assert report["derived_nontrivial_count"] == 0


def test_simulate_cli(capsys, deutsch_file, tmp_path):
    f = from_strings(2, ones=["01", "10"], zeros=["00", "11"])
    wfile = tmp_path / "w.json"
    wfile.write_text(json.dumps(witness_to_dict(decide(f).witness)))
    code, out, _ = run(capsys, "simulate", deutsch_file, "--witness", str(wfile))
    assert code == 0
    data = json.loads(out)
    assert data["min_success"] >= 1 - 1e-9


def test_rational_parsing():
    assert parse_rational("3/4") == parse_rational("6/8")
    assert str(parse_rational("-2")) == "-2"
    for bad in ("0.5", "1e-3", "a/b", ""):
        with pytest.raises(SchemaError):
            parse_rational(bad)


def test_witness_schema_consistency():
    w = witness_from_dict({"z0": "0", "z": ["1/2", "1/2"]})
    assert witness_to_dict(w) == {"z0": "0", "z": ["1/2", "1/2"]}
    with pytest.raises(SchemaError):
        witness_from_dict({"z0": "1/4", "z": ["1/2", "1/2"]})
    with pytest.raises(SchemaError):
        witness_from_dict({"z": ["0.5", "0.5"]})


def test_function_json_duplicate_rejected():
    with pytest.raises(SchemaError, match="duplicate"):
        function_from_dict({"n": 2, "ones": ["01", "01"], "zeros": []})
    with pytest.raises(SchemaError, match="bad bitstring"):
        function_from_dict({"n": 2, "ones": ["012"], "zeros": []})
