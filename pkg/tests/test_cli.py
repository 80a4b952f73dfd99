import json

import pytest

from cherednik2.cli import main
from cherednik2.labels import ParamsError
from cherednik2.cli import params_from_json


@pytest.fixture
def p6_file(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({"r": 3, "c0": "1", "d": ["5", "0", "-5"]}))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_load_params_validation():
    assert params_from_json({"r": 3, "c0": "1", "d": ["5", "0", "-5"]}).r == 3
    with pytest.raises(ParamsError):
        params_from_json({"r": 3, "c0": "1", "d": ["1", "0", "0"]})
    with pytest.raises(ParamsError):
        params_from_json({"r": 3, "c0": "1", "d": ["1", "-1"]})
    with pytest.raises(ParamsError):
        params_from_json({"r": 3, "c0": "x", "d": ["0", "0", "0"]})


def test_bad_params_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"r": 3, "c0": "1", "d": ["1", "0", "0"]}))
    code, _, err = run(capsys, ["labels", "--params", str(bad)])
    assert code == 2 and "error" in err


def test_labels_command(p6_file, capsys):
    code, out, _ = run(capsys, ["labels", "--params", p6_file])
    assert code == 0
    payload = json.loads(out)["result"]
    assert len(payload["labels"]) == 9
    row0 = next(x for x in payload["labels"] if x["label"] == "row:0")
    assert row0["charged_contents"] == [["5", "8"]]


def test_act_command(p6_file, capsys):
    code, out, _ = run(capsys, ["act", "--params", p6_file, "--label", "row:0",
                                "--elem", "x1^1", "--op", "y1"])
    assert code == 0
    assert "(-12)*1 (x) vT" in out
    code, out, _ = run(capsys, ["act", "--params", p6_file, "--label", "pair:0,1",
                                "--elem", "x1^2*x2^1@T1", "--op", "w:0,0,s"])
    assert code == 0
    assert "(1)*x1^1*x2^2 (x) vT2" in out


def test_singular_construct_command(p6_file, capsys):
    code, out, _ = run(capsys, ["singular", "construct", "--params", p6_file,
                                "--label", "row:0", "--case", "row_c:n=8,k=2"])
    assert code == 0
    assert "(1)*x1^8 (x) vT" in out
    payload = json.loads(out[out.index("{"):])["result"]
    assert payload["constructed"][0]["coefficients"]["beta_0"] == "-1"


def test_singular_search_command(p6_file, capsys):
    code, out, _ = run(capsys, ["singular", "search", "--params", p6_file,
                                "--label", "row:0", "--max-degree", "8"])
    assert code == 0
    assert "deg" not in out.splitlines()[0] or True
    payload = json.loads(out[out.index("{"):])["result"]
    # lowest nontrivial singular vector in Delta(row:0) at these parameters
    assert any(item["degree"] == 8 for item in payload["singular"])


def test_hom_command(p6_file, capsys):
    code, out, _ = run(capsys, ["hom", "check", "--params", p6_file,
                                "--from", "pair:1,2", "--to", "pair:0,1",
                                "--brute", "--max-degree", "12"])
    assert code == 0
    payload = json.loads(out[out.index("{"):])["result"]
    assert payload["exists"] is True
    assert payload["brute_dimension"] == 2
    assert sorted(i["rule"] for i in payload["rules"]) == [9, 16, 16]


def test_diagram_command(p6_file, tmp_path, capsys):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, ["diagram", "--params", p6_file, "--dot", str(dot)])
    assert code == 0
    text = dot.read_text()
    assert text.count("->") == 21
    code, out, _ = run(capsys, ["diagram", "--params", p6_file, "--dot", "-",
                                "--reduce"])
    assert code == 0
    assert out[:out.index("{\n  ")].startswith("digraph")


def test_verify_command(p6_file, capsys):
    code, out, _ = run(capsys, ["verify", "--params", p6_file, "--label", "row:0",
                                "--elem", "x1^10*x2^10", "--oracle"])
    assert code == 0 and "singular" in out
    code, out, _ = run(capsys, ["verify", "--params", p6_file, "--label", "row:0",
                                "--elem", "x1^1"])
    assert code == 1 and "not singular" in out


def test_repro_example35(capsys):
    code, out, _ = run(capsys, ["repro", "example35"])
    assert code == 0
    assert "MATCH" in out
    assert "-12/23" in out and "-1956/2185" in out and "96/115" in out


def test_repro_bit_identical_across_runs(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, ["repro", "example36"])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_repro_example36(capsys):
    code, out, _ = run(capsys, ["repro", "example36"])
    assert code == 0
    assert out.count("ok") >= 21
    assert "MISMATCH" not in out


def test_json_roundtrip_through_cli(p6_file, capsys):
    # the JSON an act command emits re-parses to the same element
    from cherednik2.cli import load_params
    from cherednik2.standard_module import ModElem
    from cherednik2.labels import Label
    code, out, _ = run(capsys, ["act", "--params", p6_file, "--label", "pair:0,1",
                                "--elem", "5/3*x1^3*x2^2@T2", "--op", "y2"])
    assert code == 0
    payload = json.loads(out[out.index("{"):])["result"]
    p = load_params(p6_file)
    elem = ModElem.from_json(payload["image"], p)
    assert elem.to_json() == payload["image"]
