import json

import pytest

from depthlab.cli import build_parser, main

TRIANGLE = "vars: x1 x2 x3\nx1 x2\nx1 x3\nx2 x3\n"
NET = "vars: x1 x2 x3 x4 x5 x6\nx1 x4\nx2 x5\nx3 x6\nx4 x5\nx4 x6\nx5 x6\n"


@pytest.fixture()
def files(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def run_doc(capsys, *argv: str) -> tuple[int, dict]:
    code = main([*argv, "--format", "doc"])
    return code, json.loads(capsys.readouterr().out)


def test_parser_commands():
    parser = build_parser()
    args = parser.parse_args(["toric", "i.txt", "--cap-poset-ideals", "5", "--vertex-order", "1,2"])
    assert args.cap_poset_ideals == 5
    assert args.y_order is None
    with pytest.raises(SystemExit):
        parser.parse_args(["construct", "unknown"])


def test_depth_expect(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "depth", path, "--kmax", "3", "--expect", "1,0")
    assert code == 0
    assert document["results"]["profile"] == [1, 0, 0]
    assert document["results"]["dim"] == 1
    assert document["results"]["analytic_spread"] == 3
    assert [row["status"] for row in document["rows"]] == ["PASS"] * 4
    assert document["error"] is None
    assert len(document["inputs_digest"]) == 16


def test_depth_wrong_expect(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    assert main(["depth", path, "--kmax", "2", "--expect", "1,1"]) == 1
    out = capsys.readouterr().out
    assert "FAIL depth S/I^2: expected 1 (expected), observed 0 (oracle)" in out
    assert out.endswith("status: FAIL\n")


def test_input_errors(capsys, files, tmp_path):
    assert main(["depth", str(tmp_path / "missing.txt")]) == 2
    assert "error:" in capsys.readouterr().out
    path = files("bad.txt", "vars: x y\nx z\n")
    code, document = run_doc(capsys, "depth", path)
    assert code == 2
    assert document["error"] == "[Parse error at 2:3] <unknown variable 'z'>"
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "depth", path, "--expect", "1,x")
    assert code == 2


def test_usage_errors_write_report(capsys, files, tmp_path):
    code, document = run_doc(capsys, "depth")
    assert code == 2
    assert "required: file" in document["error"]
    assert document["command"] == ["depth", "--format", "doc"]
    path = files("triangle.txt", TRIANGLE)
    output = tmp_path / "report.json"
    assert main(["depth", path, "--kmax", "two", "--format", "doc", "--output", str(output)]) == 2
    assert "invalid int value" in json.loads(output.read_text(encoding="utf-8"))["error"]
    assert main(["sweep", "unknown"]) == 2
    out = capsys.readouterr()
    assert out.out.startswith("command: sweep unknown")
    assert "invalid choice" in out.err


def test_cap_exceeded(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "depth", path, "--cap-lattice", "2")
    assert code == 2
    assert document["results"]["cap"] == "lattice"
    assert "degrees" in document["results"]["progress"]
    assert document["error"].startswith("[Resource limit] <cap 'lattice'=2 exceeded at k=1")


def test_invalid_configuration(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "depth", path, "--field", "p:4")
    assert code == 2
    assert document["error"].startswith("invalid configuration")
    code, document = run_doc(capsys, "depth", path, "--kmax", "0")
    assert code == 2


def test_document_is_deterministic(files, tmp_path):
    path = files("triangle.txt", TRIANGLE)
    output = str(tmp_path / "report.json")
    documents = []
    for _ in range(2):
        assert main(["depth", path, "--kmax", "2", "--format", "doc", "--output", output]) == 0
        documents.append((tmp_path / "report.json").read_bytes())
    assert documents[0] == documents[1]
    assert b'"timing"' not in documents[0]


def test_field_option(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "betti", path, "--field", "P:3")
    assert code == 0
    assert document["config"]["field"] == "p:3"
    assert document["results"]["betti"]["graded"] == {"(0, 2)": 3, "(1, 3)": 2}
    assert document["results"]["depth"] == 1
    code, document = run_doc(capsys, "betti", path, "--power", "2")
    assert document["results"]["power"] == 2
    assert document["results"]["depth"] == 0


def test_construct_sqfree_veronese(capsys):
    code, document = run_doc(capsys, "construct", "sqfree-veronese", "--n", "4", "--d", "3", "--verify", "--kmax", "3")
    assert code == 0
    assert document["results"]["generators"] == 4
    assert document["results"]["profile"] == [2, 1, 0]
    assert document["results"]["prediction"]["citation"] == "squarefree-veronese-powers"
    assert len(document["rows"]) == 3


def test_construct_edge_net(capsys):
    code, document = run_doc(capsys, "construct", "edge", "--net", "--verify", "--kmax", "1")
    assert code == 0
    assert document["results"]["prediction"]["kind"] == "lower-bound"
    assert document["results"]["profile"] == [3]
    assert document["rows"][0]["expected"] == ">= 3"


def test_construct_out_files(capsys, tmp_path):
    prefix = str(tmp_path / "staircase")
    assert main(["construct", "staircase", "--f", "0,1,2", "--out", prefix]) == 0
    capsys.readouterr()
    ideal_text = (tmp_path / "staircase.ideal").read_text(encoding="utf-8")
    assert ideal_text.startswith("# family: staircase\nvars: x1 x2 y1 y2\n")
    assert len(ideal_text.splitlines()) == 8
    prediction = json.loads((tmp_path / "staircase.prediction.json").read_text(encoding="utf-8"))
    assert prediction["profile"] == [0, 1, 2]
    assert prediction["tail"] == 2


def test_construct_veronese_caveat(capsys):
    code, document = run_doc(capsys, "construct", "veronese", "--n", "2", "--d", "2", "--bounds", "2,2", "-v")
    assert code == 0
    assert "negative" in document["results"]["prediction"]["caveat"]
    assert any(line.startswith("WARNING depthlab.cli") for line in document["log"])


def test_construct_invalid(capsys):
    code, document = run_doc(capsys, "construct", "decreasing", "--f", "4,3,2")
    assert code == 2
    assert document["error"].startswith("[Invalid spec: f(0) = 2 lim f + 1]")
    code, document = run_doc(capsys, "construct", "veronese", "--n", "2")
    assert code == 2


def test_toric_net_bounds(capsys, files):
    path = files("net.txt", NET)
    code, document = run_doc(capsys, "toric", path, "--vertex-order", "1,2,3,4,5,6", "--bounds", "--kmax", "3")
    assert code == 0
    results = document["results"]
    assert results["kernel_size"] == 12
    assert results["initial_generators"] == 12
    assert results["bounds"] == [3, 0, 0]
    assert results["limit_bound"] == 0
    assert results["x_condition"] is True
    assert results["order"].startswith("revlex(")


def test_toric_edge_ideal_default_order(capsys, files):
    path = files("net.txt", NET)
    code, document = run_doc(capsys, "toric", path, "--bounds", "--kmax", "3")
    assert code == 0
    results = document["results"]
    assert results["order"].startswith("revlex(")
    assert results["x_condition"] is True
    assert results["initial_generators"] == 12
    assert results["bounds"] == [3, 0, 0]
    assert results["limit_bound"] == 0
    _, explicit = run_doc(capsys, "toric", path, "--vertex-order", "1,2,3,4,5,6", "--bounds", "--kmax", "3")
    assert explicit["results"]["basis"] == results["basis"]


def test_toric_without_x_condition(capsys, files):
    path = files("squares.txt", "vars: x1 x2\nx1^2\nx2^2\n")
    code, document = run_doc(capsys, "toric", path, "--bounds")
    assert code == 0
    assert document["results"]["order"].startswith("lex(")
    assert document["results"]["x_condition"] is False
    assert document["results"]["bounds"] == "x-condition fails, no bounds"


def test_linquot_revlex(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "linquot", path, "--order", "revlex")
    assert code == 0
    assert document["results"]["q"] == 1
    assert document["rows"][0]["expected"] == document["rows"][0]["observed"] == 1


def test_linquot_search_and_files(capsys, files):
    path = files("ci.txt", "vars: x1 x2 x3 x4\nx1 x2\nx3 x4\n")
    code, document = run_doc(capsys, "linquot", path)
    assert code == 0
    assert document["results"]["result"] == "no linear quotients order"
    ordering = files("order.txt", "x1 x2\nx3 x4\n")
    code, document = run_doc(capsys, "linquot", path, "--order", ordering)
    assert code == 1
    assert document["rows"][0]["observed"] == "violation at step 2"
    ordering = files("short.txt", "x1 x2\n")
    code, _ = run_doc(capsys, "linquot", path, "--order", ordering)
    assert code == 2


def test_linquot_poset_power(capsys, files):
    poset = files("chain.txt", "elements: a b\ncover: a < b\n")
    code, document = run_doc(capsys, "linquot", "--poset", poset, "--order", "hp", "--power", "2")
    assert code == 0
    assert document["results"]["delta"] == 2
    assert document["results"]["q"] == 2
    assert document["results"]["delta_witness"] == "{a} | {b}"
    assert [row["status"] for row in document["rows"]] == ["PASS", "PASS"]


def test_sweep_sqfree_veronese(capsys):
    code, document = run_doc(capsys, "sweep", "sqfree-veronese", "--nmax", "4", "--kmax", "2")
    assert code == 0
    assert document["results"]["instances"] == 3
    assert document["results"]["rows"] == 12


def test_verbose_collects_log(capsys, files):
    path = files("triangle.txt", TRIANGLE)
    code, document = run_doc(capsys, "depth", path, "--kmax", "1", "-vv")
    assert code == 0
    assert any(line.startswith("DEBUG depthlab.") for line in document["log"])
    code, document = run_doc(capsys, "depth", path, "--kmax", "1")
    assert document["log"] == []
