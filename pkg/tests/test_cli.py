import json

from monomials import cli


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_capture(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_normality_report(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", "1 1 0 0\n0 1 1 0\n0 0 1 1\n1 0 0 1\n")
    code, doc = run_capture(capsys, ["normality", path])
    assert code == 0
    assert doc["results"] == {"normal": True, "method": "hilbert+powers"}
    assert doc["partial"] is False


def test_determinism_and_round_trip(tmp_path, capsys):
    path = write(tmp_path, "c3.txt", "1 1 0\n0 1 1\n1 0 1\n")
    code1, doc1 = run_capture(capsys, ["resurgence", path])
    code2, doc2 = run_capture(capsys, ["resurgence", path])
    assert (code1, doc1) == (code2, doc2)
    assert doc1["results"]["rho_ic"] == "4/3"
    # round-trip: rerunning on the embedded canonical input reproduces it
    path2 = write(tmp_path, "echo.txt", doc1["input"] + "\n")
    code3, doc3 = run_capture(capsys, ["resurgence", path2])
    assert doc3["results"] == doc1["results"]
    assert doc3["input"] == doc1["input"]


def test_containment_q6(tmp_path, capsys):
    path = write(
        tmp_path,
        "q6.txt",
        "1 1 0 0 1 0\n1 0 1 1 0 0\n0 1 1 0 0 1\n0 0 0 1 1 1\n",
    )
    code, doc = run_capture(capsys, ["containment", path, "--r", "1..6"])
    assert code == 0
    assert doc["results"]["containment_function"] == {
        "1": 1, "2": 3, "3": 4, "4": 5, "5": 6, "6": 7
    }


def test_graph_analyze(tmp_path, capsys):
    path = write(tmp_path, "twotri.txt", "6\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n")
    code, doc = run_capture(capsys, ["graph-analyze", path])
    assert code == 0
    res = doc["results"]
    assert res["bipartite"] is False
    assert res["edge_ideal_normal"] is False
    assert res["hochster_configurations"] == 1
    assert res["odd_cycle_condition"] is False
    assert doc["certificates"]["hochster_monomials"] == [
        {"monomial": [1, 1, 1, 1, 1, 1], "z_degree": 3}
    ]


def test_malformed_input_exits_2(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "1 1\nx y\n")
    code, doc = run_capture(capsys, ["normality", path])
    assert code == 2
    assert "error" in doc and doc["error_line"] == 2


def test_precondition_exits_2(tmp_path, capsys):
    path = write(tmp_path, "nonsq.txt", "2 0\n0 1\n")
    code, doc = run_capture(capsys, ["symbolic", path, "--power", "2"])
    assert code == 2
    assert "squarefree" in doc["error"]


def test_budget_exits_3(tmp_path, capsys):
    # relabeled copy of Q6 so no earlier test has cached its powers
    path = write(
        tmp_path,
        "q6b.txt",
        "0 1 1 0 0 1\n0 1 0 1 1 0\n1 0 1 1 0 0\n1 0 0 0 1 1\n",
    )
    code, doc = run_capture(
        capsys, ["symbolic", path, "--power", "6", "--budget-points", "10"]
    )
    assert code == 3
    assert doc["partial"] is True


def test_code_weights_and_vnumber(tmp_path, capsys):
    path = write(tmp_path, "p1f2.txt", "2 2\n1 0\n0 1\n1 1\n")
    code, doc = run_capture(capsys, ["code-weights", path, "--degree", "2"])
    assert code == 0
    assert doc["results"]["minimum_distance"] == 1
    assert doc["results"]["generalized_weights"] == {"1": 1, "2": 2, "3": 3}
    code, doc = run_capture(capsys, ["vnumber", path, "--kind", "points"])
    assert doc["results"]["v_number"] == 2
    ideal_path = write(tmp_path, "c4.txt", "1 1 0 0\n0 1 1 0\n0 0 1 1\n1 0 0 1\n")
    code, doc = run_capture(capsys, ["vnumber", ideal_path])
    assert doc["results"]["v_number"] == 1


def test_invariants_and_mfull_and_cremona(tmp_path, capsys):
    path = write(tmp_path, "paper.txt", "6 0\n0 5\n2 2\n3 1\n")
    code, doc = run_capture(capsys, ["invariants", path])
    assert code == 0
    assert doc["results"]["multiplicity"] == 20
    mf = write(tmp_path, "mfull.txt", "11 0\n8 1\n6 2\n5 3\n1 4\n0 10\n")
    code, doc = run_capture(capsys, ["mfull", mf])
    assert doc["results"]["m_full"] is True
    cm = write(tmp_path, "cremona.txt", "1 1 0\n0 1 1\n1 0 1\n")
    code, doc = run_capture(capsys, ["cremona", cm])
    assert doc["results"]["cremona"] is True


def test_out_file(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", "1 1 0 0\n0 1 1 0\n0 0 1 1\n1 0 0 1\n")
    out = tmp_path / "report.json"
    code = cli.run(["normality", path, "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["results"]["normal"] is True
