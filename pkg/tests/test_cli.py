import json
from pathlib import Path


from sweedler.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_ok(capsys):
    code, out = run(capsys, "validate", fixture("f2_c2.json"))
    report = json.loads(out)
    assert code == 0
    assert report["status"] == "ok"
    assert report["result"]["kind"] == "hopf"


def test_validate_broken_coassociativity_reports_witness(capsys):
    code, out = run(capsys, "validate", fixture("broken_coassoc.json"))
    report = json.loads(out)
    assert code == 3
    assert report["status"] == "error"
    witnesses = {f["axiom"]: f["witness"] for f in report["failures"]}
    assert len(witnesses["coassociativity"]) == 3


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, out = run(capsys, "validate", str(bad))
    assert code == 2
    assert json.loads(out)["error"] == "ParseError"


def test_antipode_absent_is_success(capsys):
    code, out = run(capsys, "antipode", fixture("idempotent_f2.json"))
    report = json.loads(out)
    assert code == 0
    assert report["result"]["antipode"] == {"present": False}


def test_antipode_present(capsys):
    code, out = run(capsys, "antipode", fixture("sweedler4_f3.json"))
    report = json.loads(out)
    assert code == 0
    antipode = report["result"]["antipode"]
    # s(x) = -gx: the gx-row of the x-column carries 2 = -1 mod 3
    assert antipode["present"] and antipode["matrix"][3][2] == "2"


def test_opantipode_absent(capsys):
    code, out = run(capsys, "opantipode", fixture("idempotent_f2.json"))
    assert code == 0
    assert json.loads(out)["result"]["opantipode"] == {"present": False}


def test_enumerate_measurings_counts(capsys):
    code, out = run(capsys, "enumerate-measurings",
                    fixture("f2_c2.json"), fixture("f2_trivial.json"), "2")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["total"] == 4
    assert report["result"]["orbit_count"] == 2


def test_budget_exceeded_exit_code(capsys):
    code, out = run(capsys, "enumerate-measurings",
                    fixture("f2_c2.json"), fixture("f2_trivial.json"), "2",
                    "--budget", "2")
    assert code == 4
    assert json.loads(out)["error"] == "BudgetExceeded"


def test_grouplikes_over_q_is_unsupported(capsys):
    code, out = run(capsys, "grouplikes", fixture("q_c2.json"))
    assert code == 5
    assert json.loads(out)["error"] == "UnsupportedField"


def test_reports_are_byte_identical_across_runs(capsys):
    outputs = []
    for _ in range(2):
        _, out = run(capsys, "enumerate-measurings",
                     fixture("f2_c2.json"), fixture("f2_trivial.json"), "2")
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_seed_is_recorded(capsys):
    code, out = run(capsys, "fusion", fixture("q_c2.json"), "--seed", "42")
    report = json.loads(out)
    assert code == 0 and report["seed"] == 42


def test_dual_document_roundtrips_through_validate(tmp_path, capsys):
    out_path = tmp_path / "dual.json"
    code, _ = run(capsys, "dual", fixture("m2_f2.json"),
                  "--format", "document", "--output", str(out_path))
    assert code == 0
    code, out = run(capsys, "validate", str(out_path))
    assert code == 0
    assert json.loads(out)["result"]["kind"] == "coalgebra"


def test_convolution_command(capsys):
    code, out = run(capsys, "convolution", fixture("f2_c2.json"),
                    fixture("f2_trivial.json"), "--format", "document")
    doc = json.loads(out)
    assert code == 0
    assert doc["dim"] == 2 and doc["field"] == "F2"


def test_reconstruct_command(capsys):
    code, out = run(capsys, "reconstruct", fixture("f2_c2_regular.measuring.json"))
    report = json.loads(out)
    assert code == 0
    assert report["result"]["d"]["dim"] == 2
    assert len(report["result"]["projections"]) == 1


def test_tensor_command_uses_bialgebra_structure(capsys):
    code, out = run(capsys, "tensor", fixture("q_c2_sign.measuring.json"),
                    fixture("q_c2_sign.measuring.json"), "--format", "document")
    doc = json.loads(out)
    assert code == 0
    # sign (x) sign = trivial character: psi sends both basis vectors to 1
    assert doc["xdim"] == 1
    assert doc["psi"] == [[[0, 0], ["1"]], [[1, 0], ["1"]]]


def test_compose_command(capsys):
    code, out = run(capsys, "compose", fixture("q_c2_identity.measuring.json"),
                    fixture("q_c2_sign.measuring.json"), "--format", "document")
    doc = json.loads(out)
    assert code == 0
    assert doc["a"] == "q_c2.json" and doc["b"] == "q_trivial.json"


def test_compose_mismatch_is_a_precondition_failure(capsys):
    code, out = run(capsys, "compose", fixture("q_c2_sign.measuring.json"),
                    fixture("q_c2_sign.measuring.json"))
    assert code == 5


def test_graded_check_command(capsys):
    code, out = run(capsys, "graded-check", fixture("graded_line_q.json"))
    report = json.loads(out)
    assert code == 0
    assert report["result"]["valid"] and report["result"]["connected"]


def test_graded_check_requires_degrees(capsys):
    code, _ = run(capsys, "graded-check", fixture("q_c2.json"))
    assert code == 3


def test_degree0_command(capsys):
    code, out = run(capsys, "degree0", fixture("graded_dualnum_f2_deg1.json"),
                    "--format", "document")
    doc = json.loads(out)
    assert code == 0
    assert doc["dim"] == 1 and doc["basis"] == ["1"]


def test_tambara_commands(capsys):
    code, out = run(capsys, "tambara-presentation", fixture("f2_c2.json"),
                    fixture("f2_dualnum.json"), "--format", "document")
    doc = json.loads(out)
    assert code == 0
    assert doc["generators"] == ["x_{1,y}", "x_{g,y}"]
    code, out = run(capsys, "tambara-check", fixture("f2_c2.json"),
                    fixture("f2_dualnum.json"), "--n", "1")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["matched"] and report["result"]["module_count"] == 2


def test_morphisms_command(capsys):
    code, out = run(capsys, "morphisms", fixture("f2_c2.json"), fixture("m2_f2.json"))
    report = json.loads(out)
    assert code == 0
    assert report["result"]["count"] == 4


def test_dual_of_a_dual_is_an_algebra_document(tmp_path, capsys):
    first = tmp_path / "dual.json"
    second = tmp_path / "double.json"
    run(capsys, "dual", fixture("m2_f2.json"), "--format", "document",
        "--output", str(first))
    code, _ = run(capsys, "dual", str(first), "--format", "document",
                  "--output", str(second))
    assert code == 0
    code, out = run(capsys, "validate", str(second))
    assert json.loads(out)["result"]["kind"] == "algebra"


def test_opantipode_present(capsys):
    code, out = run(capsys, "opantipode", fixture("sweedler4_f3.json"))
    report = json.loads(out)
    assert code == 0 and report["result"]["opantipode"]["present"]


def test_enumerate_measurings_dimension_one(capsys):
    code, out = run(capsys, "enumerate-measurings",
                    fixture("f2_c2.json"), fixture("f2_trivial.json"), "1")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["total"] == 1 and report["result"]["orbit_count"] == 1


def test_tensor_endo_mode(capsys):
    code, out = run(capsys, "tensor", fixture("q_c2_identity.measuring.json"),
                    fixture("q_c2_identity.measuring.json"), "--mode", "endo",
                    "--format", "document")
    doc = json.loads(out)
    assert code == 0 and doc["xdim"] == 1


def test_degree0_of_graded_hopf_document(capsys):
    code, out = run(capsys, "degree0", fixture("graded_line_f2.json"),
                    "--format", "document")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 1


def test_reconstruct_without_intertwiners(capsys):
    code, out = run(capsys, "reconstruct", fixture("f2_c2_regular.measuring.json"),
                    "--auto-intertwiners", "false")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["d"]["dim"] == 4


def test_fusion_command_reports_invertibility(capsys):
    code, out = run(capsys, "fusion", fixture("idempotent_f2.json"))
    report = json.loads(out)
    assert code == 0
    assert not report["result"]["h"]["invertible"]
    code, out = run(capsys, "fusion", fixture("q_c2.json"))
    assert json.loads(out)["result"]["h"]["invertible"]
