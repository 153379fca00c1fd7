"""End-to-end command-line tests: every subcommand, the exit-code contract
and JSON report round-trips."""
import json

import pytest

from modtwist.cli import (
    EXIT_MODEL,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_ORACLE,
    EXIT_PARITY,
    EXIT_USAGE,
    Report,
    main,
)

GOOD_MODEL = {
    "p": 3,
    "group": {"type": "permutation", "generators": {"s": [1, 0]}},
    "rho": {"s": [[0, 1], [1, 0]]},
    "chi": {"s": 2},
    "conj": "s",
    "characters": {"k": {"values": {"s": -1}, "field": -1}},
}

# det rho = eps here, so this model fits cyclotomic levels and clashes with
# non-cyclotomic ones; the converse model flips chi
INCOMPATIBLE_MODEL = dict(GOOD_MODEL, chi={"s": 1}, conj=None)
INCOMPATIBLE_MODEL.pop("conj", None)
INCOMPATIBLE_MODEL = {
    "p": 3,
    "group": {"type": "permutation", "generators": {"s": [1, 0]}},
    "rho": {"s": [[0, 1], [1, 0]]},
    "chi": {"s": 1},
}

INVALID_MODEL = {
    "p": 3,
    "group": {"type": "permutation", "generators": {"s": [1, 0]}},
    "rho": {"s": [[1, 1], [0, 1]]},  # order 3 image of an order 2 generator
    "chi": {"s": 2},
}


@pytest.fixture
def model_path(tmp_path):
    p = tmp_path / "model.json"
    p.write_text(json.dumps(GOOD_MODEL))
    return str(p)


@pytest.fixture
def incompatible_model_path(tmp_path):
    p = tmp_path / "incompatible.json"
    p.write_text(json.dumps(INCOMPATIBLE_MODEL))
    return str(p)


@pytest.fixture
def invalid_model_path(tmp_path):
    p = tmp_path / "invalid.json"
    p.write_text(json.dumps(INVALID_MODEL))
    return str(p)


def run_json(capsys, argv):
    code = main(["--json"] + argv)
    out = capsys.readouterr().out.strip().splitlines()[-1]
    return code, Report.from_json(out)


def test_genus(capsys):
    code, rep = run_json(capsys, ["genus", "4", "3"])
    assert code == EXIT_OK
    assert rep.command == "genus"
    assert rep.outputs["genus"] == 1


def test_genus_oracle_agrees(capsys):
    code, rep = run_json(capsys, ["genus", "4", "5", "--oracle"])
    assert code == EXIT_OK
    assert rep.outputs["genus"] == rep.outputs["oracle_genus"] == 13


def test_genus_plus(capsys):
    code, rep = run_json(capsys, ["genus", "4", "5", "--plus"])
    assert code == EXIT_OK
    assert rep.outputs["genus"] == 4


def test_genus_plus_non_cyclotomic_is_usage_error(capsys):
    assert main(["genus", "2", "3", "--plus"]) == EXIT_USAGE


def test_genus_invalid_level_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["genus", "3", "3"])
    assert exc.value.code == EXIT_USAGE


def test_cusps(capsys):
    code, rep = run_json(capsys, ["cusps", "20", "--oracle"])
    assert code == EXIT_OK
    assert rep.outputs["count"] == rep.outputs["oracle_count"] == 6


def test_cusps_bad_n(capsys):
    assert main(["cusps", "0"]) == EXIT_USAGE


def test_structure_cyclotomic(capsys):
    code, rep = run_json(capsys, ["structure", "4", "3"])
    assert code == EXIT_OK
    assert rep.outputs["structure"] == "DirectProduct"
    assert rep.outputs["order"] == 24


def test_structure_non_cyclotomic(capsys):
    code, rep = run_json(capsys, ["structure", "2", "3"])
    assert code == EXIT_OK
    assert rep.outputs["structure"] == "FullPGL2"
    assert rep.outputs["relations_verified"] is True
    assert rep.outputs["single_conjugacy_class"] is True


def test_scan_lemma(capsys):
    code, rep = run_json(capsys, ["scan", "--lemma", "--max", "71"])
    assert code == EXIT_OK
    pairs = {tuple(x) for x in rep.outputs["pairs"]}
    assert pairs == {(2, 3), (4, 3), (5, 3), (8, 3), (11, 3), (2, 5), (4, 5), (3, 7)}


def test_scan_low_genus(capsys):
    code, rep = run_json(capsys, ["scan", "--max-n", "10", "--max-p", "5"])
    assert code == EXIT_OK
    found = {(row["N"], row["p"]): row["genus"] for row in rep.outputs["levels"]}
    assert found[(4, 3)] == 1


def test_al_fixed(capsys):
    code, rep = run_json(capsys, ["al-fixed", "20", "4"])
    assert code == EXIT_OK
    assert rep.outputs["fixed_points"] == 4
    assert rep.outputs["genus_quotient"] == 0


def test_al_fixed_bad_input(capsys):
    assert main(["al-fixed", "12", "5"]) == EXIT_USAGE


def test_classify(capsys):
    code, rep = run_json(capsys, ["classify", "4", "3"])
    assert code == EXIT_OK and rep.outputs["case"] == "cyclotomic"
    code, rep = run_json(capsys, ["classify", "2", "3"])
    assert code == EXIT_OK and rep.outputs["case"] == "non-cyclotomic"


def test_twist_plan(capsys, model_path):
    code, rep = run_json(capsys, ["twist-plan", "4", "3", model_path, "--k", "-1"])
    assert code == EXIT_OK
    assert rep.outputs["case"] == "cyclotomic"
    assert rep.outputs["cocycles_valid"] is True
    assert any("k=-1" in name for name in rep.outputs["curves"])


def test_twist_plan_parity_exit(capsys, model_path):
    # a det rho = eps model at a non-cyclotomic level is a parity error
    assert main(["twist-plan", "2", "3", model_path]) == EXIT_PARITY


def test_twist_plan_incompatible_at_cyclotomic(capsys, incompatible_model_path):
    assert main(["twist-plan", "4", "3", incompatible_model_path]) == EXIT_PARITY


def test_twist_plan_invalid_model_exit(capsys, invalid_model_path):
    with pytest.raises(SystemExit) as exc:
        main(["twist-plan", "4", "3", invalid_model_path])
    assert exc.value.code == EXIT_MODEL


def test_twist_plan_missing_file():
    with pytest.raises(SystemExit) as exc:
        main(["twist-plan", "4", "3", "/nonexistent/model.json"])
    assert exc.value.code == EXIT_USAGE


def test_cocycle_check(capsys, model_path):
    code, rep = run_json(capsys, ["cocycle-check", model_path])
    assert code == EXIT_OK
    assert rep.outputs["valid"] is True
    assert rep.outputs["ambient"] == "G(N,p)"


def test_cocycle_check_primed(capsys, model_path):
    code, rep = run_json(capsys, ["cocycle-check", model_path, "--variant", "primed"])
    assert code == EXIT_OK
    assert rep.outputs["valid"] is True


def test_cocycle_check_k(capsys, model_path):
    code, rep = run_json(capsys, ["cocycle-check", model_path, "--k", "k"])
    assert code == EXIT_OK
    assert any(v["w"] == 1 for v in rep.outputs["values"].values())


def test_cocycle_check_unknown_k(capsys, model_path):
    assert main(["cocycle-check", model_path, "--k", "zzz"]) == EXIT_MODEL


def test_cocycle_check_incompatible_k(capsys, tmp_path):
    doc = dict(INCOMPATIBLE_MODEL)
    doc["characters"] = {"k": {"values": {"s": -1}, "field": -1}}
    p = tmp_path / "m.json"
    p.write_text(json.dumps(doc))
    # chi_k components need the cyclotomic (det rho = eps) parity
    assert main(["cocycle-check", str(p), "--k", "k"]) == EXIT_PARITY


def test_centralizer(capsys, model_path):
    code, rep = run_json(capsys, ["centralizer", model_path])
    assert code == EXIT_OK
    assert rep.outputs["verdict"] in (
        "Trivial",
        "NontrivialInPSL2",
        "NontrivialOutsidePSL2",
    )


def test_selftest_quick(capsys):
    code, rep = run_json(capsys, ["selftest", "--quick"])
    assert code == EXIT_OK
    assert rep.outputs["ok"] is True
    names = {row["name"] for row in rep.outputs["results"]}
    assert {"arith", "projgroup", "curves", "extgroup", "moduli", "twists"} <= names


def test_report_json_roundtrip():
    rep = Report(command="x", inputs={"a": 1}, outputs={"b": [1, 2]}, elapsed_s=0.5)
    assert Report.from_json(rep.to_json()) == rep


def test_plain_output_lines(capsys):
    code = main(["genus", "4", "3"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "X(4,3): genus 1" in out
