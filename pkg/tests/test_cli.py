import json

import pytest

from powergraphs.cli import main, parse_group_spec


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_group_spec():
    assert parse_group_spec("cyclic:12").size == 12
    assert parse_group_spec("abelian:2,2,3").size == 12
    assert parse_group_spec("abelian:2^2,3^2").size == 36
    assert parse_group_spec("quaternion:16").name == "Q16"
    assert parse_group_spec("dihedral:10").name == "D10"
    for bad in ("cyclic", "ring:4", "abelian:4^1", "cyclic:x"):
        with pytest.raises(ValueError):
            parse_group_spec(bad)


def test_kappa_command(capsys):
    code, out, _ = run(capsys, "kappa", "--group", "cyclic:12")
    assert code == 0
    assert "kappa 6" in out


def test_kappa_command_json(capsys):
    code, out, _ = run(capsys, "kappa", "--group", "cyclic:12", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kappa"] == 6
    assert len(payload["cutset"]) == 6 and 0 in payload["cutset"]


def test_kappa_complete_graph(capsys):
    code, out, _ = run(capsys, "kappa", "--group", "cyclic:8", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kappa"] == 7 and payload["cutset"] is None


def test_cutsets_all(capsys):
    code, out, _ = run(capsys, "cutsets", "--group", "cyclic:18", "--all", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kappa"] == 9
    assert len(payload["cutsets"]) == 2


def test_maximal_cyclics(capsys):
    code, out, _ = run(capsys, "maximal-cyclics", "--group", "quaternion:16", "--json")
    assert code == 0
    payload = json.loads(out)
    orders = sorted(r["order"] for r in payload["maximal_cyclic_subgroups"])
    assert orders == [4, 4, 4, 4, 8]


def test_verify_match_exit_zero(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "thm12", "--group", "abelian:3,3,5", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "match"
    assert payload["observed_cutsets"] == [[0, 1, 2, 3, 4]]


def test_verify_text_output(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "thm13", "--group", "abelian:2,2,3")
    assert code == 0
    assert "verdict match" in out
    assert "[x] group is abelian" in out


def test_verify_strict_resource_exit(capsys):
    code, _, _ = run(
        capsys,
        "verify",
        "--theorem",
        "thm11",
        "--group",
        "cyclic:100",
        "--max-brute-vertices",
        "10",
        "--strict",
    )
    assert code == 3


def test_verify_nonstrict_resource_ok(capsys):
    code, _, _ = run(
        capsys,
        "verify",
        "--theorem",
        "thm11",
        "--group",
        "cyclic:100",
        "--max-brute-vertices",
        "10",
    )
    assert code == 0


def test_survey_json(capsys):
    code, out, _ = run(
        capsys, "survey", "--theorem", "thm11", "--max-order", "12", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 11
    assert all(r["verdict"] == "match" for r in payload)


def test_survey_text_deterministic(capsys):
    code1, out1, _ = run(capsys, "survey", "--theorem", "thm13", "--max-order", "20")
    code2, out2, _ = run(capsys, "survey", "--theorem", "thm13", "--max-order", "20")
    assert code1 == code2 == 0
    assert out1 == out2


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "--group", "abelian:2,2")
    assert code == 0
    assert out.splitlines()[0] == 'graph "C2xC2" {'
    assert '  1 [label="1:2"];' in out
    assert "  0 -- 1;" in out
    assert "  1 -- 2;" not in out


def test_export_dot_remove(capsys):
    code, out, _ = run(capsys, "export-dot", "--group", "abelian:2,2", "--remove", "0")
    assert code == 0
    assert "0 [" not in out
    # with the identity removed the star graph has no edges left
    assert not any(" -- " in line for line in out.splitlines())


def test_invalid_spec_exit_two(capsys):
    code, _, err = run(capsys, "kappa", "--group", "cyclic:zero")
    assert code == 2
    assert "error:" in err


def test_invalid_remove_exit_two(capsys):
    code, _, err = run(capsys, "export-dot", "--group", "abelian:2,2", "--remove", "99")
    assert code == 2
    assert "out of range" in err
