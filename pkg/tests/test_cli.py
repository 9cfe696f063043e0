"""The command-line interface: verdict exit codes and report shapes."""

import json

import pytest

from pmkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_catalog_token(capsys):
    code, out, _ = run(capsys, "validate", "q6:2,4")
    assert code == 0
    assert "valid: true" in out


def test_validate_bad_document(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(
        json.dumps({"elements": ["a", "b", "c"], "leq": [], "zeta": ["b", "c", "a"]})
    )
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert "InvolutionBroken" in out


def test_validate_unknown_token(capsys):
    code, out, _ = run(capsys, "validate", "qq9")
    assert code == 1


def test_kind_reports_all_fields(capsys):
    code, out, _ = run(capsys, "kind", "grid:5")
    assert code == 0
    assert "regular: true" in out
    assert "kleene: true" in out
    assert "width: 2" in out
    assert "range: 2" in out


def test_simple_verdicts(capsys):
    code, out, _ = run(capsys, "simple", "q3")
    assert code == 0 and "simple: true" in out and "component:" in out


def test_simple_error_on_nonregular(capsys):
    code, _, err = run(capsys, "simple", "chain3")
    assert code == 2
    assert "NotRegular" in err


def test_components(capsys):
    code, out, _ = run(capsys, "components", "q3")
    assert code == 0
    assert "count: 2" in out


def test_dual_with_tables(capsys):
    code, out, _ = run(capsys, "dual", "q2", "--tables")
    assert code == 0
    assert "size: 3" in out
    assert "star:" in out and "prime:" in out


def test_congruences(capsys):
    code, out, _ = run(capsys, "congruences", "q2")
    assert code == 0
    assert "count: 2" in out


def test_morphism_found(capsys):
    code, out, _ = run(capsys, "morphism", "q6:0,3", "q5")
    assert code == 0
    assert "found: true" in out and "witness:" in out


def test_morphism_not_found(capsys):
    code, out, _ = run(capsys, "morphism", "q5", "q6:0,3")
    assert code == 1
    assert "found: false" in out


def test_iso_exit_codes(capsys):
    assert run(capsys, "iso", "q6:1,4", "q6:1,4")[0] == 0
    assert run(capsys, "iso", "q6:1,4", "q6:2,4")[0] == 1


def test_member_true_false_and_oracle(capsys):
    code, out, _ = run(capsys, "member", "--p", "3", "--q", "6", "--m", "7", "--n", "8")
    assert code == 0 and "member: true" in out
    code, out, _ = run(capsys, "member", "--p", "2", "--q", "6", "--m", "7", "--n", "8")
    assert code == 1 and "member: false" in out
    code, out, _ = run(
        capsys, "member", "--p", "0", "--q", "3", "--m", "0", "--n", "4", "--oracle"
    )
    assert code == 0 and "oracle: true" in out


def test_member_bad_label_is_usage_error(capsys):
    code, _, err = run(capsys, "member", "--p", "0", "--q", "2", "--m", "0", "--n", "3")
    assert code == 2
    assert "BadLabel" in err


def test_lattice_reports_fourteen(capsys):
    code, out, _ = run(capsys, "lattice", "q0", "q1", "q2", "q3", "q4", "q5")
    assert code == 0
    assert "nontrivial subvarieties: 14" in out
    assert "digraph" in out


def test_subalg(capsys):
    code, out, _ = run(capsys, "subalg", "grid:5", "--gens", "x0")
    assert code == 0
    size = int(out.split("size: ")[1].split()[0])
    assert size >= 5


def test_subalg_repeated_flags_accumulate(capsys):
    code, out, _ = run(
        capsys, "subalg", "grid:5", "--gens", "x0", "--gens", "x1,x2"
    )
    assert code == 0
    # the single-singleton closure is already large; two generators at least match it
    size = int(out.split("size: ")[1].split()[0])
    assert size >= 77


def test_subalg_rejects_unknown_names(capsys):
    code, _, err = run(capsys, "subalg", "grid:5", "--gens", "bogus")
    assert code == 2


def test_grow(capsys):
    code, out, _ = run(capsys, "grow", "5")
    assert code == 0
    assert "size:" in out


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("PMKIT_BUDGET", "1")
    code, _, err = run(capsys, "morphism", "q6:0,4", "q6:0,3")
    assert code == 2
    assert "SearchBudgetExceeded" in err


def test_budget_env_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("PMKIT_BUDGET", "lots")
    code, _, err = run(capsys, "morphism", "q2", "q0")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert run(capsys, "member", "--p", "1")[0] == 2


def test_file_space_through_cli(tmp_path, capsys):
    doc = {"elements": ["x", "zx"], "leq": [["x", "zx"]], "zeta": [["x", "zx"]]}
    path = tmp_path / "two_chain.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "iso", str(path), "q2")
    assert code == 0


def test_bad_catalog_params_reported(capsys):
    code, _, err = run(capsys, "kind", "q6:9,2")
    assert code == 2
    assert "BadParams" in err


def test_verify_paper_exit_codes(capsys, monkeypatch):
    from pmkit import acceptance

    monkeypatch.setattr(
        acceptance, "CRITERIA", [("stub", lambda budget: (True, "ok"))]
    )
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "PASS" in out and "summary: 1/1 passed" in out

    monkeypatch.setattr(
        acceptance, "CRITERIA", [("stub", lambda budget: (False, "broken"))]
    )
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1
    assert "FAIL" in out
