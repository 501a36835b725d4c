"""Command-line interface: exit codes, text output, JSON reports."""

import dataclasses
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from ultrachain import Violation, vector
from ultrachain.cli import main, run

F = Fraction


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_exhaustive_padic(capsys):
    code, out, err = _run(
        capsys, "verify", "--field", "padic:3", "--dim", "1",
        "--v-max", "1", "--unit-bound", "1", "--exhaustive",
    )
    assert code == 0 and err == ""
    assert "pairs evaluated: 49" in out
    assert "all checks hold" in out
    assert "na1:lower" in out and "steps:twice_max" in out
    assert "collapse:combo_max_equality" in out  # |2| = 1 adds collapse


def test_verify_default_checks_on_rationals(capsys):
    code, out, err = _run(
        capsys, "verify", "--field", "rationals", "--dim", "2", "--samples", "200",
    )
    assert code == 0
    assert "checks: mal1, mal2" in out
    assert "tarski" not in out  # scalar identity only applies at dim 1
    code, out, err = _run(
        capsys, "verify", "--field", "rationals", "--dim", "1", "--samples", "200",
    )
    assert code == 0
    assert "checks: tarski, mal1, mal2" in out


def test_verify_reports_skipped_pairs(capsys):
    code, out, err = _run(
        capsys, "verify", "--field", "rationals", "--dim", "1",
        "--unit-bound", "2", "--exhaustive",
    )
    assert code == 0
    assert "skipped for zero-vector precondition" in out


def test_verify_json_to_stdout(capsys):
    code, out, err = _run(
        capsys, "verify", "--field", "padic:2", "--dim", "1",
        "--v-max", "1", "--unit-bound", "1", "--exhaustive", "--json", "-",
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) >= {
        "config", "checks", "pairs_evaluated", "violations", "slack",
        "tight_witnesses",
    }
    assert report["config"]["field"] == "padic:2"
    assert report["config"]["mode"] == "exhaustive"
    assert report["pairs_evaluated"] == 49
    assert report["violation_count"] == 0
    assert report["violations"] == []
    # slack histograms are {value: count} with reduced fraction keys
    assert all(
        isinstance(count, int)
        for hist in report["slack"].values()
        for count in hist.values()
    )


def test_verify_json_file_is_canonical(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, err = _run(
        capsys, "verify", "--field", "padic:2", "--dim", "1", "--samples", "50",
        "--json", str(path), "--quiet",
    )
    assert code == 0 and out == ""
    text = path.read_text()
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert text == json.dumps(parsed, sort_keys=True, indent=2) + "\n"


def test_verify_byte_identical_across_runs(capsys):
    argv = (
        "verify", "--field", "padic:5", "--dim", "2", "--samples", "500",
        "--seed", "31", "--json", "-",
    )
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second


def test_verify_characteristic_two_is_a_usage_error(capsys):
    code, out, err = _run(capsys, "verify", "--field", "tadic:2")
    assert code == 2
    assert "error:" in err and "|2| = 0" in err


def test_verify_collapse_needs_unit_two(capsys):
    code, out, err = _run(
        capsys, "verify", "--field", "padic:2", "--checks", "collapse",
    )
    assert code == 2
    assert "collapse requires |2| = 1" in err


def test_verify_rejects_unknown_checks(capsys):
    code, out, err = _run(capsys, "verify", "--field", "padic:3", "--checks", "bogus")
    assert code == 2 and "unknown checks" in err


def test_verify_rejects_unknown_field(capsys):
    code, out, err = _run(capsys, "verify", "--field", "octonions")
    assert code == 2 and "error:" in err


def test_verify_grid_too_large_is_exit_2(capsys):
    code, out, err = _run(
        capsys, "verify", "--field", "padic:3", "--dim", "3",
        "--v-max", "2", "--unit-bound", "2", "--exhaustive",
    )
    assert code == 2 and "exceed the ceiling" in err


def test_verify_exit_1_on_violations(capsys, monkeypatch):
    # the library's inequalities are theorems, so a violation can only be
    # demonstrated by doctoring a report; the CLI must map it to exit 1
    from ultrachain import cli as cli_mod
    from ultrachain import PadicField

    real_scan = cli_mod.scan

    def doctored(cfg, checks):
        report = real_scan(cfg, checks)
        p2 = PadicField(2)
        witness = Violation(
            check="na1", link=0,
            x=vector(p2, (1,)), y=vector(p2, (1,)), slack=F(-1, 7),
        )
        return dataclasses.replace(
            report, violation_count=1, violations=(witness,)
        )

    monkeypatch.setattr(cli_mod, "scan", doctored)
    code, out, err = _run(
        capsys, "verify", "--field", "padic:2", "--dim", "1", "--samples", "10",
    )
    assert code == 1
    assert "VIOLATIONS: 1" in out
    assert "slack=-1/7" in out


# ---------------------------------------------------------------------------
# witness
# ---------------------------------------------------------------------------


def test_witness_lists_tight_pairs(capsys):
    code, out, err = _run(
        capsys, "witness", "--field", "padic:2", "--check", "na2", "--link", "0",
        "--dim", "1", "--v-max", "1", "--unit-bound", "1", "--exhaustive",
    )
    assert code == 0
    assert "witness  na2:bound" in out
    assert "tight pairs:" in out
    assert "x=(" in out


def test_witness_json(capsys):
    code, out, err = _run(
        capsys, "witness", "--field", "padic:3", "--check", "na1", "--link", "1",
        "--dim", "1", "--v-max", "1", "--unit-bound", "1", "--exhaustive",
        "--json", "-",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["link_key"] == "na1:upper"
    assert obj["tight_total"] == obj["pairs_evaluated"] == 49  # collapse: all tight
    assert len(obj["witnesses"]) == 16


def test_witness_link_out_of_range(capsys):
    code, out, err = _run(
        capsys, "witness", "--field", "padic:2", "--check", "na2", "--link", "3",
    )
    assert code == 2 and "out of range" in err


def test_witness_unknown_check(capsys):
    code, out, err = _run(
        capsys, "witness", "--field", "padic:2", "--check", "zorp",
    )
    assert code == 2 and "unknown check" in err


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------


def test_axioms_padic(capsys):
    code, out, err = _run(
        capsys, "axioms", "--field", "padic:2", "--v-max", "1", "--unit-bound", "2",
    )
    assert code == 0
    assert "valuation axioms" in out and "norm axioms" in out
    assert "definiteness" in out and "PASS" in out
    assert "all axioms hold" in out
    assert "FAIL" not in out


def test_axioms_rationals_ultrametric_clause(capsys):
    code, out, err = _run(
        capsys, "axioms", "--field", "rationals", "--unit-bound", "3", "--dim", "2",
    )
    assert code == 0
    assert "NOT-APPLICABLE" in out
    assert "|1+1| = 2 > max{|1|,|1|} = 1" in out
    assert "triangle" in out


def test_axioms_characteristic_two_backend_still_passes(capsys):
    code, out, err = _run(
        capsys, "axioms", "--field", "tadic:2", "--v-max", "1", "--unit-bound", "2",
    )
    assert code == 0
    assert "all axioms hold" in out


def test_axioms_json(capsys):
    code, out, err = _run(
        capsys, "axioms", "--field", "tadic:3", "--v-max", "1",
        "--unit-bound", "1", "--json", "-",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["valuation"]["passed"] is True
    assert obj["norm"]["passed"] is True
    clause_names = [c["name"] for c in obj["norm"]["clauses"]]
    assert "isosceles" in clause_names


def test_axioms_exit_1_on_failure(capsys, monkeypatch):
    from ultrachain import cli as cli_mod
    from ultrachain.reports import AxiomClause, AxiomReport

    def broken(backend, samples):
        return AxiomReport(
            kind="valuation",
            clauses=(
                AxiomClause("definiteness", True, False, 1, "|3| = 0 but 3 != 0"),
            ),
            samples=1,
        )

    monkeypatch.setattr(cli_mod, "check_valuation_axioms", broken)
    code, out, err = _run(capsys, "axioms", "--field", "padic:2")
    assert code == 1
    assert "FAIL" in out and "AXIOM FAILURE" in out


# ---------------------------------------------------------------------------
# demo
# ---------------------------------------------------------------------------


def test_demo_default_fields(capsys):
    code, out, err = _run(capsys, "demo")
    assert code == 0
    assert "field padic:2:" in out
    assert "|2|_2 = 1/2 (2^-1)" in out
    assert "2/|2| = 4" in out
    assert "chain1 values [0, 0, 2]" in out
    assert "field padic:3:" in out
    assert "|2|_3 = 1" in out
    assert out.count("2/|2| = 2") == 2  # padic:3 and padic:7
    assert "chain1 values [2/3, 2/3, 2/3]  (every link tight)" in out
    assert "chain1 values [6/7, 6/7, 6/7]  (every link tight)" in out
    assert "field padic:7:" in out


def test_demo_single_field(capsys):
    code, out, err = _run(capsys, "demo", "--field", "padic:5")
    assert code == 0
    assert "field padic:5:" in out
    assert "2/|2| = 2" in out
    assert "x = (1), y = (5)" in out
    assert "chain1 values [4/5, 4/5, 4/5]" in out


def test_demo_trivial_field(capsys):
    code, out, err = _run(capsys, "demo", "--field", "trivial")
    assert code == 0
    assert "|2| = 1" in out
    assert "x = (1), y = (1)" in out
    assert "chain1 values [0, 0, 0]" in out


def test_demo_characteristic_two_exits_2(capsys):
    code, out, err = _run(capsys, "demo", "--field", "tadic:2")
    assert code == 2
    assert "characteristic 2" in err and "|2| = 0" in err


def test_demo_rejects_archimedean(capsys):
    code, out, err = _run(capsys, "demo", "--field", "rationals")
    assert code == 2


def test_demo_json(capsys):
    code, out, err = _run(capsys, "demo", "--json", "-")
    assert code == 0
    obj = json.loads(out)
    examples = obj["examples"]
    assert [e["field"] for e in examples] == ["padic:2", "padic:3", "padic:7"]
    assert examples[0]["two_magnitude"] == "1/2"
    assert examples[0]["coefficient"] == "4"
    assert examples[1]["coefficient"] == "2"
    sides = examples[1]["na_chain1"]["sides"]
    assert [s["value"] for s in sides] == ["2/3", "2/3", "2/3"]
    assert all(l["tight"] for l in examples[1]["na_chain1"]["links"])


# ---------------------------------------------------------------------------
# parser plumbing
# ---------------------------------------------------------------------------


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
    assert "ultrachain" in capsys.readouterr().out


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run([])
    assert exc.value.code == 2


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--field", "padic:2", "--frobnicate"])
    assert exc.value.code == 2


def test_main_is_run():
    assert main(["demo", "--quiet"]) == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ultrachain", "demo", "--field", "padic:3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "2/|2| = 2" in proc.stdout
