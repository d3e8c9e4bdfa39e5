import json

import pytest
from click.testing import CliRunner

from spherebraid.cli import main, parse_word


@pytest.fixture
def runner():
    return CliRunner()


class TestParseWord:
    def test_basic(self):
        w = parse_word("1 2 -3", 4)
        assert w.letters == (1, 2, -3)

    def test_empty(self):
        assert parse_word("", 4).letters == ()

    def test_out_of_range(self):
        import click

        with pytest.raises(click.BadParameter, match="'4'"):
            parse_word("4", 4)


class TestNormalFormCommand:
    def test_half_twist_b3(self, runner):
        result = runner.invoke(main, ["normal-form", "--n", "3", "--word", "1 2 1"])
        assert result.exit_code == 0
        assert result.output == "(Delta^1, [])\n"

    def test_machine_format(self, runner):
        result = runner.invoke(
            main, ["normal-form", "--n", "3", "--word", "1 -2", "--format", "machine"]
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["normal_form"]["delta_power"] == -1
        assert doc["normal_form"]["factors"] == [[1, 3, 2], [2, 3, 1]]

    def test_bad_word_usage_error(self, runner):
        result = runner.invoke(main, ["normal-form", "--n", "4", "--word", "9"])
        assert result.exit_code == 2


class TestVerifyCommand:
    def test_q8_single_n(self, runner):
        result = runner.invoke(main, ["verify", "--claim", "q8", "--n", "4"])
        assert result.exit_code == 0
        assert "verdict=VERIFIED" in result.output
        assert "in_commutator = True" in result.output

    def test_q8_range_trichotomy(self, runner):
        result = runner.invoke(
            main, ["verify", "--claim", "q8", "--from", "3", "--to", "12", "--format", "machine"]
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        certs = doc["certificates"]
        assert [c["n"] for c in certs] == list(range(3, 13))
        for c in certs:
            expected = "VERIFIED" if c["n"] % 2 == 0 else "REFUTED-realization"
            assert c["verdict"] == expected

    def test_dicyclic_range(self, runner):
        result = runner.invoke(
            main,
            ["verify", "--claim", "dicyclic", "--from", "3", "--to", "5", "--format", "machine"],
        )
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert [c["flags"]["order"] for c in doc["certificates"]] == [12, 16, 20]

    def test_background_n2(self, runner):
        result = runner.invoke(main, ["verify", "--claim", "background", "--n", "2"])
        assert result.exit_code == 0

    def test_budget_exhaustion_exit_3(self, runner):
        result = runner.invoke(
            main, ["verify", "--claim", "background", "--n", "3", "--max-cosets", "5"]
        )
        assert result.exit_code == 3
        assert "INCONCLUSIVE" in result.output

    def test_n_and_range_conflict(self, runner):
        result = runner.invoke(
            main, ["verify", "--claim", "q8", "--n", "4", "--from", "3", "--to", "5"]
        )
        assert result.exit_code == 2

    def test_below_minimum_n(self, runner):
        result = runner.invoke(main, ["verify", "--claim", "q8", "--n", "2"])
        assert result.exit_code == 2

    def test_odd_obstruction_range_filters_even(self, runner):
        result = runner.invoke(
            main,
            [
                "verify",
                "--claim",
                "odd-obstruction",
                "--from",
                "3",
                "--to",
                "8",
                "--format",
                "machine",
            ],
        )
        doc = json.loads(result.output)
        assert [c["n"] for c in doc["certificates"]] == [3, 5, 7]

    def test_nonpositive_budget_rejected(self, runner):
        result = runner.invoke(
            main, ["verify", "--claim", "q8", "--n", "4", "--max-cosets", "0"]
        )
        assert result.exit_code == 2

    def test_machine_output_schema(self, runner):
        result = runner.invoke(
            main, ["verify", "--claim", "torsion", "--n", "4", "--format", "machine"]
        )
        doc = json.loads(result.output)
        assert set(doc) == {"tool_version", "config", "certificates"}
        cert = doc["certificates"][0]
        assert set(cert) == {"claim", "n", "verdict", "flags", "steps", "axioms"}
        for step in cert["steps"]:
            assert set(step) == {
                "id",
                "statement",
                "method",
                "ok",
                "depends_on",
                "axioms",
                "data",
            }

    def test_text_and_machine_verdicts_agree(self, runner):
        text = runner.invoke(main, ["verify", "--claim", "q8", "--from", "3", "--to", "6"])
        machine = runner.invoke(
            main, ["verify", "--claim", "q8", "--from", "3", "--to", "6", "--format", "machine"]
        )
        doc = json.loads(machine.output)
        for cert in doc["certificates"]:
            assert f"n={cert['n']} verdict={cert['verdict']}" in text.output
            cited = [a["id"] for a in cert["axioms"]]
            assert ("axioms cited: " + (", ".join(cited) or "none")) in text.output

    def test_determinism_byte_identical(self, runner):
        args = ["verify", "--claim", "q8", "--from", "3", "--to", "8", "--format", "machine"]
        out1 = runner.invoke(main, args).output
        out2 = runner.invoke(main, args).output
        assert out1 == out2

    def test_out_file(self, runner, tmp_path):
        target = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["verify", "--claim", "q8", "--n", "4", "--format", "machine", "--out", str(target)],
        )
        assert result.exit_code == 0
        assert result.output == ""
        assert json.loads(target.read_text())["certificates"][0]["verdict"] == "VERIFIED"


class TestActCommand:
    def test_disk_action(self, runner):
        result = runner.invoke(main, ["act", "--n", "2", "--word", "1"])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["x1 -> 1 2 -1", "x2 -> 1"]

    def test_sphere_action(self, runner):
        result = runner.invoke(
            main, ["act", "--n", "3", "--word", "1 2 2 1", "--target", "sphere"]
        )
        assert result.exit_code == 0
        assert result.output.splitlines() == ["x1 -> 1", "x2 -> 1 2 -1"]

    def test_budget_exit_3(self, runner):
        word = " ".join(["1 2 3 4 5"] * 40)
        result = runner.invoke(
            main, ["act", "--n", "6", "--word", word, "--max-endo-letters", "10"]
        )
        assert result.exit_code == 3


class TestSelftestCommand:
    def test_small_run(self, runner):
        result = runner.invoke(
            main, ["selftest", "--from", "3", "--to", "4", "--pairs", "40", "--max-len", "14"]
        )
        assert result.exit_code == 0
        assert "selftest PASS" in result.output


class TestConsoleEntryPoint:
    """Exit codes through the real process entry, not just CliRunner."""

    @staticmethod
    def _run(*args):
        import subprocess
        import sys

        return subprocess.run(
            [sys.executable, "-m", "spherebraid", *args],
            capture_output=True,
            text=True,
        ).returncode

    def test_verified_claim_exits_0(self):
        assert self._run("verify", "--claim", "background", "--n", "2") == 0

    def test_budget_exhaustion_exits_3(self):
        assert (
            self._run("verify", "--claim", "background", "--n", "3", "--max-cosets", "5")
            == 3
        )

    def test_usage_error_exits_2(self):
        assert self._run("verify", "--claim", "q8", "--n", "1") == 2
