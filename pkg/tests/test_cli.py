"""Command line: dispatch, output formats, exit codes and determinism."""

import json

import pytest

from dirac_pairings.cli import main
from dirac_pairings.cli.commands import parse_range, parse_weight
from dirac_pairings.errors import UsageError

F1_HALF = {
    "name": "F1-rescaled",
    "dimension": 2,
    "weights": [[1], [-1]],
    "actions": {
        "h": [[1, 0], [0, -1]],
        "e": [[0, "1/2"], [0, 0]],
        "f": [[0, 0], [2, 0]],
    },
    "infinitesimal_character": [2],
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestParsing:
    def test_range(self):
        assert parse_range("1..3") == [1, 2, 3]
        assert parse_range("4") == [4]

    @pytest.mark.parametrize("text", ["3..1", "a..b", "1..", ""])
    def test_bad_range(self, text):
        with pytest.raises(UsageError):
            parse_range(text)

    def test_weight(self):
        assert parse_weight("2,-1", 2).coords == (2, -1)

    def test_weight_rank(self):
        with pytest.raises(UsageError):
            parse_weight("1,2", 1)


class TestPairs:
    def test_dirac_discrete_series(self, capsys):
        code, report = run_json(capsys, "pair", "dirac", "--group", "sl2R", "--ds", "1..3")
        assert code == 0
        gram = report["result"]["gram"]
        assert gram == [[int(i == j) for j in range(6)] for i in range(6)]
        assert report["ok"]

    def test_ep_finite_dimensional(self, capsys):
        code, report = run_json(capsys, "pair", "ep", "--group", "sl2R", "--findim", "0..4")
        assert code == 0
        assert report["result"]["gram"] == [[2 * int(i == j) for j in range(5)] for i in range(5)]
        assert report["result"]["modules"][2] == "F(2)"

    def test_dirac_agrees_with_ep(self, capsys):
        code, report = run_json(capsys, "pair", "dirac", "--findim", "0..3")
        assert code == 0
        assert report["identities"] == [{"name": "Dirac pairing = Euler-Poincare pairing", "ok": True}]

    def test_elliptic(self, capsys):
        code, report = run_json(capsys, "pair", "elliptic", "--ds", "1..2")
        assert code == 0
        assert report["result"]["equal"]
        assert report["result"]["gram_dirac"] == [[int(i == j) for j in range(4)] for i in range(4)]

    def test_elliptic_rejects_finite_dimensional(self, capsys):
        assert run(capsys, "pair", "elliptic", "--findim", "0..1")[0] == 2

    def test_ep_rejects_parameters(self, capsys):
        assert run(capsys, "pair", "ep", "--ds", "1..2")[0] == 2

    def test_hw_list(self, capsys):
        code, report = run_json(capsys, "pair", "ep", "--hw", "1", "--hw", "3")
        assert code == 0
        assert report["result"]["gram"] == [[2, 0], [0, 2]]


class TestIndex:
    def test_discrete_series(self, capsys):
        code, report = run_json(capsys, "dirac-index", "--ds", "1..1")
        assert code == 0
        assert len(report["result"]) == 2
        assert all(len(item["index"]) == 1 for item in report["result"])
        assert all(identity["ok"] for identity in report["identities"])

    def test_limit_combination(self, capsys):
        code, report = run_json(capsys, "dirac-index", "--chi", "0", "--kind", "combination")
        assert code == 0
        (item,) = report["result"]
        assert len(item["index"]) == 1

    def test_finite_dimensional(self, capsys):
        code, report = run_json(capsys, "dirac-index", "--findim", "2")
        assert code == 0
        coefficients = sorted(term["coeff"] for term in report["result"][0]["index"])
        assert coefficients == [-1, 1]

    def test_nothing_to_compute(self, capsys):
        assert run(capsys, "dirac-index")[0] == 2


class TestRootData:
    def test_show(self, capsys):
        code, report = run_json(capsys, "root-data", "show", "--group", "sl2R")
        assert code == 0
        result = report["result"]
        assert (result["weyl_order"], result["compact_weyl_order"], result["dim_p"]) == (2, 1, 2)
        assert len(result["rho"]) == 2

    def test_datum_file(self, capsys, tmp_path):
        _, shown = run_json(capsys, "root-data", "show", "--group", "su21")
        path = tmp_path / "copy.json"
        path.write_text(json.dumps(shown["result"]))
        code, report = run_json(capsys, "root-data", "show", "--datum", str(path))
        assert code == 0
        assert report["result"]["roots"] == shown["result"]["roots"]

    def test_missing_datum(self, capsys, tmp_path):
        assert run(capsys, "root-data", "show", "--datum", str(tmp_path / "absent.json"))[0] == 2

    def test_unknown_group(self, capsys):
        assert run(capsys, "root-data", "show", "--group", "e8")[0] == 2


class TestFredholm:
    def test_all_suites(self, capsys):
        code, report = run_json(
            capsys, "fredholm", "check", "--suite", "all", "--seed", "7", "--instances", "10"
        )
        assert code == 0
        assert [r["suite"] for r in report["result"]] == [
            "definition", "euler", "reduction", "additivity", "perturbation",
        ]
        assert report["inputs"]["seed"] == 7
        exported = {r["suite"]: r["exported"] for r in report["result"]}
        assert exported["perturbation"] == 16
        assert exported["euler"] == 0

    def test_without_lab_exports(self, capsys):
        code, report = run_json(
            capsys, "fredholm", "check", "--suite", "perturbation", "--instances", "5", "--lab-exports", "-1"
        )
        assert code == 0
        (result,) = report["result"]
        assert (result["instances"], result["exported"]) == (5, 0)

    def test_default_instances(self, capsys):
        code, report = run_json(capsys, "fredholm", "check", "--suite", "euler", "--seed", "1")
        assert code == 0
        assert report["result"][0]["instances"] == 200

    def test_bad_instances(self, capsys):
        assert run(capsys, "fredholm", "check", "--instances", "0")[0] == 2


class TestLab:
    def test_conjecture(self, capsys):
        code, report = run_json(capsys, "lab", "conjecture", "--max", "2")
        assert code == 0
        assert len(report["result"]["rows"]) == 9
        assert report["inputs"]["max"] == 2
        assert all(row["EP_weights"] == row["EP"] for row in report["result"]["rows"])

    def test_identities_with_module(self, capsys, tmp_path):
        path = tmp_path / "half.json"
        path.write_text(json.dumps(F1_HALF))
        code, report = run_json(capsys, "lab", "identities", "--max", "1", "--module", str(path))
        assert code == 0
        labels = [identity["name"] for identity in report["identities"]]
        assert "F1-rescaled" in labels
        assert "F1-rescaled, F1" in labels

    def test_only_presets(self, capsys, tmp_path):
        assert run(capsys, "lab", "identities", "--datum", str(tmp_path / "d.json"))[0] == 2

    def test_other_group(self, capsys):
        assert run(capsys, "lab", "identities", "--group", "su21", "--max", "1")[0] == 2


class TestOutput:
    ARGS = ("pair", "ep", "--findim", "0..2")

    def test_deterministic(self, capsys):
        first = run(capsys, *self.ARGS)[1]
        second = run(capsys, *self.ARGS)[1]
        assert first == second
        assert "timing" not in json.loads(first)

    def test_timing(self, capsys):
        _, report = run_json(capsys, *self.ARGS, "--timing")
        assert report["timing"] >= 0

    def test_csv(self, capsys):
        code, out = run(capsys, *self.ARGS, "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == ",F(0),F(1),F(2)"
        assert lines[1] == "F(0),2,0,0"

    def test_pretty(self, capsys):
        code, out = run(capsys, *self.ARGS, "--format", "pretty")
        assert code == 0
        assert out.startswith("pair ep")
        assert "[PASS] Euler-Poincare pairing = Dirac pairing" in out

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out = run(capsys, *self.ARGS, "--output", str(path))
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text(encoding="utf-8"))["command"] == "pair ep"


class TestExitCodes:
    def test_unknown_command(self, capsys):
        assert main(["nope"]) == 2

    def test_missing_pairing(self, capsys):
        assert main(["pair"]) == 2

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert "dirac-pairings" in capsys.readouterr().out

    def test_identity_failure(self, capsys, monkeypatch):
        from dirac_pairings.cli import commands

        monkeypatch.setattr(commands, "dirac_pairing", lambda a, b: 7)
        code, report = run_json(capsys, "pair", "dirac", "--ds", "1..1")
        assert code == 1
        assert not report["ok"]


@pytest.mark.slow
def test_lab_conjecture_full_range(capsys):
    code, report = run_json(capsys, "lab", "conjecture", "--max", "6")
    assert code == 0
    assert len(report["result"]["rows"]) == 49
