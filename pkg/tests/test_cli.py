"""End-to-end checks of the command-line front end."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

import ospq.cli as cli
from ospq import contraction, hopf, ode, qrmatrix, r1, twist
from ospq.gmatrix import GradedMatrix
from ospq.halfint import HalfInt
from ospq.scalar import H
from ospq.contraction import contract

HALF = HalfInt(Fraction(1, 2))


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_passing_suite_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "disentangle", "--j", "1/2")
        assert code == 0
        assert "disentangle: pass" in out

    def test_malformed_spin_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "rep", "--variant", "q", "--j", "5/4")
        assert code == 2
        assert "not a half-integer" in err

    def test_wrong_spin_count_exits_two(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--suite", "triangularity", "--j", "1/2"
        )
        assert code == 2
        assert "exactly 2" in err

    def test_spins_on_spinless_suite_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "ode", "--j", "1/2")
        assert code == 2
        assert "takes no spins" in err

    def test_formula_source_needs_spin_half(self, capsys):
        code, _, err = run_cli(
            capsys, "contract", "--j1", "1", "--j2", "1/2", "--source", "formula"
        )
        assert code == 2

    def test_failing_check_exits_one(self, capsys, monkeypatch):
        # Corrupt the loaded golden matrix; the comparison must locate
        # the poisoned coordinate and flip the exit code.
        real = cli.load_fixture

        def poisoned(filename):
            matrix = real(filename)
            return matrix + GradedMatrix(matrix.parity, {(0, 1): H})

        monkeypatch.setattr(cli, "load_fixture", poisoned)
        code, out, _ = run_cli(capsys, "fixtures")
        assert code == 1
        assert "FAIL" in out
        assert "(0,1)" in out

    def test_negative_order_exits_two(self, capsys):
        code, _, _ = run_cli(
            capsys, "verify", "--suite", "ode", "--order", "-3"
        )
        assert code == 2


class TestMatrixEmission:
    def test_contract_json_round_trips(self, capsys):
        code, out, _ = run_cli(
            capsys, "contract", "--j1", "1/2", "--j2", "1/2", "--format", "json"
        )
        assert code == 0
        matrix = GradedMatrix.from_json_dict(json.loads(out))
        assert matrix == contract(HALF, HALF).matrix

    def test_contract_csv_first_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "contract", "--j1", "1/2", "--j2", "1/2", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines()[0] == "1,0,h,0,h,0,-h,0,h^2/2"

    def test_contract_formula_source_agrees_with_universal(self, capsys):
        _, via_limit, _ = run_cli(
            capsys, "contract", "--j1", "1/2", "--j2", "1", "--format", "json"
        )
        _, via_blocks, _ = run_cli(
            capsys,
            "contract",
            "--j1",
            "1/2",
            "--j2",
            "1",
            "--source",
            "formula",
            "--format",
            "json",
        )
        assert via_limit == via_blocks

    def test_cancellation_log_reports_pole_orders(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "contract",
            "--j1",
            "1/2",
            "--j2",
            "1/2",
            "--log-cancellation",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"matrix", "cancellation"}
        assert all(order >= 1 for _, _, order in payload["cancellation"])

    def test_cancellation_log_rejects_csv(self, capsys):
        code, _, _ = run_cli(
            capsys,
            "contract",
            "--j1",
            "1/2",
            "--j2",
            "1/2",
            "--log-cancellation",
            "--format",
            "csv",
        )
        assert code == 2

    def test_rep_lists_all_generators(self, capsys):
        code, out, _ = run_cli(
            capsys, "rep", "--variant", "classical", "--j", "1/2"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dim"] == 3
        assert sorted(payload["generators"]) == ["b+", "b-", "e", "f", "h"]

    def test_h_substitution_reaches_the_matrix(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "rmatrix",
            "--kind",
            "r1",
            "--j1",
            "1/2",
            "--j2",
            "1/2",
            "--h",
            "0",
        )
        assert code == 0
        matrix = GradedMatrix.from_json_dict(json.loads(out))
        assert matrix == GradedMatrix.identity(matrix.parity)

    def test_q_r_matrix_emits(self, capsys):
        code, out, _ = run_cli(
            capsys, "rmatrix", "--kind", "q", "--j1", "1/2", "--j2", "1/2"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dim"] == 9


class TestDeterminism:
    def test_identical_invocations_identical_bytes(self, capsys):
        first = run_cli(
            capsys, "verify", "--suite", "rll", "--j", "1/2", "--format", "json"
        )
        second = run_cli(
            capsys, "verify", "--suite", "rll", "--j", "1/2", "--format", "json"
        )
        assert first == second

    def test_timings_stay_out_of_default_json(self, capsys):
        _, out, _ = run_cli(
            capsys, "verify", "--suite", "disentangle", "--j", "1/2",
            "--format", "json",
        )
        (payload,) = json.loads(out)
        assert "wall_time" not in payload

    def test_timings_flag_adds_wall_time(self, capsys):
        _, out, _ = run_cli(
            capsys, "verify", "--suite", "disentangle", "--j", "1/2",
            "--format", "json", "--timings",
        )
        (payload,) = json.loads(out)
        assert payload["wall_time"] >= 0

    def test_report_file_matches_stdout_payload(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        _, out, _ = run_cli(
            capsys,
            "verify",
            "--suite",
            "disentangle",
            "--j",
            "1/2",
            "--format",
            "json",
            "--report",
            str(path),
        )
        assert json.loads(path.read_text()) == json.loads(out)


class TestVerifyDispatch:
    def test_hdiag_twist_route(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--suite",
            "twist",
            "--j",
            "1/2",
            "1/2",
            "--family",
            "hdiag",
            "--format",
            "json",
        )
        assert code == 0
        (payload,) = json.loads(out)
        assert payload["parameters"]["family"] == "hdiag"
        assert payload["parameters"]["order"] == "2"

    def test_minimal_twist_route(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--suite",
            "twist",
            "--j",
            "1/2",
            "1/2",
            "--format",
            "json",
        )
        assert code == 0
        (payload,) = json.loads(out)
        assert "order" not in payload["parameters"]

    def test_ybe_kind_r1_records_family(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--suite",
            "ybe",
            "--kind",
            "r1",
            "--format",
            "json",
        )
        assert code == 0
        (payload,) = json.loads(out)
        assert payload["parameters"]["family"] == "minimal"

    def test_one_spin_suite_fans_out(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--suite",
            "disentangle",
            "--j",
            "1/2",
            "1",
            "--format",
            "json",
        )
        assert code == 0
        assert len(json.loads(out)) == 2


class TestRegistry:
    def test_every_module_check_is_wired(self):
        wired = {cli.fixtures_check}
        for spec in cli.SUITES.values():
            wired.update(spec.targets)
        exposed = set()
        for module in (contraction, qrmatrix, hopf, r1, twist, ode, cli):
            for name in dir(module):
                if name.endswith("_check") and not name.startswith("_"):
                    exposed.add(getattr(module, name))
        missing = {fn.__name__ for fn in exposed - wired}
        assert missing == set()

    def test_parser_offers_every_suite(self, capsys):
        parser = cli.build_parser()
        for suite in cli.SUITES:
            args = parser.parse_args(["verify", "--suite", suite])
            assert args.suite == suite


class TestFixtures:
    def test_full_run_passes(self):
        report = cli.fixtures_check()
        assert report.ok
        assert report.parameters["count"] == 2

    def test_shipped_shapes(self):
        small = cli.load_fixture("contract_half_half.json")
        large = cli.load_fixture("contract_half_one.json")
        assert small.dim == 9
        assert large.dim == 15

    @pytest.mark.parametrize(
        "filename,j2",
        (
            ("contract_half_half.json", HALF),
            ("contract_half_one.json", HalfInt(1)),
        ),
        ids=("9x9", "15x15"),
    )
    def test_h_substitution_commutes_with_contraction(self, filename, j2):
        third = Fraction(1, 3)
        stored = cli.load_fixture(filename).map_entries(
            lambda s: s.substitute_h(third)
        )
        fresh = contract(HALF, j2).matrix.map_entries(
            lambda s: s.substitute_h(third)
        )
        assert stored == fresh


class TestConsoleScript:
    def test_installed_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ospq.cli", "fixtures"],
            capture_output=True,
            text=True,
            timeout=300,
        )
        assert proc.returncode == 0
        assert "fixtures: pass" in proc.stdout
