import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "hhsym"]


def run_cli(*args, **kwargs):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, **kwargs
    )


class TestDim:
    def test_formula_route_csv(self):
        result = run_cli("dim", "--degree", "1", "--prime", "3", "--n-max", "3")
        assert result.returncode == 0
        assert result.stdout == "n,formula\n0,0\n1,0\n2,0\n3,1\n"

    def test_degree_zero_counts_partitions(self):
        result = run_cli("dim", "--degree", "0", "--prime", "2", "--n-max", "5")
        assert result.returncode == 0
        rows = result.stdout.splitlines()
        assert rows[0] == "n,formula"
        assert [row.split(",")[1] for row in rows[1:]] == ["1", "1", "2", "3", "5", "7"]

    def test_route_all_agrees(self):
        result = run_cli(
            "dim", "--degree", "2", "--prime", "2", "--n-max", "4", "--route", "all"
        )
        assert result.returncode == 0
        rows = result.stdout.splitlines()
        assert rows[0] == "n,formula,series,oracle"
        assert rows[-1] == "4,9,9,9"

    def test_composite_prime_is_usage_error(self):
        result = run_cli("dim", "--degree", "1", "--prime", "6", "--n-max", "3")
        assert result.returncode == 2
        assert result.stdout == ""
        assert "prime" in result.stderr

    def test_oracle_route_respects_enum_cap(self):
        result = run_cli(
            "dim", "--degree", "1", "--prime", "2", "--n-max", "50", "--route", "oracle"
        )
        assert result.returncode == 3
        assert "--enum-cap" in result.stderr

    def test_oracle_cap_can_be_raised(self):
        result = run_cli(
            "dim",
            "--degree", "1",
            "--prime", "2",
            "--n-max", "45",
            "--route", "oracle",
            "--enum-cap", "45",
        )
        assert result.returncode == 0

    def test_series_route_respects_order_cap(self):
        result = run_cli(
            "dim",
            "--degree", "1",
            "--prime", "2",
            "--n-max", "1500",
            "--route", "series",
        )
        assert result.returncode == 3
        assert "--order-cap" in result.stderr

    def test_negative_n_max_is_usage_error(self):
        result = run_cli("dim", "--degree", "1", "--prime", "2", "--n-max", "-1")
        assert result.returncode == 2


class TestSeries:
    def test_parts_equal_example(self):
        result = run_cli("series", "--which", "F", "--params", "2", "--order", "6")
        assert result.returncode == 0
        rows = result.stdout.splitlines()
        assert rows[0] == "n,F_2"
        assert [row.split(",")[1] for row in rows[1:]] == [
            "0", "0", "1", "1", "3", "4", "8",
        ]

    def test_even_pairs_example(self):
        result = run_cli("series", "--which", "E", "--order", "5")
        assert result.returncode == 0
        values = [row.split(",")[1] for row in result.stdout.splitlines()[1:]]
        assert values == ["0", "0", "0", "0", "1", "1"]

    def test_partition_series_order_zero(self):
        result = run_cli("series", "--which", "P", "--order", "0")
        assert result.returncode == 0
        assert result.stdout == "n,P\n0,1\n"

    def test_subset_series_two_params(self):
        result = run_cli(
            "series", "--which", "CD", "--params", "2", "2", "--order", "8"
        )
        assert result.returncode == 0
        assert result.stdout.splitlines()[-1] == "8,3"

    def test_hochschild_series(self):
        result = run_cli(
            "series", "--which", "HH", "--params", "2", "2", "--order", "4"
        )
        assert result.returncode == 0
        rows = result.stdout.splitlines()
        assert rows[0] == "n,HH_2_2"
        assert rows[-1] == "4,9"

    def test_wrong_arity_is_usage_error(self):
        result = run_cli("series", "--which", "F", "--order", "6")
        assert result.returncode == 2
        result = run_cli(
            "series", "--which", "P", "--params", "3", "--order", "6"
        )
        assert result.returncode == 2

    def test_composite_prime_in_hh_params(self):
        result = run_cli(
            "series", "--which", "HH", "--params", "1", "4", "--order", "6"
        )
        assert result.returncode == 2

    def test_order_cap(self):
        result = run_cli("series", "--which", "P", "--order", "1200")
        assert result.returncode == 3
        assert "--order-cap" in result.stderr
        raised = run_cli(
            "series", "--which", "P", "--order", "1200", "--order-cap", "2000"
        )
        assert raised.returncode == 0

    def test_order_cap_hard_maximum(self):
        result = run_cli(
            "series", "--which", "P", "--order", "10", "--order-cap", "5001"
        )
        assert result.returncode == 2


class TestVerify:
    def test_small_all_suites_pass(self):
        result = run_cli("verify", "--suite", "all", "--n-max", "10", "--r-max", "2")
        assert result.returncode == 0
        rows = result.stdout.splitlines()
        assert rows[0] == "suite,identity,scope,status,detail"
        assert all(row.split(",")[3] == "pass" for row in rows[1:])

    def test_single_suite(self):
        result = run_cli("verify", "--suite", "graph", "--r-max", "5")
        assert result.returncode == 0
        assert all(
            row.split(",")[0] == "graph" for row in result.stdout.splitlines()[1:]
        )

    def test_unknown_suite_is_usage_error(self):
        result = run_cli("verify", "--suite", "nonsense")
        assert result.returncode == 2

    def test_scale_beyond_cap_is_resource_error(self):
        result = run_cli("verify", "--suite", "elder", "--n-max", "70")
        assert result.returncode == 3
        assert "--enum-cap" in result.stderr

    def test_json_report(self):
        result = run_cli(
            "verify", "--suite", "e", "--n-max", "12", "--format", "json"
        )
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["meta"]["command"] == "verify"
        assert all(item["status"] == "pass" for item in payload["data"])


class TestOutputContract:
    def test_usage_error_without_arguments(self):
        result = run_cli()
        assert result.returncode == 2

    def test_determinism(self):
        args = ("dim", "--degree", "2", "--prime", "2", "--n-max", "12")
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        json_args = args + ("--format", "json")
        assert run_cli(*json_args).stdout == run_cli(*json_args).stdout

    def test_json_round_trip(self):
        result = run_cli(
            "series", "--which", "G", "--params", "2", "2", "--order", "8",
            "--format", "json",
        )
        payload = json.loads(result.stdout)
        assert json.dumps(payload, indent=2) + "\n" == result.stdout

    def test_line_endings_are_lf(self):
        result = subprocess.run(
            CLI + ["dim", "--degree", "0", "--prime", "2", "--n-max", "3"],
            capture_output=True,
        )
        assert b"\r" not in result.stdout

    def test_values_are_decimal_strings_in_json(self):
        result = run_cli(
            "dim", "--degree", "0", "--prime", "2", "--n-max", "6",
            "--format", "json",
        )
        payload = json.loads(result.stdout)
        for record in payload["data"]:
            for value in record["values"].values():
                assert isinstance(value, str)
                int(value)

    @pytest.mark.parametrize(
        "args",
        [
            ("dim", "--degree", "3", "--prime", "2", "--n-max", "3"),
            ("dim", "--degree", "1", "--prime", "2", "--n-max", "3", "--route", "x"),
            ("series", "--which", "X", "--order", "3"),
            ("dim", "--degree", "1", "--prime", "2", "--n-max", "3", "--enum-cap", "99"),
        ],
    )
    def test_usage_errors(self, args):
        result = run_cli(*args)
        assert result.returncode == 2
