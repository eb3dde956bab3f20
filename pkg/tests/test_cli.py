"""Command-line interface: outputs, exit codes, JSON envelopes."""

import json

from ratrec.cli import main

EX41_COEFFS = [
    "(-(n-1)*(2*n-1)*(n+1))",
    "n*(n+2)*(2*n-3)",
    "(-(2*n+3)*(n+3)*(n+1))",
    "(n+4)*(2*n+1)*(n+2)",
]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestDispersionCommand:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "dispersion", "n+2", "(n+1)*(n+2)")
        assert code == 0
        assert "dispersion = 1" in out

    def test_json_output(self, capsys):
        code, payload, _ = run_json(capsys, "dispersion", "n+2", "(n+1)*(n+2)")
        assert code == 0
        assert payload["status"] == "ok"
        assert payload["command"] == "dispersion"
        assert payload["result"]["value"] == 1
        assert [w["shift"] for w in payload["result"]["witnesses"]] == [0, 1]

    def test_rejects_zero_polynomial(self, capsys):
        code, _, err = run(capsys, "dispersion", "n-n", "n")
        assert code == 2
        assert "error" in err


class TestDenominatorCommand:
    def test_explicit_method(self, capsys):
        code, payload, _ = run_json(
            capsys, "denominator", "--order", "1", "(n+1)*(n+2)", "n+3"
        )
        assert code == 0
        assert payload["result"]["denominator"]["pretty"] == "n^2 + 3*n + 2"
        assert payload["result"]["max_shift"] == 1

    def test_all_methods_agree_on_order_one(self, capsys):
        values = {}
        for method in ("explicit", "abramov"):
            _, payload, _ = run_json(
                capsys, "denominator", "--order", "1", "--method", method,
                "(n+1)*(n+2)", "n+3",
            )
            values[method] = payload["result"]["denominator"]["pretty"]
        assert values["explicit"] == values["abramov"]

    def test_gp_method_divides(self, capsys):
        code, payload, _ = run_json(
            capsys, "denominator", "--order", "1", "--method", "gp",
            "(n+1)*(n+2)", "n+3",
        )
        assert code == 0
        assert payload["result"]["denominator"]["pretty"] == "n + 2"

    def test_gp_needs_order_one(self, capsys):
        code, _, err = run(
            capsys, "denominator", "--order", "2", "--method", "gp", "n", "n+1"
        )
        assert code == 2
        assert "order 1" in err

    def test_order_three_coefficients(self, capsys):
        code, payload, _ = run_json(
            capsys, "denominator", "--order", "3", "--method", "abramov",
            EX41_COEFFS[0], EX41_COEFFS[3],
        )
        assert code == 0
        assert payload["result"]["denominator"]["pretty"] == "n^3 - n"
        assert payload["result"]["denominator"]["coeffs"] == ["0/1", "-1/1", "0/1", "1/1"]

    def test_verbose_trace(self, capsys):
        code, out, _ = run(
            capsys, "denominator", "--order", "1", "--method", "abramov",
            "(n+1)*(n+2)", "n+3", "--verbose",
        )
        assert code == 0
        assert "extracted at shift 1: n + 2" in out


class TestGosperCommand:
    def test_success(self, capsys):
        code, payload, _ = run_json(capsys, "gosper", "(4*n+5)/(2*(4*n+1)*(2*n+3))")
        assert code == 0
        result = payload["result"]
        assert result["max_shift"] == 0
        assert result["g"]["pretty"] == "n + 1/4"
        assert result["f"]["pretty"] == "-n - 1/2"
        assert result["y"]["pretty"] == "(-n - 1/2)/(n + 1/4)"
        assert result["verified"] is True

    def test_no_solution_exit_code(self, capsys):
        code, payload, _ = run_json(capsys, "gosper", "n+1")
        assert code == 1
        assert payload["status"] == "no_solution"

    def test_parse_error_offset_in_json(self, capsys):
        code, out, err = run(capsys, "gosper", "n/(n", "--json")
        assert code == 2
        payload = json.loads(out)
        assert payload["status"] == "error"
        assert payload["result"]["offset"] == 4
        assert "offset 4" in err

    def test_zero_division_is_input_error(self, capsys):
        code, _, err = run(capsys, "gosper", "1/(n-n)")
        assert code == 2
        assert "zero" in err


class TestGpRepCommand:
    def test_reports_factors(self, capsys):
        code, payload, _ = run_json(capsys, "gp-rep", "(n+3)/((n+1)*(n+2))")
        assert code == 0
        result = payload["result"]
        assert result["num_factor"]["pretty"] == "1"
        assert result["den_factor"]["pretty"] == "n + 1"
        assert result["shift_factor"]["pretty"] == "n + 2"
        assert result["gp_conditions_ok"] is True


class TestRatsolveCommand:
    def test_order_three_family(self, capsys):
        code, payload, _ = run_json(capsys, "ratsolve", "--coeffs", *EX41_COEFFS)
        assert code == 0
        result = payload["result"]
        assert result["max_shift"] == 2
        assert result["denominator"]["pretty"] == "n^3 - n"
        assert result["particular"]["pretty"] == "0"
        assert len(result["homogeneous"]) == 1
        assert result["homogeneous"][0]["pretty"] == "(n - 3/2)/(n^2 - 1)"

    def test_no_rational_solution(self, capsys):
        code, payload, _ = run_json(
            capsys, "ratsolve", "--coeffs", "(-1)", "n+1", "--rhs", "1"
        )
        assert code == 1
        assert payload["status"] == "no_solution"
        assert payload["result"]["particular"] is None

    def test_needs_two_coefficients(self, capsys):
        code, _, err = run(capsys, "ratsolve", "--coeffs", "n")
        assert code == 2
        assert "order" in err


class TestVerifyCommands:
    def test_gosper_certificate_true(self, capsys):
        code, payload, _ = run_json(
            capsys, "verify", "gosper", "(n+1)/n", "(n-1)/2"
        )
        assert code == 0
        assert payload["result"]["verified"] is True

    def test_gosper_certificate_false(self, capsys):
        code, payload, _ = run_json(
            capsys, "verify", "gosper", "(n+1)/n", "(n+1)/2"
        )
        assert code == 1
        assert payload["result"]["verified"] is False

    def test_rational_solution_true(self, capsys):
        code, payload, _ = run_json(
            capsys, "verify", "ratsolve", "--coeffs", *EX41_COEFFS,
            "--solution", "(2*n-3)/(n^2-1)",
        )
        assert code == 0
        assert payload["result"]["verified"] is True

    def test_rational_solution_false_for_misprinted_form(self, capsys):
        code, payload, _ = run_json(
            capsys, "verify", "ratsolve", "--coeffs", *EX41_COEFFS,
            "--solution", "(2*n+1)/(n^2-1)",
        )
        assert code == 1
        assert payload["result"]["verified"] is False


class TestFileInput:
    def test_expressions_from_file(self, capsys, tmp_path):
        path = tmp_path / "exprs.txt"
        path.write_text("n+2\n(n+1)*(n+2)\n")
        code, payload, _ = run_json(capsys, "dispersion", "--file", str(path))
        assert code == 0
        assert payload["result"]["value"] == 1

    def test_ratsolve_from_file(self, capsys, tmp_path):
        path = tmp_path / "rec.txt"
        path.write_text("\n".join(EX41_COEFFS) + "\n0\n")
        code, payload, _ = run_json(capsys, "ratsolve", "--file", str(path))
        assert code == 0
        assert payload["result"]["denominator"]["pretty"] == "n^3 - n"

    def test_verify_ratsolve_from_file(self, capsys, tmp_path):
        path = tmp_path / "check.txt"
        path.write_text("\n".join(EX41_COEFFS) + "\n0\n(2*n-3)/(n^2-1)\n")
        code, payload, _ = run_json(capsys, "verify", "ratsolve", "--file", str(path))
        assert code == 0
        assert payload["result"]["verified"] is True

    def test_wrong_line_count(self, capsys, tmp_path):
        path = tmp_path / "exprs.txt"
        path.write_text("n+2\n")
        code, _, err = run(capsys, "dispersion", "--file", str(path))
        assert code == 2
        assert "2 expression" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "dispersion", "--file", "/no/such/file")
        assert code == 2

    def test_missing_positional_hint(self, capsys):
        code, _, err = run(capsys, "dispersion", "n+2")
        assert code == 2
        assert "second" in err


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_order(self, capsys):
        assert run(capsys, "denominator", "n", "n")[0] == 2
