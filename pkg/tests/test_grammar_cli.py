"""Expression grammar, canonical rendering, CLI behavior, JSON reports."""

import json

import pytest
from hypothesis import given, settings

from hnn_nearring import (
    ExprSyntaxError,
    SampleConfig,
    Variant,
    WrongVariant,
    make_int,
    make_pi,
    make_stable,
    mul,
    parse_element,
    parse_expr,
    render,
    run_cli,
    sample_element,
    witness_nonequiprime_C,
    write_report,
)
from conftest import elements

A = Variant.A_INT_BASE
B = Variant.B_FREE_BASE
C = Variant.C_INT_OMEGA_BASE


class TestParse:
    def test_relation_example(self):
        e = parse_element("-t[1,2] + 1 + t[1,2]", A)
        assert e is make_int(2, A)
        assert render(e) == "2"

    def test_whitespace_insensitive(self):
        assert parse_element("-t[ 1 , 2 ]+1+t[1,2]", A) is parse_element(
            "-t[1,2] + 1 + t[1,2]", A)

    def test_letter_with_scalar_subscript(self):
        e = parse_element("t[pi(1), 2*pi(1)]", B)
        pi1 = make_pi([1])
        assert e is make_stable(pi1, parse_element("2*pi(1)", B))

    def test_scalar_is_repeated_addition(self):
        assert parse_element("3*t[1,2]", A) is parse_element(
            "t[1,2] + t[1,2] + t[1,2]", A)

    def test_parenthesized_difference(self):
        assert parse_element("(1 + 2) - 3", A) is parse_element("0", A)

    def test_wrong_variant_atoms(self):
        with pytest.raises(WrongVariant):
            parse_expr("om(0)", A)
        with pytest.raises(WrongVariant):
            parse_expr("pi(1)", A)
        with pytest.raises(WrongVariant):
            parse_expr("5", B)

    def test_scalar_allowed_under_free_base(self):
        assert parse_element("2*pi(1)", B) is make_pi([(1, 2)])

    def test_syntax_error_position(self):
        with pytest.raises(ExprSyntaxError) as exc:
            parse_expr("1 + $", A)
        assert exc.value.position == 4
        with pytest.raises(ExprSyntaxError):
            parse_expr("t[1,", A)
        with pytest.raises(ExprSyntaxError):
            parse_expr("1 2", A)


class TestRender:
    def test_zero(self):
        from hnn_nearring import ZERO
        assert render(ZERO) == "0"

    def test_letter(self):
        assert render(make_stable(make_int(2, A), make_int(-2, A))) == "t[2,-2]"

    @given(elements(A))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_A(self, e):
        assert parse_element(render(e), A) is e

    @given(elements(B))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_B(self, e):
        assert parse_element(render(e), B) is e

    @given(elements(C))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_C(self, e):
        assert parse_element(render(e), C) is e


class TestCli:
    def test_eval(self, capsys):
        assert run_cli(["eval", "--variant", "A", "-t[1,2]+1+t[1,2]"]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_mul_matches_library(self, capsys):
        assert run_cli(["mul", "--variant", "A", "t[1,-1]", "2"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "t[2,-2]"
        assert out == render(mul(parse_element("t[1,-1]", A), parse_element("2", A)))

    def test_apply(self, capsys):
        assert run_cli(["apply", "--variant", "C", "--zeta", "om(0)", "om(1)"]) == 0
        assert capsys.readouterr().out.strip() == "om(2)"

    def test_member(self, capsys):
        assert run_cli(["member", "--variant", "B", "--subgroup", "W", "pi(1)"]) == 0
        assert capsys.readouterr().out.strip() == "true"
        assert run_cli(["member", "--variant", "B", "--subgroup", "W", "pi(0)"]) == 0
        assert capsys.readouterr().out.strip() == "false"
        assert run_cli(["member", "--variant", "C", "--subgroup", "H", "om(1)"]) == 0
        assert capsys.readouterr().out.strip() == "true"

    def test_check_pass_and_json(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code = run_cli(["check", "--variant", "C", "--suite", "nonequiprime",
                        "--seed", "7", "--count", "30", "--json", str(path)])
        assert code == 0
        payload = json.loads(path.read_text())
        assert payload["passed"] is True
        assert payload["suite"] == "nonequiprime_C"
        assert list(payload) == ["suite", "variant", "seed", "count", "cases_run",
                                 "passed", "failures", "witnesses"]

    def test_check_failure_exit_code(self):
        # one sampled triple is not enough to find a left-distributivity
        # counterexample at this seed, so the suite reports failure
        code = run_cli(["check", "--variant", "A", "--suite", "leftdistrib",
                        "--seed", "1", "--count", "0"])
        assert code == 1

    def test_usage_errors(self):
        assert run_cli(["eval", "--variant", "A", "om(0)"]) == 2
        assert run_cli(["check", "--variant", "A", "--suite", "nonequiprime"]) == 2
        assert run_cli(["eval", "--variant", "Z", "1"]) == 2
        assert run_cli(["eval", "--variant", "A", "t[1,"]) == 2
        assert run_cli(["member", "--variant", "A", "--subgroup", "H", "1"]) == 2


class TestReports:
    def test_byte_identical_reruns(self):
        cfg = SampleConfig(seed=11, count=25)
        r1 = witness_nonequiprime_C(cfg)
        r2 = witness_nonequiprime_C(cfg)
        assert write_report(r1) == write_report(r2)

    def test_failure_shape(self):
        from hnn_nearring import Report
        rep = Report("synthetic", A, SampleConfig(seed=1, count=1), 1)
        rep.record(("x",), "lhs = rhs", "lhs != rhs")
        payload = json.loads(write_report(rep))
        assert payload["passed"] is False
        assert payload["failures"] == [
            {"inputs": ["x"], "expected": "lhs = rhs", "got": "lhs != rhs"}]

    def test_sampler_renders_round_trip(self):
        cfg = SampleConfig(seed=3, count=0)
        for variant in (A, B, C):
            for pos in range(40):
                e = sample_element(cfg, pos, variant)
                assert parse_element(render(e), variant) is e
