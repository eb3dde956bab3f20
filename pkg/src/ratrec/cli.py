"""Command-line interface.

Commands: dispersion, denominator, gosper, gp-rep, ratsolve, verify.
Results go to stdout, diagnostics to stderr.  Exit codes: 0 on success,
1 for "no solution" / failed-verification outcomes, 2 on input errors.
With --json, stdout carries a single envelope
{"status": "ok"|"no_solution"|"error", "command": ..., "result": ...}.
"""

from __future__ import annotations

import argparse
import json
import sys

from .denominators import abramov_reduce, check_gosper_rep, check_gp_rep, gp_rep_from_trace, gp_reduce
from .dispersion import dispersion
from .expressions import EvalError, ParseError, parse_poly, parse_ratfunc
from .gcdseq import gcd_limit, universal_denominator
from .pipelines import gosper, rational_solve, verify_gosper, verify_rational
from .polys import Poly, RatFunc, exact_div, gcd_monic
from .recurrences import LinearRecurrence


def _poly_json(p: Poly) -> dict:
    return {
        "pretty": str(p),
        "coeffs": [f"{c.numerator}/{c.denominator}" for c in p.coeffs],
    }


def _ratfunc_json(r: RatFunc) -> dict:
    return {"pretty": str(r), "num": _poly_json(r.num), "den": _poly_json(r.den)}


class _CommandError(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _file_lines(path: str) -> list[str]:
    with open(path, "r", encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip()]


def _expressions(args, names: list[str], count: int | None = None) -> list[str]:
    """Expression strings for a command, from positionals or --file."""
    if args.file is not None:
        lines = _file_lines(args.file)
        if count is not None and len(lines) != count:
            raise _CommandError(f"--file needs exactly {count} expression line(s), got {len(lines)}")
        return lines
    values = [getattr(args, name) for name in names]
    if any(v is None for v in values):
        missing = [n for n, v in zip(names, values) if v is None]
        raise _CommandError(f"missing expression argument(s): {', '.join(missing)} (or use --file)")
    return values


def _nonzero_poly(text: str, what: str) -> Poly:
    p = parse_poly(text)
    if p.is_zero:
        raise _CommandError(f"{what} must be a nonzero polynomial")
    return p


def _cmd_dispersion(args) -> tuple[int, dict, list[str]]:
    first, second = _expressions(args, ["first", "second"], 2)
    result = dispersion(_nonzero_poly(first, "first argument"), _nonzero_poly(second, "second argument"))
    lines = [f"dispersion = {result.value}"]
    if args.verbose:
        for k, g in result.witnesses:
            lines.append(f"shift {k}: common factor {g}")
    payload = {
        "value": result.value,
        "witnesses": [{"shift": k, "gcd": _poly_json(g)} for k, g in result.witnesses],
    }
    return 0, payload, lines


def _cmd_denominator(args) -> tuple[int, dict, list[str]]:
    trailing_text, leading_text = _expressions(args, ["trailing", "leading"], 2)
    p0 = _nonzero_poly(trailing_text, "trailing coefficient")
    pd = _nonzero_poly(leading_text, "leading coefficient")
    if args.order < 1:
        raise _CommandError("--order must be at least 1")
    payload: dict = {"order": args.order, "method": args.method}
    lines: list[str] = []
    if args.method == "explicit":
        trace = gcd_limit(p0, pd, args.order)
        denominator = universal_denominator(p0, pd, args.order)
        payload["max_shift"] = trace.max_shift
        if args.verbose:
            payload["trace"] = [_poly_json(g) for g in trace.trace]
            lines.append(f"max shift = {trace.max_shift}")
            for i, g in enumerate(trace.trace, start=1):
                lines.append(f"gcd sequence [{i}]: {g}")
    elif args.method == "abramov":
        reduction = abramov_reduce(p0, pd, args.order)
        denominator = reduction.denominator
        payload["max_shift"] = reduction.max_shift
        if args.verbose:
            payload["trace"] = [_poly_json(g) for g in reduction.step_gcds]
            lines.append(f"max shift = {reduction.max_shift}")
            for i, g in zip(range(reduction.max_shift, -1, -1), reduction.step_gcds):
                lines.append(f"extracted at shift {i}: {g}")
    else:  # gp
        if args.order != 1:
            raise _CommandError("--method gp applies only to --order 1")
        num, den = pd, p0
        g = gcd_monic(num, den)
        if g.degree > 0:
            num, den = exact_div(num, g), exact_div(den, g)
        reduction = gp_reduce(num, den)
        denominator = reduction.denominator
        payload["max_shift"] = reduction.max_shift
        if args.verbose:
            payload["trace"] = [_poly_json(g) for g in reduction.step_gcds]
            lines.append(f"max shift = {reduction.max_shift}")
            for i, g in enumerate(reduction.step_gcds, start=1):
                lines.append(f"extracted at shift {i}: {g}")
    payload["denominator"] = _poly_json(denominator)
    lines.insert(0, f"denominator = {denominator}")
    return 0, payload, lines


def _cmd_gosper(args) -> tuple[int, dict, list[str]]:
    (ratio_text,) = _expressions(args, ["ratio"], 1)
    ratio = parse_ratfunc(ratio_text)
    if ratio.is_zero:
        raise _CommandError("the term ratio must be nonzero")
    solution = gosper(ratio)
    if solution is None:
        return 1, {"reason": "no hypergeometric antidifference exists"}, [
            "no hypergeometric antidifference exists"
        ]
    lines = [
        f"max shift = {solution.max_shift}",
        f"denominator g = {solution.raw_denominator}",
        f"numerator f = {solution.raw_numerator}",
        f"certificate y = {solution.certificate}",
    ]
    if args.verbose:
        for i, g in enumerate(solution.gcd_trace.trace, start=1):
            lines.append(f"gcd sequence [{i}]: {g}")
    payload = {
        "max_shift": solution.max_shift,
        "g": _poly_json(solution.raw_denominator),
        "f": _poly_json(solution.raw_numerator),
        "y": _ratfunc_json(solution.certificate),
        "verified": verify_gosper(solution),
    }
    if args.verbose:
        payload["trace"] = [_poly_json(g) for g in solution.gcd_trace.trace]
    return 0, payload, lines


def _cmd_gp_rep(args) -> tuple[int, dict, list[str]]:
    (ratio_text,) = _expressions(args, ["ratio"], 1)
    ratio = parse_ratfunc(ratio_text)
    if ratio.is_zero:
        raise _CommandError("the ratio must be nonzero")
    rep = gp_rep_from_trace(ratio.num, ratio.den)
    gosper_ok = check_gosper_rep(rep)
    gp_ok = check_gp_rep(rep)
    lines = [
        f"num factor = {rep.num_factor}",
        f"den factor = {rep.den_factor}",
        f"shift factor = {rep.shift_factor}",
        f"gosper conditions: {'ok' if gosper_ok.ok else 'failed'}",
        f"gp conditions: {'ok' if gp_ok.ok else 'failed'}",
    ]
    payload = {
        "num_factor": _poly_json(rep.num_factor),
        "den_factor": _poly_json(rep.den_factor),
        "shift_factor": _poly_json(rep.shift_factor),
        "gosper_conditions_ok": gosper_ok.ok,
        "gp_conditions_ok": gp_ok.ok,
    }
    return 0, payload, lines


def _parse_recurrence(args) -> LinearRecurrence:
    if args.file is not None:
        lines = _file_lines(args.file)
        if len(lines) < 3:
            raise _CommandError("--file needs at least 3 lines: trailing..leading coefficients, then the right-hand side")
        coeff_texts, rhs_text = lines[:-1], lines[-1]
    else:
        if args.coeffs is None:
            raise _CommandError("missing --coeffs (or use --file)")
        coeff_texts, rhs_text = args.coeffs, args.rhs
    if len(coeff_texts) < 2:
        raise _CommandError("a recurrence needs at least two coefficients (order >= 1)")
    coeffs = tuple(parse_poly(t) for t in coeff_texts)
    if coeffs[0].is_zero or coeffs[-1].is_zero:
        raise _CommandError("the trailing and leading coefficients must be nonzero")
    return LinearRecurrence(coeffs, parse_poly(rhs_text))


def _cmd_ratsolve(args) -> tuple[int, dict, list[str]]:
    rec = _parse_recurrence(args)
    result = rational_solve(rec)
    numerators = result.numerators
    payload = {
        "max_shift": result.max_shift,
        "denominator": _poly_json(result.denominator),
        "degree_bound": numerators.degree_bound,
        "particular": None if result.particular is None else _ratfunc_json(result.particular),
        "homogeneous": [_ratfunc_json(h) for h in result.homogeneous],
        "numerator_particular": None
        if numerators.particular is None
        else _poly_json(numerators.particular),
        "numerator_basis": [_poly_json(h) for h in numerators.homogeneous_basis],
    }
    lines = [
        f"max shift = {result.max_shift}",
        f"denominator = {result.denominator}",
    ]
    if result.particular is None:
        lines.append("no rational solution")
        return 1, payload, lines
    lines.append(f"particular = {result.particular}")
    for i, h in enumerate(result.homogeneous):
        lines.append(f"homogeneous[{i}] = {h}")
    if args.verbose:
        lines.append(f"degree bound = {numerators.degree_bound}")
        if numerators.particular is not None:
            lines.append(f"numerator particular = {numerators.particular}")
        for i, h in enumerate(numerators.homogeneous_basis):
            lines.append(f"numerator basis[{i}] = {h}")
    return 0, payload, lines


def _cmd_verify_gosper(args) -> tuple[int, dict, list[str]]:
    ratio_text, certificate_text = _expressions(args, ["ratio", "certificate"], 2)
    ratio = parse_ratfunc(ratio_text)
    certificate = parse_ratfunc(certificate_text)
    ok = ratio * certificate.shifted(1) - certificate == RatFunc.one()
    payload = {"verified": ok}
    return (0 if ok else 1), payload, [f"verified: {'true' if ok else 'false'}"]


def _cmd_verify_ratsolve(args) -> tuple[int, dict, list[str]]:
    if args.file is not None:
        lines = _file_lines(args.file)
        if len(lines) < 4:
            raise _CommandError(
                "--file needs at least 4 lines: coefficients, right-hand side, then the candidate solution"
            )
        solution_text = lines[-1]
        args.file = None
        args.coeffs, args.rhs = lines[:-2], lines[-2]
    else:
        if args.solution is None:
            raise _CommandError("missing --solution (or use --file)")
        solution_text = args.solution
    rec = _parse_recurrence(args)
    ok = verify_rational(rec, parse_ratfunc(solution_text))
    payload = {"verified": ok}
    return (0 if ok else 1), payload, [f"verified: {'true' if ok else 'false'}"]


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="emit a JSON envelope on stdout")
    sub.add_argument("--verbose", action="store_true", help="include reduction traces")
    sub.add_argument("--file", help="read the input expressions from a file, one per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratrec",
        description="Exact Gosper summation and rational solutions of linear difference equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dispersion", help="largest shift at which two polynomials share a factor")
    p.add_argument("first", nargs="?")
    p.add_argument("second", nargs="?")
    _add_common(p)
    p.set_defaults(handler=_cmd_dispersion)

    p = sub.add_parser("denominator", help="universal denominator from the trailing and leading coefficients")
    p.add_argument("trailing", nargs="?")
    p.add_argument("leading", nargs="?")
    p.add_argument("--order", type=int, required=True, help="order d of the difference equation")
    p.add_argument("--method", choices=("explicit", "abramov", "gp"), default="explicit")
    _add_common(p)
    p.set_defaults(handler=_cmd_denominator)

    p = sub.add_parser("gosper", help="indefinite hypergeometric summation from the term ratio")
    p.add_argument("ratio", nargs="?")
    _add_common(p)
    p.set_defaults(handler=_cmd_gosper)

    p = sub.add_parser("gp-rep", help="Gosper-Petkovsek representation of a rational function")
    p.add_argument("ratio", nargs="?")
    _add_common(p)
    p.set_defaults(handler=_cmd_gp_rep)

    p = sub.add_parser("ratsolve", help="all rational solutions of a linear difference equation")
    p.add_argument("--coeffs", nargs="+", help="coefficient polynomials, trailing to leading")
    p.add_argument("--rhs", default="0", help="right-hand side polynomial (default 0)")
    _add_common(p)
    p.set_defaults(handler=_cmd_ratsolve)

    p = sub.add_parser("verify", help="check a certificate")
    verify_sub = p.add_subparsers(dest="verify_command", required=True)

    v = verify_sub.add_parser("gosper", help="check ratio * y(n+1) - y(n) = 1")
    v.add_argument("ratio", nargs="?")
    v.add_argument("certificate", nargs="?")
    _add_common(v)
    v.set_defaults(handler=_cmd_verify_gosper)

    v = verify_sub.add_parser("ratsolve", help="check a rational solution of a recurrence")
    v.add_argument("--coeffs", nargs="+")
    v.add_argument("--rhs", default="0")
    v.add_argument("--solution", help="candidate rational solution")
    _add_common(v)
    v.set_defaults(handler=_cmd_verify_ratsolve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports its own errors on stderr
        return int(exc.code or 0)
    command = args.command if args.command != "verify" else f"verify {args.verify_command}"
    try:
        code, payload, lines = args.handler(args)
    except (_CommandError, ParseError, EvalError, ValueError, ZeroDivisionError, OSError) as exc:
        message = getattr(exc, "message", None) or str(exc)
        print(f"error: {message}", file=sys.stderr)
        if args.json:
            envelope = {"status": "error", "command": command, "result": {"message": message}}
            offset = getattr(exc, "offset", None)
            if offset is not None:
                envelope["result"]["offset"] = offset
            print(json.dumps(envelope))
        return 2
    if args.json:
        status = "ok" if code == 0 else "no_solution"
        print(json.dumps({"status": status, "command": command, "result": payload}))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
