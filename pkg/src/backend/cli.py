"""
Command-line front end.

Exit codes: 0 on success, 1 on a domain error (message on stderr), 2 on a
usage error (bad flags, non-prime p, unparsable expression).
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from backend.bench import render_bench, run_bench
from backend.expr import parse_ratfn
from backend.logs import configure_logging
from backend.selftest import run_selftest
from core.errors import (
    ExprSyntaxError,
    InvariantViolation,
    MalformedSeriesSpec,
    PClosedError,
    UnknownVariable,
)
from core.field import is_prime
from core.models.reports import (
    CartierModel,
    CriterionReportModel,
    DecompositionModel,
    MonomialModel,
    MultiplierModel,
    SeriesModel,
    WitnessModel,
)
from core.settings import Settings
from derivations.cartier import OneForm, cartier
from derivations.criterion import hamiltonian_decompose, is_p_closed
from derivations.derivation import Derivation, closure_witness
from derivations.monomial import classify_monomial, proof_case
from derivations.multiplier import find_multiplier
from derivations.series import SeriesSpec, series_verify

logger = logging.getLogger(__name__)

USAGE_ERRORS = (ExprSyntaxError, UnknownVariable)


def prime_arg(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _emit(lines: List[str]) -> None:
    print("\n".join(lines))


def _poly_of(text: str, p: int, what: str):
    value = parse_ratfn(text, p)
    if not value.is_polynomial:
        raise MalformedSeriesSpec(f"{what} = {value} must be a polynomial")
    return value.num


# --- commands -----------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    f, g = parse_ratfn(args.f, args.p), parse_ratfn(args.g, args.p)
    report = is_p_closed(f, g, witness=not args.no_witness)
    model = CriterionReportModel.from_report(report)
    if args.json:
        print(model.to_json())
        return 0
    lines = [
        f"p: {model.p}",
        f"f: {model.f}",
        f"g: {model.g}",
        f"a: {model.a}",
        f"c_f: {model.c_f}  (p-th root {model.c_f_root})",
        f"c_g: {model.c_g}  (p-th root {model.c_g_root})",
        f"obstruction: {model.obstruction}",
        f"p_closed: {str(model.p_closed).lower()}",
    ]
    if model.witness_a is not None:
        lines.append(f"witness a: {model.witness_a}")
    _emit(lines)
    return 0


def cmd_multiplier(args: argparse.Namespace) -> int:
    texts = [t.strip() for t in args.f.split(",")]
    coeffs = [parse_ratfn(t, args.p, len(texts)) for t in texts]
    a = find_multiplier(coeffs)
    model = MultiplierModel(p=args.p, coeffs=[str(c) for c in coeffs], a=str(a))
    if args.json:
        print(model.to_json())
    else:
        _emit([f"a: {model.a}"])
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    f, g = parse_ratfn(args.f, args.p), parse_ratfn(args.g, args.p)
    found = closure_witness(Derivation.of(f, g))
    model = WitnessModel(
        p=args.p, f=str(f), g=str(g), p_closed=found is not None,
        a=str(found.a) if found is not None else None,
    )
    if args.json:
        print(model.to_json())
    else:
        _emit([f"a: {model.a}" if model.p_closed else "not p-closed"])
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    f, g = parse_ratfn(args.f, args.p), parse_ratfn(args.g, args.p)
    dec = hamiltonian_decompose(f, g)
    model = DecompositionModel(p=args.p, f=str(f), g=str(g), h=str(dec.h), c_f=str(dec.c_f), c_g=str(dec.c_g))
    if args.json:
        print(model.to_json())
    else:
        _emit([f"h: {model.h}", f"c_f: {model.c_f}", f"c_g: {model.c_g}"])
    return 0


def cmd_cartier(args: argparse.Namespace) -> int:
    w = OneForm(parse_ratfn(args.u, args.p), parse_ratfn(args.v, args.p))
    image = cartier(w)
    model = CartierModel(p=args.p, u=str(w.u), v=str(w.v), cartier_u=str(image.u), cartier_v=str(image.v))
    if args.json:
        print(model.to_json())
    else:
        _emit([f"C: {image}"])
    return 0


def cmd_classify_monomial(args: argparse.Namespace) -> int:
    cls = classify_monomial(args.mx, args.my, args.p)
    model = MonomialModel(
        p=args.p, m_x=cls.m_x, m_y=cls.m_y, n_x=cls.n_x, n_y=cls.n_y,
        eps_x=cls.eps_x.value, eps_y=cls.eps_y.value, p_closed=cls.p_closed,
        proof_case=proof_case(cls),
    )
    if args.json:
        print(model.to_json())
        return 0
    _emit([
        f"n: ({model.n_x}, {model.n_y})",
        f"eps: ({model.eps_x}, {model.eps_y})",
        "p-closed" if model.p_closed else "not p-closed",
    ])
    return 0


def cmd_series_gen(args: argparse.Namespace) -> int:
    spec = SeriesSpec(_poly_of(args.h, args.p, "h"), _poly_of(args.c, args.p, "c"), args.level)
    report = series_verify(spec)
    model = SeriesModel.from_report(report)
    if args.json:
        print(model.to_json())
        return 0
    lowest = "none (obstruction is 0)" if model.lowest_degree is None else str(model.lowest_degree)
    lines = [
        f"f: {model.f}",
        f"g: {model.g}",
        f"divergence_free: {str(model.divergence_free).lower()}",
        f"c_f: {model.c_f}",
        f"c_g: {model.c_g}",
        f"threshold: {model.threshold}",
        f"lowest_degree: {lowest}",
        f"vanishes_below_threshold: {str(model.vanishes_below_threshold).lower()}",
    ]
    lines.extend(f"FAIL {message}" for message in model.failures)
    _emit(lines)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    report = run_bench(args.p, args.deg, args.trials, args.seed, args.workers)
    if args.json:
        print(report.to_json())
    else:
        print(render_bench(report))
    return 0 if report.agreements == report.trials else 1


def cmd_selftest(args: argparse.Namespace) -> int:
    report = run_selftest(args.workers)
    if args.json:
        print(report.to_json())
    else:
        _emit([f"{'ok' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "") for c in report.cases])
        print(f"{report.passed} passed, {report.failed} failed")
    return 0 if report.failed == 0 else 1


# --- parser -------------------------------------------------------------------


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pclosed", description="Exact p-closedness of derivations over F_p(x, y).")
    parser.add_argument(
        "--log-level", type=str.upper, default=settings.log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    parser.add_argument("--log-format", choices=["plain", "json"], default=settings.log_format)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, needs_p: bool = True) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        if needs_p:
            cmd.add_argument("--p", type=prime_arg, required=True, help="characteristic (a prime)")
        cmd.add_argument("--json", action="store_true", help="emit a pclosed/1 JSON document")
        cmd.set_defaults(handler=handler)
        return cmd

    check = command("check", cmd_check, "run the p-closedness criterion on f d/dx + g d/dy")
    check.add_argument("--f", required=True)
    check.add_argument("--g", required=True)
    check.add_argument("--no-witness", action="store_true", help="skip the brute-force D^p")

    multiplier = command("multiplier", cmd_multiplier, "find a with sum_i d/dx_i (a f_i) = 0")
    multiplier.add_argument("--f", required=True, help="comma-separated coefficients f_1,...,f_n")

    witness = command("witness", cmd_witness, "compute a with D^p = a D by brute force")
    witness.add_argument("--f", required=True)
    witness.add_argument("--g", required=True)

    decompose = command("decompose", cmd_decompose, "write a divergence-free pair as Hamiltonian plus c-terms")
    decompose.add_argument("--f", required=True)
    decompose.add_argument("--g", required=True)

    cart = command("cartier", cmd_cartier, "apply the Cartier operator to the closed form u dx + v dy")
    cart.add_argument("--u", required=True)
    cart.add_argument("--v", required=True)

    mono = command(
        "classify-monomial", cmd_classify_monomial,
        "classify y^my d/dx + x^mx d/dy (integer exponents only)",
    )
    mono.add_argument("--mx", type=int, required=True)
    mono.add_argument("--my", type=int, required=True)

    series = command("series-gen", cmd_series_gen, "generate and check a truncated p-closed series pair")
    series.add_argument("--h", required=True)
    series.add_argument("--c", default="1", help="polynomial in x^p, y^p")
    series.add_argument("--level", type=int, default=1)

    bench = command("bench", cmd_bench, "time the fast criterion against brute force")
    bench.add_argument("--deg", type=positive_int, default=3)
    bench.add_argument("--trials", type=positive_int, default=25)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--workers", type=positive_int, default=settings.workers)

    selftest = command("selftest", cmd_selftest, "run the embedded worked examples", needs_p=False)
    selftest.add_argument("--workers", type=positive_int, default=settings.workers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    try:
        settings = Settings.from_env()
    except ValidationError as exc:
        print(f"error: bad environment settings: {exc}", file=sys.stderr)
        return 2

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging(args.log_level, args.log_format)
    try:
        return args.handler(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        logger.error("internal check failed: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PClosedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
