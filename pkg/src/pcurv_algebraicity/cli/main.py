"""Command-line front end.

Exit status: 0 when a decision completed (the verdict is in the output),
2 on bad input, 3 on an inconclusive answer under --strict.
"""

import argparse
import json
import logging
import sys

from sympy import isprime

from .. import config
from ..arith.polynomials import content_primitive, format_poly
from ..bounds.dyadic import Dyadic
from ..bounds.effective import effective_bounds
from ..bounds.root_radius import cauchy_bound, root_radius_upper
from ..deciders.by_roots import decide_by_roots
from ..deciders.honda import decide_honda
from ..deciders.kronecker import kronecker_decide
from ..deciders.verdicts import Algebraic, Inconclusive, NotSplit, Transcendental, Verdict
from ..errors import ExpressionSyntaxError, NoOrdinaryPointError, PrimeRangeExceededError
from ..hermite_pade.certificate import hp_verify
from ..pcurvature.naive import curvature_naive
from ..pcurvature.prefix import BAD_PRIME, ZERO, OutcomeKind, PCurvOutcome, curvature_outcome, curvature_prefix
from ..residues.normal_form import NormalForm, StructuralClass, classify, normalize
from ..residues.resultants import delta_of, rothstein_trager
from ..utils.primes import primes_between
from ..utils.workers import BACKENDS, parallel_map
from .bench import run_bench
from .parser import ParsedInput, parse_poly, parse_ratfun
from .schemas import bounds_output, decide_output, hp_output, kronecker_output, pcurvature_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INCONCLUSIVE = 3


def _emit(model) -> None:
    print(json.dumps(model.model_dump(exclude_none=True), indent=2))


def _admissible_form(parsed: ParsedInput) -> NormalForm:
    nf = normalize(parsed.a_raw, parsed.b_raw)
    structure = classify(nf)
    if structure is not StructuralClass.ADMISSIBLE:
        raise ValueError(f"input is not admissible: {structure.value}")
    return nf


def _delta_for(parsed: ParsedInput) -> int | None:
    if not parsed.a_raw:
        return None
    nf = normalize(parsed.a_raw, parsed.b_raw)
    return delta_of(nf.b) if nf.degree >= 1 else None


def _describe(verdict: Verdict) -> str:
    if isinstance(verdict, Algebraic):
        if not verdict.residues:
            return "Algebraic (constant solutions)"
        listing = ", ".join(f"{r} (x{m})" if m > 1 else str(r) for r, m in verdict.residues)
        return f"Algebraic\nresidues: {listing}\nsolutions: y = C * prod (x - beta)^res(beta) over the poles beta"
    if isinstance(verdict, Transcendental):
        text = f"Transcendental ({verdict.reason.value})"
        if verdict.witness_prime is not None:
            text += f"\nwitness prime: {verdict.witness_prime}"
        return text
    text = f"Inconclusive: all good primes up to {verdict.checked_up_to} give zero p-curvature"
    if verdict.prime_range_exceeded:
        text += "\nsigma is beyond the supported prime range"
    return text


def cmd_decide(args) -> int:
    parsed = parse_ratfun(args.expr)
    report = None
    if args.method == "roots":
        verdict = decide_by_roots(parsed.a_raw, parsed.b_raw, n_jobs=args.threads)
    else:
        trace = (lambda p, outcome: print(f"{p}: {outcome}")) if args.trace else None
        verdict, report = decide_honda(
            parsed.a_raw,
            parsed.b_raw,
            budget=args.max_prime,
            n_jobs=args.threads,
            rel_tol=config.get_root_tolerance(),
            frac_bits=config.get_frac_bits(),
            backend=args.backend,
            on_prime=trace,
        )
    delta = report.delta if report is not None else _delta_for(parsed)
    if args.json:
        _emit(decide_output(verdict, args.method, delta, report))
    else:
        print(_describe(verdict))
        if report is not None:
            print(f"delta={report.delta} sigma={report.sigma}")
    if isinstance(verdict, Inconclusive) and args.strict:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _outcome_at(p: int, nf: NormalForm, delta: int, naive: bool) -> PCurvOutcome:
    if delta % p == 0:
        return BAD_PRIME
    if naive:
        return ZERO if curvature_naive(nf.a, nf.b, p).is_zero() else PCurvOutcome(OutcomeKind.NONZERO)
    return curvature_outcome(nf.a, nf.b, p, delta)


def cmd_pcurvature(args) -> int:
    nf = _admissible_form(parse_ratfun(args.expr))
    delta = delta_of(nf.b)
    if args.up_to is not None:
        primes = list(primes_between(1, args.up_to))
        outcomes = parallel_map(lambda p: _outcome_at(p, nf, delta, args.naive), primes, n_jobs=args.threads)
        if args.json:
            print(json.dumps([pcurvature_output(p, o).model_dump(exclude_none=True) for p, o in zip(primes, outcomes)], indent=2))
        else:
            for p, outcome in zip(primes, outcomes):
                print(f"{p}: {outcome}")
        return EXIT_OK

    if args.p is None:
        raise ValueError("pcurvature needs -p P or --up-to P")
    if not isprime(args.p):
        raise ValueError(f"{args.p} is not a prime")
    prefix = None
    if args.naive:
        outcome = _outcome_at(args.p, nf, delta, naive=True)
    else:
        try:
            prefix, outcome = curvature_prefix(nf.a, nf.b, args.p, delta)
        except NoOrdinaryPointError:
            outcome = curvature_outcome(nf.a, nf.b, args.p, delta)
    if args.json:
        _emit(pcurvature_output(args.p, outcome, prefix))
    else:
        print(outcome)
    return EXIT_OK


def cmd_bounds(args) -> int:
    nf = _admissible_form(parse_ratfun(args.expr))
    rt = rothstein_trager(nf.a, nf.b, n_jobs=args.threads)
    B = root_radius_upper(rt.R, config.get_root_tolerance()).max(Dyadic.from_int(1))
    report = effective_bounds(rt.delta, B, config.get_frac_bits())
    out = bounds_output(nf.degree, nf.height, report, cauchy_bound(rt.R))
    if args.json:
        _emit(out)
    else:
        print(f"R(w) = {format_poly(rt.R, 'w')}")
        for key, value in out.model_dump().items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_kronecker(args) -> int:
    _, R = content_primitive(parse_poly(args.poly, variable="w"))
    try:
        verdict = kronecker_decide(R, budget=args.max_prime, n_jobs=args.threads, rel_tol=config.get_root_tolerance())
    except PrimeRangeExceededError as e:
        print(f"Inconclusive: sigma={e.report.sigma} is beyond the supported prime range")
        return EXIT_INCONCLUSIVE if args.strict else EXIT_OK
    if args.json:
        _emit(kronecker_output(verdict))
    elif isinstance(verdict, NotSplit):
        detail = f"witness prime {verdict.witness_prime}" if verdict.witness_prime else "irrational root"
        print(f"NotSplit ({detail}), sigma={verdict.sigma}")
    else:
        roots = ", ".join(f"{r} (x{m})" if m > 1 else str(r) for r, m in verdict.roots)
        print(f"SplitsOverQ, sigma={verdict.sigma}\nroots: {roots}")
    return EXIT_OK


def cmd_hp_verify(args) -> int:
    cert = hp_verify(args.M, args.N, n_jobs=args.threads)
    if args.json:
        _emit(hp_output(cert))
    else:
        print(f"Verified M={cert.M} N={cert.N}: sigma={cert.sigma}, lead={cert.lead}")
    return EXIT_OK


def cmd_bench(args) -> int:
    df = run_bench(args.degree, args.height_bits, args.count, args.seed, budget=args.max_prime, n_jobs=args.threads)
    if args.csv:
        df.to_csv(args.csv, index=False)
        logger.info(f"Wrote {len(df)} rows to {args.csv}")
    else:
        print(df.to_csv(index=False), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcurv", description="Algebraicity of y' = u y with u in Q(x)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for per-prime detail")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker count (env PCURV_THREADS)")

    budgeted = argparse.ArgumentParser(add_help=False)
    budgeted.add_argument("--max-prime", type=int, default=None, help="prime budget (env PCURV_MAX_PRIME)")
    budgeted.add_argument("--strict", action="store_true", help="exit 3 when the answer is inconclusive")

    p = sub.add_parser("decide", parents=[common, budgeted], help="decide algebraicity of the solutions")
    p.add_argument("expr")
    p.add_argument("--method", choices=["pcurv", "roots"], default="pcurv")
    p.add_argument("--trace", action="store_true", help="print the outcome at every scanned prime")
    p.add_argument("--backend", choices=BACKENDS, default="threading")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("pcurvature", parents=[common], help="p-curvature nullity of the normal form a/b")
    p.add_argument("expr")
    p.add_argument("-p", type=int, default=None)
    p.add_argument("--up-to", type=int, default=None, help="outcomes for every prime up to this value")
    p.add_argument("--naive", action="store_true", help="use the direct symbolic formula")
    p.set_defaults(func=cmd_pcurvature)

    p = sub.add_parser("bounds", parents=[common], help="effective bounds delta, B, M, N, sigma")
    p.add_argument("expr")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("kronecker", parents=[common, budgeted], help="does a polynomial in w split over Q")
    p.add_argument("poly")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("hp-verify", parents=[common], help="check the Hermite-Pade identity over Q(alpha)")
    p.add_argument("-M", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.set_defaults(func=cmd_hp_verify)

    p = sub.add_parser("bench", parents=[common], help="random-input benchmark")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--height-bits", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", default=None)
    p.add_argument("--max-prime", type=int, default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")
    try:
        if args.threads is None:
            args.threads = config.get_threads()
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        if hasattr(args, "max_prime") and args.max_prime is None:
            args.max_prime = config.get_max_prime()
        return args.func(args)
    except ExpressionSyntaxError as e:
        print(f"error: {e}\n{e.caret()}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
