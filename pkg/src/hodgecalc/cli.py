"""Command line interface.

    hodgecalc analyze --vars x,y,z --poly "x*y*z*(x+y+z)" --max-level 1 \
        [--bfunction "..."] [--weights 4,3,8] [--arrangement] \
        [--pin parametrically_prime=prime:paper] [--budget N] \
        [--out report.txt] [--no-figures] [--force]
    hodgecalc corpus DIR [--workers N]
    hodgecalc oracle --vars x,y,z --arrangement "x, y, z, x+y+z"

Exit codes: 0 success, 2 hypothesis failure, 3 resource budget exceeded,
4 input error.
"""

from __future__ import annotations

import argparse
import sys

from .gb import ResourceBudget
from .parser import ParseError
from .pipeline import HypothesisFailure, InputError, JobSpec, Pin, analyze

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_RESOURCE = 3
EXIT_INPUT = 4


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="hodgecalc", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="run the full pipeline on one divisor")
    an.add_argument("--vars", required=True, help="comma-separated variable names")
    an.add_argument("--poly", required=True, help="the divisor polynomial")
    an.add_argument("--bfunction", help="injected b-function in s (verified before use)")
    an.add_argument("--weights", help="comma-separated positive weights")
    an.add_argument("--max-level", type=int, default=0, dest="max_level")
    an.add_argument("--arrangement", action="store_true",
                    help="run the intersection-lattice oracle against I0")
    an.add_argument("--pin", action="append", default=[],
                    metavar="NAME=VALUE:PROVENANCE",
                    help="pin a verdict, e.g. parametrically_prime=prime:paper")
    an.add_argument("--candidate-prime", action="append", default=[],
                    metavar="GENS", help="candidate associated prime "
                    "(';'-separated generators in x/xi variables)")
    an.add_argument("--budget", type=int, help="S-pair reduction budget")
    an.add_argument("--force", action="store_true",
                    help="emit higher ideals as 'formula-output' without hypotheses")
    an.add_argument("--no-rf-check", action="store_true")
    an.add_argument("--out", help="write the report here (stdout otherwise)")
    an.add_argument("--no-figures", action="store_true",
                    help="do not render figures beside the report")

    co = sub.add_parser("corpus", help="run a fixture directory")
    co.add_argument("directory")
    co.add_argument("--workers", type=int, default=1)

    orc = sub.add_parser("oracle", help="arrangement multiplier ideal from flats")
    orc.add_argument("--vars", required=True)
    orc.add_argument("--arrangement", required=True,
                     help="comma-separated linear forms")
    return top


def _parse_pins(specs) -> dict[str, Pin]:
    pins = {}
    for spec in specs:
        try:
            name, rest = spec.split("=", 1)
            value, prov = rest.rsplit(":", 1)
        except ValueError as exc:
            raise InputError(f"malformed pin {spec!r}") from exc
        pins[name.strip()] = Pin(name.strip(), value.strip(), prov.strip())
    return pins


def _cmd_analyze(args) -> int:
    from .report import render_report

    job = JobSpec(
        variables=tuple(v.strip() for v in args.vars.split(",") if v.strip()),
        poly_text=args.poly,
        bfunction_text=args.bfunction,
        weights=tuple(w.strip() for w in args.weights.split(",")) if args.weights else None,
        arrangement=args.arrangement,
        max_level=args.max_level,
        pins=_parse_pins(args.pin),
        budget=args.budget,
        force=args.force,
        check_rf=not args.no_rf_check,
        candidate_primes=tuple(args.candidate_prime),
    )
    report = analyze(job)
    code = {
        None: EXIT_OK,
        "hypothesis": EXIT_HYPOTHESIS,
        "resource": EXIT_RESOURCE,
        "input": EXIT_INPUT,
    }[report.failure_kind]
    if report.failure_stage is not None and report.failure_kind is None:
        code = EXIT_HYPOTHESIS
    text = render_report(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        if not args.no_figures:
            from .plots import render_report_figures

            for p in render_report_figures(report, args.out):
                print(f"figure: {p}")
        print(f"report: {args.out}")
    else:
        print(text)
    return code


def _cmd_corpus(args) -> int:
    from .corpus import format_table, run_corpus

    results = run_corpus(args.directory, workers=args.workers)
    print(format_table(results))
    if not results:
        print("(empty corpus)")
        return EXIT_OK
    return EXIT_OK if all(r.passed for r in results) else EXIT_HYPOTHESIS


def _cmd_oracle(args) -> int:
    from .arrangements import Arrangement, ArrangementError, mustata_multiplier_ideal
    from .parser import parse_polynomial
    from .polyring import PolyRing
    from .report import format_ideal

    ring = PolyRing(tuple(v.strip() for v in args.vars.split(",") if v.strip()))
    try:
        forms = [
            parse_polynomial(t.strip(), ring)
            for t in args.arrangement.split(",")
            if t.strip()
        ]
        arr = Arrangement(forms)
        ideal = mustata_multiplier_ideal(arr)
    except (ArrangementError, ParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"I0 = {format_ideal(ideal)}")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "corpus":
            return _cmd_corpus(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
    except ResourceBudget as exc:
        print(f"resource budget: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, ParseError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
