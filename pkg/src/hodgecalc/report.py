"""Structured text reports.

A report is an ordered key/value document in the polynomial grammar
(see report_schema.txt at the repository root).  Field order is fixed;
two runs of the same job produce byte-identical documents apart from
the [timings] section.  Ideals are printed as reduced Groebner bases
under degrevlex in the job's variables, so re-parsing reproduces them.
"""

from __future__ import annotations

from . import __version__
from .ideals import Ideal
from .polyring import PolyRing, format_polynomial
from .rational import format_rational


IDEAL_SEP = "; "


def format_ideal(I: Ideal) -> str:
    gb = I.groebner()
    if not gb.basis:
        return "{ 0 }"
    return "{ " + IDEAL_SEP.join(format_polynomial(g) for g in gb.basis) + " }"


def parse_ideal(text: str, ring: PolyRing) -> Ideal:
    from .parser import parse_polynomial

    body = text.strip()
    if body.startswith("{"):
        body = body[1:]
    if body.endswith("}"):
        body = body[:-1]
    gens = [part.strip() for part in body.split(";") if part.strip()]
    polys = [parse_polynomial(g, ring) for g in gens if g != "0"]
    return Ideal(ring, polys)


def canonical_ideal_text(text: str, ring: PolyRing) -> str:
    return format_ideal(parse_ideal(text, ring))


def _fmt_bool(v) -> str:
    if v is None:
        return "(skipped)"
    return "true" if v else "false"


def render_report(report) -> str:
    """Serialize a HodgeReport with stable field order."""
    job = report.job
    lines: list[str] = []
    add = lines.append
    add("hodgecalc report v1")
    add(f"tool = hodgecalc {__version__}")
    add("")
    add("[job]")
    add(f"vars = {','.join(job.variables)}")
    add(f"poly = {job.poly_text}")
    add(f"max_level = {job.max_level}")
    add(f"arrangement = {_fmt_bool(job.arrangement)}")
    add(f"weights = {','.join(str(w) for w in job.weights) if job.weights else '(none)'}")
    add(f"bfunction_injected = {job.bfunction_text or '(none)'}")
    pins = "; ".join(
        f"{p.name}={p.value}:{p.provenance}" for p in job.pins.values()
    )
    add(f"pins = {pins or '(none)'}")
    add(f"budget = {job.budget if job.budget is not None else '(default)'}")
    add("")
    add("[verdicts]")
    for name in (
        "reduced",
        "euler",
        "strong_euler",
        "linear_jacobian_type",
        "roots_in_interval",
        "minus_one_is_root",
        "parametrically_prime",
        "hypotheses",
    ):
        if name in report.verdicts:
            value, prov = report.verdicts[name]
            text = value if isinstance(value, str) else _fmt_bool(value)
            add(f"{name} = {text} ({prov})")
        else:
            add(f"{name} = (not reached)")
    add("")
    add("[bfunction]")
    if report.bdata is not None:
        b = report.bdata
        add(f"provenance = {b.provenance}")
        add(f"b = {format_polynomial(b.b)}")
        roots = "; ".join(f"{format_rational(r)}:{m}" for r, m in b.roots)
        add(f"roots = {roots}")
        add(f"beta = {format_polynomial(b.beta) if b.beta is not None else '(none)'}")
        add(
            "beta_prime = "
            + (format_polynomial(b.beta_prime) if b.beta_prime is not None else "(none)")
        )
        add(f"r_f = {b.r_f if b.r_f is not None else '(none)'}")
    else:
        add("b = (not reached)")
    add("")
    add("[ideals]")
    add(f"label = {report.ideal_label}")
    for k in sorted(report.ideals):
        add(f"I{k} = {format_ideal(report.ideals[k])}")
    add(f"genlevel = {report.genlevel if report.genlevel is not None else '(skipped)'}")
    add("")
    add("[checks]")
    add(f"k0_routes_agree = {_fmt_bool(report.k0_routes_agree)}")
    add(f"monotone = {_fmt_bool(report.monotone)}")
    add(f"rf_containment = {_fmt_bool(report.rf_containment)}")
    add(f"beta_in_gamma = {_fmt_bool(report.beta_in_gamma)}")
    add(f"oracle_agrees = {_fmt_bool(report.oracle_agrees)}")
    add(f"pw_criterion = {_fmt_bool(report.pw_criterion)}")
    add(f"failure_stage = {report.failure_stage or '(none)'}")
    if report.failure_message:
        add(f"failure_message = {report.failure_message}")
    add("")
    add("[timings]")
    for rec in report.stages:
        add(f"{rec.name} = {rec.seconds:.3f}")
    add("")
    return "\n".join(lines)


def report_fields(text: str) -> dict:
    """Flat key -> value map of a rendered report (last wins per key)."""
    out = {}
    section = ""
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            continue
        if "=" in line:
            key, value = line.split("=", 1)
            out[f"{section}.{key.strip()}" if section else key.strip()] = value.strip()
    return out


def strip_timings(text: str) -> str:
    """Report text without the [timings] section (determinism compares)."""
    lines = []
    skipping = False
    for line in text.splitlines():
        if line.strip() == "[timings]":
            skipping = True
            continue
        if skipping:
            if line.startswith("[") and line.endswith("]"):
                skipping = False
            else:
                continue
        lines.append(line)
    return "\n".join(lines)
