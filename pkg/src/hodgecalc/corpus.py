"""Fixture corpus runner: execute job files and diff expected values.

A fixture is a key = value file (see fixtures/ for the grammar); keys
prefixed expect. are compared against the finished report.  Ideal
expectations are normalized through parse -> reduced basis -> print, so
the comparison is exact ideal equality, and a failure names the first
mismatched generator.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .pipeline import JobSpec, Pin, analyze
from .polyring import PolyRing, format_polynomial
from .report import canonical_ideal_text, format_ideal, render_report, report_fields


@dataclass
class FixtureResult:
    name: str
    passed: bool
    seconds: float
    diffs: list[str]
    error: str | None = None


def parse_fixture(path: Path) -> tuple[str, JobSpec, dict]:
    data = {}
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}: malformed line {raw!r}")
        key, value = line.split("=", 1)
        data[key.strip()] = value.strip()
    name = data.pop("name", path.stem)
    expects = {k[len("expect."):]: v for k, v in data.items() if k.startswith("expect.")}
    job = _job_from_mapping(data)
    return name, job, expects


def _job_from_mapping(data: dict) -> JobSpec:
    pins = {}
    if data.get("pin"):
        for chunk in data["pin"].split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            name, rest = chunk.split("=", 1)
            value, prov = rest.rsplit(":", 1)
            pins[name.strip()] = Pin(name.strip(), value.strip(), prov.strip())
    weights = None
    if data.get("weights"):
        weights = tuple(w.strip() for w in data["weights"].split(","))
    return JobSpec(
        variables=tuple(v.strip() for v in data["vars"].split(",")),
        poly_text=data["poly"],
        bfunction_text=data.get("bfunction") or None,
        weights=weights,
        arrangement=data.get("arrangement", "false").lower() == "true",
        max_level=int(data.get("max_level", "0")),
        pins=pins,
        budget=int(data["budget"]) if data.get("budget") else None,
        force=data.get("force", "false").lower() == "true",
        check_rf=data.get("check_rf", "true").lower() != "false",
        candidate_primes=tuple(
            t.strip() for t in data.get("candidate_primes", "").split("|") if t.strip()
        ),
    )


def _first_ideal_diff(expected: str, actual: str) -> str:
    exp = [g.strip() for g in expected.strip("{} ").split(";") if g.strip()]
    act = [g.strip() for g in actual.strip("{} ").split(";") if g.strip()]
    for i, (a, b) in enumerate(zip(exp, act)):
        if a != b:
            return f"generator {i}: expected {a!r}, got {b!r}"
    if len(exp) != len(act):
        return f"basis sizes differ: expected {len(exp)}, got {len(act)}"
    return "values differ"


def run_fixture(path: Path) -> FixtureResult:
    name, job, expects = parse_fixture(path)
    t0 = time.perf_counter()
    try:
        report = analyze(job)
    except Exception as exc:  # noqa: BLE001 - surfaced in the table
        return FixtureResult(
            name, False, time.perf_counter() - t0, [], error=f"{type(exc).__name__}: {exc}"
        )
    seconds = time.perf_counter() - t0
    text = render_report(report)
    fields = report_fields(text)
    ring = PolyRing(job.variables)
    diffs = []
    for key, expected in sorted(expects.items()):
        if key.startswith("I"):
            actual = fields.get(f"ideals.{key}")
            if actual is None:
                diffs.append(f"{key}: missing from report")
                continue
            canon = canonical_ideal_text(
                expected if expected.startswith("{") else "{ " + expected + " }",
                ring,
            )
            if canon != actual:
                diffs.append(f"{key}: {_first_ideal_diff(canon, actual)}")
        elif key in ("beta", "beta_prime", "b"):
            actual = fields.get(f"bfunction.{key}")
            from .parser import parse_polynomial
            from .dmod import s_ring

            sr = s_ring()
            canon = format_polynomial(parse_polynomial(expected, sr).monic(sr.order))
            if actual != canon:
                diffs.append(f"{key}: expected {canon!r}, got {actual!r}")
        elif key == "genlevel":
            actual = fields.get("ideals.genlevel")
            if actual != expected:
                diffs.append(f"genlevel: expected {expected}, got {actual}")
        elif key == "r_f":
            actual = fields.get("bfunction.r_f")
            if actual != expected:
                diffs.append(f"r_f: expected {expected}, got {actual}")
        else:
            actual = (
                fields.get(f"checks.{key}")
                or fields.get(f"verdicts.{key}")
                or fields.get(f"ideals.{key}")
            )
            if actual is None:
                diffs.append(f"{key}: missing from report")
            elif actual.split(" ")[0] != expected:
                diffs.append(f"{key}: expected {expected}, got {actual}")
    if report.failure_stage is not None:
        diffs.append(
            f"pipeline failed at {report.failure_stage}: {report.failure_message}"
        )
    return FixtureResult(name, not diffs, seconds, diffs)


def run_corpus(directory, workers: int = 1) -> list[FixtureResult]:
    paths = sorted(Path(directory).glob("*.job"))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_fixture, paths))
    else:
        results = [run_fixture(p) for p in paths]
    return results


def format_table(results: list[FixtureResult]) -> str:
    lines = []
    width = max((len(r.name) for r in results), default=4)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {status}  {r.seconds:8.2f}s")
        if r.error:
            lines.append(f"  error: {r.error}")
        for d in r.diffs:
            lines.append(f"  diff: {d}")
    total = sum(1 for r in results if r.passed)
    lines.append(f"{total}/{len(results)} fixtures passed")
    return "\n".join(lines)
