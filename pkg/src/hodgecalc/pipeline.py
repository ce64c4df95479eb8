"""Job orchestration: hypotheses, annihilator path selection, b-function,
Hodge ideals, generation level, and every cross-check, with per-stage
timing and provenance."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import dmod, hodge
from .arrangements import Arrangement, mustata_multiplier_ideal
from .gb import ResourceBudget
from .ideals import Ideal, ideal_equal
from .parser import ParseError, parse_polynomial
from .polyring import Polynomial, PolyRing, weighted_degree
from .rational import rat


class HypothesisFailure(RuntimeError):
    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class InputError(ValueError):
    pass


@dataclass
class Pin:
    name: str
    value: str
    provenance: str  # 'paper' | 'user'


@dataclass
class JobSpec:
    variables: tuple[str, ...]
    poly_text: str
    bfunction_text: str | None = None
    weights: tuple | None = None
    arrangement: bool = False
    max_level: int = 0
    pins: dict[str, Pin] = field(default_factory=dict)
    budget: int | None = None
    force: bool = False
    check_rf: bool = True
    candidate_primes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.max_level < 0:
            raise InputError("max level must be non-negative")
        for pin in self.pins.values():
            if pin.provenance not in ("paper", "user"):
                raise InputError(f"pin provenance must be paper|user: {pin}")


@dataclass
class StageRecord:
    name: str
    seconds: float
    note: str = ""


@dataclass
class HodgeReport:
    job: JobSpec
    f: Polynomial | None = None
    verdicts: dict = field(default_factory=dict)       # name -> (value, provenance)
    bdata: dmod.BFunctionData | None = None
    ideals: dict = field(default_factory=dict)          # k -> Ideal
    ideal_label: str = "hodge"
    genlevel: int | None = None
    oracle_agrees: bool | None = None
    k0_routes_agree: bool | None = None
    rf_containment: bool | None = None
    beta_in_gamma: bool | None = None
    monotone: bool | None = None
    pw_criterion: bool | None = None
    stages: list[StageRecord] = field(default_factory=list)
    failure_stage: str | None = None
    failure_message: str | None = None
    failure_kind: str | None = None   # input | hypothesis | resource
    internals: dict = field(default_factory=dict)  # ann_s, b_basis, gamma


def _verdict(report, name, value, provenance="computed"):
    report.verdicts[name] = (value, provenance)


def analyze(job: JobSpec) -> HodgeReport:
    """Run the full pipeline; on error the report carries the failing
    stage, its kind, and everything computed before it."""
    report = HodgeReport(job)
    clock = time.perf_counter

    def stage(name):
        class _Ctx:
            def __enter__(self):
                self.t0 = clock()
                return self

            def __exit__(self, exc_type, exc, tb):
                report.stages.append(StageRecord(name, clock() - self.t0))
                if exc is not None:
                    report.failure_stage = name
                    report.failure_message = str(exc)
                return False

        return _Ctx()

    try:
        _run_stages(job, report, stage)
    except InputError:
        report.failure_kind = "input"
    except HypothesisFailure:
        report.failure_kind = "hypothesis"
    except ResourceBudget:
        report.failure_kind = "resource"
    return report


def _run_stages(job: JobSpec, report: HodgeReport, stage) -> None:
    budget = job.budget
    with stage("parse"):
        try:
            ring = PolyRing(job.variables)
            f = parse_polynomial(job.poly_text, ring)
        except (ParseError, ValueError) as exc:
            raise InputError(str(exc)) from exc
        if f.is_zero() or f.is_constant():
            raise InputError("the divisor polynomial must be nonconstant")
        report.f = f
    n = ring.nvars

    with stage("reduced"):
        red = dmod.reduced_check(f)
        _verdict(report, "reduced", red)
        if not red:
            raise HypothesisFailure("reduced", "f is not reduced")

    with stage("euler"):
        cert = dmod.euler_field(f)
        _verdict(report, "euler", cert is not None)
        _verdict(report, "strong_euler", bool(cert and cert.strong))
        if cert is None:
            raise HypothesisFailure("euler", "no Euler field at the origin")

    with stage("linear-jacobian-type"):
        ljt = dmod.linear_jacobian_type(f, budget=budget)
        _verdict(report, "linear_jacobian_type", ljt.value)

    with stage("annihilator"):
        pin_bound = job.pins.get("annihilator_order_bound")
        if ljt.value:
            ann_s = dmod.annihilator_fs(f, "log-derivation-path", euler=cert,
                                        budget=budget)
            ann_method = "log-derivation-path"
        elif pin_bound is not None:
            bound = int(pin_bound.value)
            gens, W = dmod.annihilator_order_bounded(f, bound, shift=0)
            gens = list(gens) + [cert.s_generator(W, 0)]
            ann_s = dmod.WeylIdeal(W, gens)
            ann_method = f"order-bounded({bound}, {pin_bound.provenance})"
        else:
            ann_s = dmod.annihilator_fs(f, "general", budget=budget)
            ann_method = "general"
        ann_sminus1 = ann_s.shift_s(-1)
        report.internals["ann_s"] = ann_s
        report.internals["ann_sminus1"] = ann_sminus1
        report.internals["method"] = ann_method

    with stage("bernstein-sato"):
        b_basis = dmod.bfunction_basis(f, ann_s, budget=budget)
        report.internals["b_basis"] = b_basis
        if job.bfunction_text:
            sr = dmod.s_ring()
            b = parse_polynomial(job.bfunction_text, sr).monic(sr.order)
            if not dmod.bfunction_membership_check(f, ann_s, b, budget=budget,
                                                   basis=b_basis):
                raise HypothesisFailure(
                    "bernstein-sato",
                    "injected b-function fails the functional-equation membership",
                )
            roots = dmod.rational_roots_with_multiplicity(b)
            bdata = dmod.BFunctionData(b, roots, provenance="injected")
        else:
            bdata = dmod.bernstein_sato(f, ann_s, budget=budget, basis=b_basis)
        report.bdata = bdata
        interval_ok = bdata.roots_in_interval(-2, 0)
        _verdict(report, "roots_in_interval", interval_ok,
                 bdata.provenance)
        has_minus_one = any(r == rat(-1) for r, _m in bdata.roots)
        _verdict(report, "minus_one_is_root", has_minus_one)
        if not interval_ok:
            raise HypothesisFailure(
                "bernstein-sato", "b-function roots leave (-2,0)"
            )

    with stage("beta-split"):
        beta, beta_prime, r_f = hodge.split_beta(bdata)

    with stage("parametrically-prime"):
        pin = job.pins.get("parametrically_prime")
        if ljt.value:
            pv = dmod.parametrically_prime(f, ljt=ljt, budget=budget)
            _verdict(report, "parametrically_prime", pv.status, "computed")
        elif pin is not None:
            _verdict(report, "parametrically_prime", pin.value, pin.provenance)
        else:
            gr = None
            candidates = []
            if job.candidate_primes:
                gr = dmod.gr_ord_annihilator_ideal(f, ann_s, budget=budget)
                candidates = [
                    Ideal(gr.ring, [parse_polynomial(t, gr.ring)
                                    for t in text.split(";")])
                    for text in job.candidate_primes
                ]
            pv = dmod.parametrically_prime(
                f, ljt=ljt, gr_ideal=gr, candidate_primes=candidates,
                budget=budget,
            )
            _verdict(report, "parametrically_prime", pv.status, "computed")

    prime_status = report.verdicts["parametrically_prime"][0]
    hypotheses_ok = (
        report.verdicts["euler"][0]
        and prime_status == "prime"
        and report.verdicts["roots_in_interval"][0]
    )
    _verdict(report, "hypotheses", hypotheses_ok)
    if not hypotheses_ok:
        report.ideal_label = "formula-output" if job.force else "hodge-k0-only"

    with stage("gamma"):
        # the s -> s-1 twist of the b-stage basis is a basis for
        # ann f^(s-1) + (f) under the same order (leading terms survive)
        base_gb = [g.substitute_s(-1) for g in b_basis]
        gamma = hodge.gamma_ideal(f, beta, ann_sminus1, budget=budget,
                                  base_gb=base_gb)
        report.internals["gamma"] = gamma
        report.internals["base_gb_sminus1"] = base_gb

    top_level = max(job.max_level, n - 2)
    levels = list(range(0, top_level + 1))
    if not hypotheses_ok and not job.force:
        levels = [0]
    with stage("hodge-ideals"):
        for k in levels:
            report.ideals[k] = hodge.hodge_ideal(gamma, k, budget=budget)

    with stage("k0-cross-check"):
        I0elim = hodge.hodge_ideal_k0_by_elimination(gamma, budget=budget)
        report.k0_routes_agree = ideal_equal(report.ideals[0], I0elim)

    if len(levels) > 1:
        with stage("generation-level"):
            if top_level >= n - 2:
                report.genlevel = hodge.generation_level(
                    f, report.ideals, n, budget=budget
                )
        with stage("monotonicity"):
            ok = True
            for k in levels[:-1]:
                fik = Ideal(ring, [f * g for g in report.ideals[k].generators])
                if not report.ideals[k + 1].contains_ideal(fik):
                    ok = False
            report.monotone = ok

    with stage("beta-in-gamma"):
        # the generator beta(-s) sits in Gamma at filtration level r_f
        # and specializes to beta(0) != 0: the mechanism forcing f^(r_f)
        # into I_(r_f)
        beta_op = hodge.beta_of_minus_s(beta, gamma.ring)
        report.beta_in_gamma = (
            gamma.ideal.normal_form(beta_op).is_zero()
            and beta_op.sharp_order() == r_f
            and beta.constant_coeff() != 0
        )

    if job.check_rf and (hypotheses_ok or job.force):
        with stage("rf-containment"):
            if r_f in report.ideals:
                I_rf = report.ideals[r_f]
            else:
                I_rf = hodge.hodge_ideal(gamma, r_f, budget=budget)
            report.rf_containment = hodge.r_f_containment_check(f, I_rf, r_f)

    if job.arrangement:
        with stage("arrangement-oracle"):
            from .arrangements import linear_factors

            arr = Arrangement(linear_factors(f))
            oracle = mustata_multiplier_ideal(arr, budget=budget)
            report.oracle_agrees = ideal_equal(oracle, report.ideals[0])

    if job.weights:
        with stage("pw-criterion"):
            report.pw_criterion = hodge.pw_root_criterion(
                f, job.weights, budget=budget
            )



