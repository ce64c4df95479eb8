"""Acceptance suite: one test per criterion, exact ideal equalities.

Every computed ideal is compared as a reduced Groebner basis (zero
tolerance).  Wall-clock budgets from the criteria are printed with each
verdict line; correctness is asserted, timing is reported.
"""

import time

import pytest

from hodgecalc.dmod import (
    annihilator_general,
    euler_field,
    gr_ord_annihilator_ideal,
    linear_jacobian_type,
    parametrically_prime,
    s_ring,
)
from hodgecalc.hodge import pw_root_criterion
from hodgecalc.ideals import Ideal, ideal_equal, intersect, is_associated_prime
from hodgecalc.parser import parse_polynomial
from hodgecalc.polyring import PolyRing
from hodgecalc.pipeline import JobSpec, analyze
from hodgecalc.report import format_ideal

R3 = PolyRing(("x", "y", "z"))


def P(text, ring=R3):
    return parse_polynomial(text, ring)


def ideal_of(report, k):
    return report.ideals[k]


def expect_ideal(report, k, gens, ring=R3):
    want = Ideal(ring, [parse_polynomial(t, ring) for t in gens])
    got = ideal_of(report, k)
    assert ideal_equal(got, want), (
        f"I{k}: expected {format_ideal(want)}, got {format_ideal(got)}"
    )


def wall(report):
    return sum(s.seconds for s in report.stages)


def test_criterion_01_generic_arrangement(corpus_store, record_criterion):
    t0 = time.perf_counter()
    _job, report = corpus_store["arr4"]
    ok = True
    try:
        assert report.failure_stage is None
        assert report.bdata.provenance == "computed"  # from-scratch b
        expect_ideal(report, 0, ("x", "y", "z"))
        assert report.genlevel == 0
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(1, ok, wall(report), 120)


def test_criterion_02_five_planes_from_scratch(record_criterion):
    t0 = time.perf_counter()
    job = JobSpec(
        variables=("x", "y", "z"),
        poly_text="x*y*z*(x+y+z)*(x+y+2*z)",
        max_level=1,
        arrangement=True,
    )
    report = analyze(job)
    ok = True
    try:
        assert report.failure_stage is None
        assert report.bdata.provenance == "computed"
        expect_ideal(report, 0, ("z^2", "y*z", "x*z", "x*y + y^2", "x^2 - y^2"))
        assert report.genlevel == 0
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(2, ok, time.perf_counter() - t0, 900)


def test_criterion_03_x5y4z(corpus_store, record_criterion):
    _job, report = corpus_store["x5y4z"]
    ok = True
    try:
        assert report.failure_stage is None
        assert report.bdata.provenance == "injected"
        sr = s_ring()
        want_beta = parse_polynomial(
            "(s+1/20)*(s+2/20)*(s+3/20)*(s+6/20)*(s+7/20)*(s+11/20)", sr
        )
        assert report.bdata.beta == want_beta
        expect_ideal(report, 0, ("y^3", "x*y^2", "x^2*y", "x^3"))
        assert report.genlevel == 0
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(3, ok, wall(report), 300)


def test_criterion_04_level_zero(corpus_store, record_criterion):
    _job, report = corpus_store["x5x2y3y4z"]
    ok = True
    try:
        assert report.failure_stage is None
        expect_ideal(report, 0, ("y^3", "x*y^2", "x^2*y", "x^3"))
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(4, ok, wall(report), 600,
                         note="level one: see the xfailed published-value test")


@pytest.mark.xfail(
    strict=True,
    reason=(
        "The published level-one data for x^5+x^2*y^3+y^4*z is internally "
        "inconsistent: (x,y)^7 is contained in (z,x^2,y^7,x*y^6), so the "
        "printed intersection equals (x,y)^7 and cannot contain y^6*z; the "
        "printed generator x^2*y^3 also fails the certified Gamma "
        "membership test (its unique order-one preimage reduces to a "
        "nonzero normal form against an S-pair-verified basis, and the "
        "functional equation route agrees).  The computed level-one ideal "
        "is the one-step image of level zero, giving generation level 0."
    ),
)
def test_criterion_04_level_one_as_published(corpus_store):
    _job, report = corpus_store["x5x2y3y4z"]
    published = Ideal(R3, [P(t) for t in (
        "x^7", "x^6*y", "x^5*y^2", "x*y^6", "y^7", "y^6*z", "x*y^5*z",
        "x^2*y^3",
    )])
    assert ideal_equal(ideal_of(report, 1), published)
    meet = intersect(
        Ideal(R3, [P("x"), P("y")]).power(7),
        Ideal(R3, [P("z"), P("x^2"), P("y^7"), P("x*y^6")]),
    )
    assert ideal_equal(meet, published)
    assert report.genlevel == 1


def test_criterion_04_level_one_consistency(corpus_store):
    """The defect is in the source data, not the computation: the printed
    intersection identity is false by monomial arithmetic, and the
    computed level-one ideal passes every structural cross-check."""
    _job, report = corpus_store["x5x2y3y4z"]
    A = Ideal(R3, [P("x"), P("y")]).power(7)
    B = Ideal(R3, [P("z"), P("x^2"), P("y^7"), P("x*y^6")])
    assert ideal_equal(intersect(A, B), A)  # the identity collapses
    assert report.genlevel == 0
    assert report.k0_routes_agree
    assert report.monotone
    assert report.beta_in_gamma


def test_criterion_05_four_lines(corpus_store, record_criterion):
    _job, report = corpus_store["fourlines"]
    ok = True
    try:
        assert report.failure_stage is None
        assert report.bdata.provenance == "computed"  # from-scratch b
        sr = s_ring()
        want_b = parse_polynomial("(s+1)^3*(s+1/2)*(s+3/4)*(s+5/4)", sr)
        assert report.bdata.b == want_b.monic(sr.order)
        expect_ideal(report, 0, ("y^2", "x*y", "x^2"))
        assert report.genlevel == 0
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(5, ok, wall(report), 900)


def test_criterion_06_wx_four_variables(corpus_store, record_criterion):
    ring = PolyRing(("w", "x", "y", "z"))
    _job, report = corpus_store["wx4"]
    ok = True
    try:
        assert report.failure_stage is None
        assert report.bdata.provenance == "injected"
        expect_ideal(report, 0, ("x^2", "w*x", "w^2"), ring=ring)
        assert report.genlevel == 0
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(6, ok, wall(report), 1200)


def test_criterion_07_oracle_equivalence(corpus_store, record_criterion):
    t0 = time.perf_counter()
    ok = True
    try:
        assert corpus_store["arr4"][1].oracle_agrees
        assert corpus_store["arr5"][1].oracle_agrees
        # coordinate planes: both sides are the unit ideal
        report = analyze(JobSpec(
            variables=("x", "y", "z"), poly_text="x*y*z", arrangement=True,
        ))
        assert report.failure_stage is None
        assert report.oracle_agrees
        assert ideal_equal(ideal_of(report, 0), Ideal(R3, [R3.one()]))
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(7, ok, time.perf_counter() - t0, 120)


def test_criterion_08_embedded_prime(record_criterion):
    t0 = time.perf_counter()
    ok = True
    try:
        ring = PolyRing(("x1", "x2", "x3"))
        f = parse_polynomial("(x1*x3+x2)*(x1^4-x2^4)", ring)
        ann = annihilator_general(f)
        gr = gr_ord_annihilator_ideal(f, ann, shift=-1)
        cand = Ideal(gr.ring, [parse_polynomial(t, gr.ring)
                               for t in ("x1", "x2", "xi3")])
        status, witness = is_associated_prime(gr, cand)
        assert status == "associated" and witness is not None
        verdict = parametrically_prime(
            f, ljt=linear_jacobian_type(f), gr_ideal=gr,
            candidate_primes=[cand],
        )
        assert verdict.status == "not-prime"
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(8, ok, time.perf_counter() - t0, 1800)


def test_criterion_09_property_suite(corpus_store, record_criterion):
    from . import test_properties as props

    t0 = time.perf_counter()
    ok = True
    try:
        props.test_buchberger_on_200_random_ideals()
        props.test_weyl_normal_ordering_1000_random_pairs()
        props.test_annihilator_generators_annihilate(corpus_store)
        props.test_bfunction_membership(corpus_store)
        props.test_beta_split_identities(corpus_store)
        props.test_helpcompute_on_100_random_expansions()
        props.test_graph_maps_commutativity_per_fixture(corpus_store)
        props.test_gamma_membership_iff_functional_equation(corpus_store)
        props.test_monotonicity_and_level_zero_agreement(corpus_store)
        props.test_rf_containment_where_computed(corpus_store)
        props.test_v0_witness_t_order_contraction(corpus_store)
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(9, ok, time.perf_counter() - t0, 300)


def test_criterion_10_euler_regression(record_criterion):
    t0 = time.perf_counter()
    ok = True
    try:
        R2 = PolyRing(("x", "y"))
        h = parse_polynomial("x^5 + x^2*y^3 + y^4", R2)
        lhs = parse_polynomial("90*x*y + 400", R2) * h
        rhs = (
            parse_polynomial("18*x^2*y + 9*y^2 + 80*x", R2) * h.derivative("x")
            + parse_polynomial("18*x*y^2 - 15*x^2 + 100*y", R2) * h.derivative("y")
        )
        assert lhs == rhs
        cert = euler_field(h)
        assert cert is not None and cert.strong
        assert cert.verify(h)
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(10, ok, time.perf_counter() - t0, 10)


def test_criterion_11_pw_windows(record_criterion):
    t0 = time.perf_counter()
    ok = True
    try:
        assert pw_root_criterion(P("x^5 + y^4*z"), (4, 3, 8))
        assert pw_root_criterion(P("x^2 + y^2 + z^2"), (1, 1, 1))
    except AssertionError:
        ok = False
        raise
    finally:
        record_criterion(11, ok, time.perf_counter() - t0, 60)
