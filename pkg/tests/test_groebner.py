import random

import pytest

from hodgecalc.gb import ResourceBudget
from hodgecalc.ideals import Ideal, ideal_equal
from hodgecalc.parser import parse_polynomial
from hodgecalc.polyring import PolyRing, degrevlex, lex
from hodgecalc.rational import rat

R2 = PolyRing(("x", "y"))
R3 = PolyRing(("x", "y", "z"))


def P(text, ring=R2):
    return parse_polynomial(text, ring)


def test_buchberger_lex_examples():
    gb = Ideal(R2, [P("x^2 + y"), P("x")]).groebner(lex())
    assert [str(g) for g in gb.basis] == ["y", "x"]
    gb2 = Ideal(R2, [P("x*y - 1"), P("y^2 - 1")]).groebner(lex())
    assert [str(g) for g in gb2.basis] == ["y^2 - 1", "x - y"]
    gb3 = Ideal(R2, [P("x")]).groebner(lex())
    assert [str(g) for g in gb3.basis] == ["x"]


def test_groebner_self_check_and_membership():
    gb = Ideal(R2, [P("x*y - 1"), P("y^2 - 1")]).groebner(lex())
    assert gb.self_check()
    assert gb.normal_form(P("x^2 - 1")).is_zero()


def test_normal_form_examples():
    gb = Ideal(R2, [P("x")]).groebner()
    assert gb.normal_form(P("x^2")).is_zero()
    assert gb.normal_form(P("x + y")) == P("y")
    gb2 = Ideal(R2, [P("y - x^2")]).groebner()
    assert gb2.normal_form(P("y - x^2")).is_zero()
    # idempotence
    r = gb2.normal_form(P("y^2 + x"))
    assert gb2.normal_form(r) == r


def random_poly(rng, ring, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        c = rat(rng.randint(-6, 6))
        if c:
            terms[mono] = c
    return ring.from_terms(terms)


def test_random_ideals_match_sympy():
    sympy = pytest.importorskip("sympy")
    xs = sympy.symbols("x y")
    rng = random.Random(5)
    for trial in range(30):
        gens = [random_poly(rng, R2) for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = Ideal(R2, gens).groebner(degrevlex())
        sym_gens = [
            sum(sympy.Rational(str(c)) * xs[0] ** m[0] * xs[1] ** m[1]
                for m, c in g.terms.items())
            for g in gens
        ]
        sgb = sympy.groebner(sym_gens, *xs, order="grevlex")
        got = {frozenset(g.terms.items()) for g in gb.basis}
        want = set()
        for e in sgb.exprs:
            poly = sympy.Poly(e, *xs)
            terms = {
                mono: rat(int(c.p), int(c.q)) for mono, c in poly.terms()
            }
            mine = R2.from_terms(terms).monic(degrevlex())
            want.add(frozenset(mine.terms.items()))
        assert got == want, f"trial {trial}"


def test_spair_reduction_and_membership_on_random_ideals():
    rng = random.Random(17)
    for _ in range(40):
        gens = [random_poly(rng, R3) for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = Ideal(R3, gens).groebner()
        assert gb.self_check()


def test_step_budget_is_a_resource_error():
    gens = [P("x^3*y^2 - 7*x + y", R3), P("y^3*z - x*z + 1", R3),
            P("x*z^3 - y^2 + 3", R3)]
    with pytest.raises(ResourceBudget):
        Ideal(R3, gens).groebner(budget=2)


def test_ideal_equality_is_reduced_basis_equality():
    I = Ideal(R2, [P("x + y"), P("x - y")])
    J = Ideal(R2, [P("x"), P("y")])
    assert ideal_equal(I, J)
