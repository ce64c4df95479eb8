import random

from hodgecalc.fs_action import FsExpression, act_on_fs, annihilates
from hodgecalc.parser import parse_polynomial
from hodgecalc.polyring import PolyRing
from hodgecalc.rational import rat
from hodgecalc.weyl import WeylOperator, WeylRing, parse_operator

R2 = PolyRing(("x", "y"))
W2 = WeylRing(("x", "y"), has_s=True)


def P(text, ring=R2):
    return parse_polynomial(text, ring)


def test_chain_rule_examples():
    W1 = WeylRing(("x",), has_s=True)
    assert annihilates(parse_operator("x*dx - s", W1), P("x", PolyRing(("x",))))

    f = P("x*y")
    res = act_on_fs(W2.var("dx"), FsExpression.power(f))
    # s*y*(xy)^(s-1)
    expected = FsExpression(
        f, parse_polynomial("y*s", PolyRing(("x", "y", "s"))), 1, 0
    )
    assert res == expected

    res2 = act_on_fs(W2.var("dx") * W2.var("dy"), FsExpression.power(f, 1))
    expected2 = FsExpression(
        f, parse_polynomial("s^2 + 2*s + 1", PolyRing(("x", "y", "s"))), 1, 1
    )
    assert res2 == expected2


def random_operator(rng, ring, max_terms=2, max_exp=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))
        c = rat(rng.randint(-4, 4))
        if c:
            terms[mono] = c
    return WeylOperator(ring, terms) + ring.zero()


def test_action_is_a_module_action():
    rng = random.Random(12)
    f = P("x*y + y^2")
    e = FsExpression.power(f)
    for _ in range(30):
        p = random_operator(rng, W2)
        q = random_operator(rng, W2)
        assert act_on_fs(p * q, e) == act_on_fs(p, act_on_fs(q, e))


def test_denominator_exponent_is_minimal():
    f = P("x*y")
    e = FsExpression.power(f)
    r = act_on_fs(W2.from_polynomial(f) * W2.var("dx"), e)
    # numerator x*y*s / f reduces to s with denominator exponent zero
    assert r.m == 0


def test_specialize_at_zero():
    f = P("x*y")
    e = act_on_fs(W2.var("s"), FsExpression.power(f, -1))
    frac = e.specialize()
    assert frac.is_zero()
    e2 = act_on_fs(W2.one(), FsExpression.power(f, -1))
    frac2 = e2.specialize()
    assert frac2.k == 1 and frac2.num == R2.one()
