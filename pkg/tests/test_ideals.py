import pytest

from hodgecalc.ideals import (
    Ideal,
    dimension_height,
    eliminate,
    graded_piece_vanishes,
    ideal_equal,
    intersect,
    is_associated_prime,
    lift,
    quotient_and_saturation,
    rees_kernel,
    syzygies,
)
from hodgecalc.parser import parse_polynomial
from hodgecalc.polyring import PolyRing

R2 = PolyRing(("x", "y"))
R3 = PolyRing(("x", "y", "z"))


def P(text, ring=R3):
    return parse_polynomial(text, ring)


def test_eliminate_parabola():
    ring = PolyRing(("t", "x", "y"))
    I = Ideal(ring, [P("x - t", ring), P("y - t^2", ring)])
    E = eliminate(I, {"t"})
    assert ideal_equal(E, Ideal(ring, [P("y - x^2", ring)]))


def test_eliminate_drops_variable():
    I = Ideal(R2, [P("x", R2), P("y", R2)])
    E = eliminate(I, {"y"})
    assert [str(g) for g in E.groebner().basis] == ["x"]
    # eliminate is a subideal free of the dropped variable
    gb = I.groebner()
    for g in E.generators:
        assert gb.normal_form(g).is_zero()


def test_eliminate_rees_style():
    ring = PolyRing(("t", "x", "y", "u1", "u2"))
    I = Ideal(ring, [P("u1 - t*y", ring), P("u2 - t*x", ring)])
    E = eliminate(I, {"t"})
    assert ideal_equal(E, Ideal(ring, [P("x*u1 - y*u2", ring)]))


def test_intersections():
    assert ideal_equal(
        intersect(Ideal(R3, [P("x")]), Ideal(R3, [P("y")])),
        Ideal(R3, [P("x*y")]),
    )
    assert ideal_equal(
        intersect(Ideal(R3, [P("x"), P("y")]), Ideal(R3, [P("z")])),
        Ideal(R3, [P("x*z"), P("y*z")]),
    )


def test_intersection_of_contained_ideal():
    """(x,y)^7 is contained in (z, x^2, y^7, x*y^6): every degree-7
    monomial with x-exponent >= 2 is a multiple of x^2 and the two
    remaining corners are generators.  The intersection is therefore
    (x,y)^7 itself."""
    A = Ideal(R3, [P("x"), P("y")]).power(7)
    B = Ideal(R3, [P("z"), P("x^2"), P("y^7"), P("x*y^6")])
    got = intersect(A, B)
    assert ideal_equal(got, A)
    gbB = B.groebner()
    for g in A.generators:
        assert gbB.normal_form(g).is_zero()
    # general intersection sanity: inside both factors, contains products
    gbA = A.groebner()
    gbI = got.groebner()
    for g in got.generators:
        assert gbA.normal_form(g).is_zero()
        assert gbB.normal_form(g).is_zero()
    for a in A.generators:
        for b in B.generators:
            assert gbI.normal_form(a * b).is_zero()


def test_quotient_and_saturation():
    q, s = quotient_and_saturation(Ideal(R2, [P("x*y", R2)]), Ideal(R2, [P("x", R2)]))
    assert ideal_equal(q, Ideal(R2, [P("y", R2)]))
    q2, s2 = quotient_and_saturation(Ideal(R2, [P("x^2*y", R2)]), Ideal(R2, [P("x", R2)]))
    assert ideal_equal(s2, Ideal(R2, [P("y", R2)]))
    q3, s3 = quotient_and_saturation(
        Ideal(R2, [P("x*y", R2)]), Ideal(R2, [P("x", R2), P("y", R2)])
    )
    assert ideal_equal(q3, Ideal(R2, [P("x*y", R2)]))
    # saturation is a fixed point
    q4, s4 = quotient_and_saturation(s2, Ideal(R2, [P("x", R2)]))
    assert ideal_equal(q4, s2)


def test_syzygies_examples():
    sx, sy = P("x", R2), P("y", R2)
    syz = syzygies([sx, sy])
    assert syz.verify()
    assert len(syz) == 1
    v = syz.generators[0]
    # the Koszul syzygy up to a scalar
    assert (v[0] * sx + v[1] * sy).is_zero()
    syz2 = syzygies([sy, sx])
    assert syz2.verify()
    v2 = syz2.generators[0]
    assert not (v2[0] - v2[1]).is_zero()
    syz3 = syzygies([P("2*x", R2), P("-3*y^2", R2)])
    assert syz3.verify() and len(syz3) == 1


def test_lift_certificates():
    gens = [P("x", R2), P("y", R2)]
    h = lift(P("x^2 + x*y", R2), gens)
    assert h is not None
    total = R2.zero()
    for c, g in zip(h, gens):
        total = total + c * g
    assert total == P("x^2 + x*y", R2)
    assert lift(P("1", R2), gens) is None


def test_dimension_height():
    assert dimension_height(Ideal(R3, [P("x"), P("y")])) == (1, 2)
    assert dimension_height(Ideal(R2, [P("x*y", R2)])) == (1, 1)
    assert dimension_height(
        Ideal(R2, [P("x^2*y", R2), P("2*x*y", R2), P("x^2", R2)])
    ) == (1, 1)
    with pytest.raises(ValueError):
        dimension_height(Ideal(R2, [P("1", R2)]))


def test_rees_kernel():
    K = rees_kernel([P("x", R2), P("y", R2)])
    assert [str(g) for g in K.groebner().basis] == ["y*xi1 - x*xi2"]
    K2 = rees_kernel([P("y", R2), P("x", R2)])
    assert [str(g) for g in K2.groebner().basis] == ["x*xi1 - y*xi2"]
    K3 = rees_kernel([P("x*y + y^2", R2)])
    assert K3.is_zero() or not K3.generators
    # kernel contains every linear syzygy form
    gens = [P("x^2", R2), P("x*y", R2), P("y^2", R2)]
    K4 = rees_kernel(gens)
    syz = syzygies(gens)
    gb = K4.groebner()
    from hodgecalc.ideals import inject

    for vec in syz.generators:
        form = K4.ring.zero()
        for i, a in enumerate(vec):
            form = form + inject(a, K4.ring) * K4.ring.var(f"xi{i+1}")
        assert gb.normal_form(form).is_zero()


def test_is_associated_prime():
    I = Ideal(R2, [P("x^2", R2)])
    Pr = Ideal(R2, [P("x", R2)])
    status, witness = is_associated_prime(I, Pr)
    assert status == "associated"
    assert str(witness) == "x"
    I2 = Ideal(R2, [P("x*y", R2)])
    P2 = Ideal(R2, [P("x", R2), P("y", R2)])
    assert is_associated_prime(I2, P2)[0] == "not-associated"
    with pytest.raises(ValueError):
        is_associated_prime(Ideal(R2, [P("x", R2)]), Ideal(R2, [P("y", R2)]))


def test_graded_piece_vanishes():
    J = Ideal(R3, [P("x"), P("y"), P("z")])
    assert graded_piece_vanishes(J, (1, 1, 1), 1)
    J2 = Ideal(R3, [P("y*z"), P("x*z"), P("x*y")])
    for t in range(6):
        assert graded_piece_vanishes(J2, (1, 1, 1), t)
    f = P("x^5 + y^4*z")
    jac = Ideal(R3, [f.derivative(v) for v in ("x", "y", "z")])
    assert graded_piece_vanishes(jac, (4, 3, 8), 25)
    with pytest.raises(ValueError):
        graded_piece_vanishes(Ideal(R2, [P("x + y^2", R2)]), (1, 1), 2)
