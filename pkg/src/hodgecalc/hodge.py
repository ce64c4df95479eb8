"""The main algorithm: from b-function data and the f^(s-1) annihilator
through Gamma_f to the Hodge ideals I_k(f) and the generation level.

Gamma_f is generated by f, beta_f(-s), and ann f^(s-1); its Groebner
basis under the total-order-compatible weight order respects the
filtration, so the degree-k slice is read off the basis elements of
order <= k.  The k-th Hodge ideal is generated by the numerators of
phi_0(d^alpha * g) * f^(-1) over the denominator f^(k+1)."""

from __future__ import annotations

from dataclasses import dataclass

from .dmod import BFunctionData, s_ring
from .fs_action import FPowerFraction
from .ideals import Ideal, ideal_equal
from .polyring import Polynomial, PolyRing
from .rational import rat
from .weyl import WeylIdeal, WeylOperator, WeylRing, weyl_eliminate, weyl_normal_form


class RootsOutsideInterval(ValueError):
    def __init__(self, root):
        super().__init__(f"b-function root {root} lies outside (-2, 0)")
        self.root = root


def split_beta(bdata: BFunctionData):
    """Split b(-s-1) by root location into (beta, beta_prime, r_f).

    beta collects s+lambda+1 over roots lambda of b in (-1,0), beta_prime
    over roots in (-2,-1]; the product is checked against the monic
    normalization of b(-s-1).  Updates bdata in place and returns the
    triple.
    """
    sr = bdata.b.ring
    s = sr.var("s")
    for root, _m in bdata.roots:
        if not (rat(-2) < root < rat(0)):
            raise RootsOutsideInterval(root)
    beta = sr.one()
    beta_prime = sr.one()
    for root, mult in bdata.roots:
        factor = (s + sr.const(root + 1)) ** mult
        if rat(-1) < root < rat(0):
            beta = beta * factor
        else:
            beta_prime = beta_prime * factor
    # exactness check: product equals b(-s-1) up to the forced sign
    comp = _compose_minus_s_minus_1(bdata.b)
    assert beta * beta_prime == comp.monic(sr.order)
    bdata.beta = beta
    bdata.beta_prime = beta_prime
    bdata.r_f = beta.total_degree()
    return beta, beta_prime, bdata.r_f


def _compose_minus_s_minus_1(b: Polynomial) -> Polynomial:
    sr = b.ring
    target = -sr.var("s") - sr.one()
    out = sr.zero()
    for m, c in b.terms.items():
        out = out + target ** m[0] * c
    return out


def beta_of_s(beta: Polynomial, W: WeylRing) -> WeylOperator:
    """beta(s) as an operator of D[s]."""
    s = W.var("s")
    out = W.zero()
    for m, c in beta.terms.items():
        out = out + (s ** m[0]) * c
    return out


def beta_of_minus_s(beta: Polynomial, W: WeylRing) -> WeylOperator:
    """beta(-s) as an operator of D[s]."""
    s = W.var("s")
    out = W.zero()
    for m, c in beta.terms.items():
        out = out + ((-s) ** m[0]) * c
    return out


@dataclass
class GammaIdeal:
    f: Polynomial
    beta: Polynomial
    ann_sminus1: WeylIdeal
    ideal: WeylIdeal
    sharp_gb: list
    orders: list

    @property
    def ring(self) -> WeylRing:
        return self.ideal.ring


def gamma_ideal(f: Polynomial, beta: Polynomial, ann_sminus1: WeylIdeal,
                budget=None, base_gb=None) -> GammaIdeal:
    """Assemble Gamma_f and its filtration-compatible basis.

    base_gb, when given, must be a sharp-order Groebner basis of
    ann f^(s-1) + (f); beta(-s) is then adjoined incrementally.
    """
    W = ann_sminus1.ring
    gens = [W.from_polynomial(f), beta_of_minus_s(beta, W)]
    gens += list(ann_sminus1.generators)
    ideal = WeylIdeal(W, gens)
    order = W.sharp_order_term()
    if base_gb is not None:
        from .gb import buchberger
        from .weyl import WeylOps

        ops = WeylOps(W, order)
        seed = [g.terms for g in base_gb] + [beta_of_minus_s(beta, W).terms]
        raw = buchberger(seed, ops, budget=budget,
                         known_groebner_prefix=len(base_gb))
        gb = [WeylOperator(W, t) for t in raw]
        ideal._gb_cache[order] = gb
    else:
        gb = ideal.groebner(order, budget=budget)
    orders = [g.sharp_order() for g in gb]
    return GammaIdeal(f, beta, ann_sminus1, ideal, gb, orders)


def apply_operator_to_inverse(P: WeylOperator, f: Polynomial) -> FPowerFraction:
    """P * f^(-1) as a rational function with pure f-power denominator."""
    ring = f.ring
    n = P.ring.n
    total = FPowerFraction(f, ring.zero(), 0)
    for mono, coeff in P.terms.items():
        if P.ring.has_s and mono[P.ring.s_pos]:
            continue  # phi_0 was applied upstream; s-terms contribute nothing
        cur = FPowerFraction(f, ring.one(), 1)
        for i in range(n):
            for _ in range(mono[n + i]):
                cur = cur.derivative(P.ring.coord_names[i])
        xmono = ring.monomial(mono[:n], coeff)
        total = total + cur.mul_poly(xmono)
    return total


def _partial_monomials(n: int, max_total: int):
    out = []

    def rec(i, remaining, prefix):
        if i == n - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(i + 1, remaining - e, prefix + [e])

    for d in range(max_total + 1):
        rec(0, d, [])
    return out


def hodge_ideal(gamma: GammaIdeal, k: int, budget=None) -> Ideal:
    """I_k(f): numerators over f^(k+1) of the order-k slice of Gamma_f.

    Only plain partial monomials are applied: s-monomials die under the
    s->0 specialization and coordinate factors are absorbed by ideal
    generation.
    """
    if k < 0:
        raise ValueError("level must be non-negative")
    f = gamma.f
    ring = f.ring
    W = gamma.ring
    n = W.n
    gens: list[Polynomial] = []
    fk1 = f ** (k + 1)
    for g, d in zip(gamma.sharp_gb, gamma.orders):
        if d > k:
            continue
        g0 = g.phi0()
        if g0.is_zero():
            continue
        for alpha in _partial_monomials(n, k - d):
            op = g0
            for i, e in enumerate(alpha):
                if e:
                    op = (W.var("d" + W.coord_names[i]) ** e) * op
            frac = apply_operator_to_inverse(op, f)
            pad = (k + 1) - frac.k
            if pad < 0:
                raise AssertionError("pole order exceeded k+1")
            N = frac.num * f**pad
            if not N.is_zero():
                gens.append(N)
    if not gens:
        return Ideal(ring, [])
    I = Ideal(ring, gens)
    gb = I.groebner(budget=budget)
    return Ideal(ring, list(gb.basis))


def hodge_ideal_k0_by_elimination(gamma: GammaIdeal, budget=None) -> Ideal:
    """Gamma_f ∩ Q[x], the order-zero route; must agree with hodge_ideal
    at level zero whenever both run.

    The elimination starts from the filtration basis (the same ideal);
    the comparison against the specialization route stays a genuinely
    different formula.
    """
    W = gamma.ring
    drop = set(W.dual_names) | {"s"}
    I = weyl_eliminate(WeylIdeal(W, gamma.sharp_gb), drop, budget=budget)
    ring = gamma.f.ring
    from .ideals import project

    gens = [project(g, ring) if g.ring != ring else g for g in I.generators]
    J = Ideal(ring, gens)
    gb = J.groebner(budget=budget)
    return Ideal(ring, list(gb.basis))


def one_step_image(f: Polynomial, I_k: Ideal, k: int) -> Ideal:
    """F_1 D applied to I_k / f^(k+1), read at denominator f^(k+2)."""
    ring = f.ring
    gens = [f * g for g in I_k.generators]
    for g in I_k.generators:
        for nm in ring.names:
            gens.append(f * g.derivative(nm) - g * f.derivative(nm) * (k + 1))
    return Ideal(ring, [g for g in gens if not g.is_zero()])


def generation_level(f: Polynomial, ideals: dict[int, Ideal], n: int,
                     budget=None) -> int:
    """Least q with the one-step property at every level in [q, n-3].

    Levels at and above n-2 need no check (published bound); missing
    ideals raise KeyError.
    """
    top = max(n - 2, 0)
    holds = {}
    for k in range(0, top):
        J = one_step_image(f, ideals[k], k)
        holds[k] = ideal_equal(J, ideals[k + 1])
    for q in range(0, top + 1):
        if all(holds[k] for k in range(q, top)):
            return q
    return top


def functional_equation_member(P: WeylOperator, f: Polynomial,
                               beta_prime: Polynomial,
                               ann_sminus1: WeylIdeal, budget=None) -> bool:
    """P(s) beta'(-s) f^(s-1) in D[s] f^s, as a normal-form membership in
    ann f^(s-1) + D[s] f."""
    W = ann_sminus1.ring
    Q = P * beta_of_minus_s(beta_prime, W)
    I = WeylIdeal(W, list(ann_sminus1.generators) + [W.from_polynomial(f)])
    return I.contains(Q, budget=budget)


def r_f_containment_check(f: Polynomial, I_rf: Ideal, r_f: int) -> bool:
    """f^(r_f) in I_(r_f) (equivalently f^(-1) enters the filtration at r_f)."""
    p = f**r_f
    return I_rf.groebner().normal_form(p).is_zero()


def weighted_degree_values(ring: PolyRing, weights, lo, hi):
    """Realizable weighted degrees t with lo <= t < hi (weights > 0)."""
    w = [rat(x) for x in weights]
    lo, hi = rat(lo), rat(hi)
    vals = set()

    def rec(i, acc):
        if acc >= hi:
            return
        if i == len(w):
            if lo <= acc:
                vals.add(acc)
            return
        e = 0
        while acc + w[i] * e < hi:
            rec(i + 1, acc + w[i] * e)
            e += 1

    rec(0, rat(0))
    return sorted(vals)


def pw_root_criterion(f: Polynomial, weights, budget=None) -> bool:
    """Local-cohomology window test for roots in (-2, 0).

    For f weighted-homogeneous with the given weights, checks that the
    degree-t piece of H^0_m(R/(df)) vanishes for every realizable t in
    [2 deg_w f - sum w, 3 deg_w f - sum w)."""
    from .ideals import graded_piece_vanishes
    from .polyring import weighted_degree

    d = weighted_degree(f, weights)
    if isinstance(d, tuple):
        raise ValueError("f is not weighted-homogeneous for the given weights")
    wsum = sum(rat(x) for x in weights)
    lo = 2 * d - wsum
    hi = 3 * d - wsum
    jac = Ideal(f.ring, [p for p in
                         (f.derivative(nm) for nm in f.ring.names)
                         if not p.is_zero()])
    for t in weighted_degree_values(f.ring, weights, lo, hi):
        if not graded_piece_vanishes(jac, weights, t, budget=budget):
            return False
    return True
