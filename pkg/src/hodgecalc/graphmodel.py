"""Verification model of the graph-embedding module O(*f)[dt]delta.

Elements are finite sums sum_j u_j dt^j delta with u_j rational functions
whose denominators are pure powers of f.  The action rules:

    g(x,t) . (m delta)      = g(x,f) m delta
    d_i . (m dt^k delta)    = (d_i m) dt^k delta - (d_i f) m dt^(k+1) delta
    t . (m dt^k delta)      = f m dt^k delta - k m dt^(k-1) delta
    dt . (m dt^k delta)     = m dt^(k+1) delta

The module is used as an independent harness: pi_f, psi_{f,0} and the
specialization of P f^(s-1) are computed along different routes and
compared exactly.
"""

from __future__ import annotations

from math import factorial

from .fs_action import FPowerFraction, FsExpression, act_on_fs
from .polyring import Polynomial
from .weyl import WeylOperator


class DeltaExpansion:
    """sum_j u_j dt^j delta with finitely many nonzero u_j."""

    __slots__ = ("f", "coeffs")

    def __init__(self, f: Polynomial, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.f = f
        self.coeffs = coeffs

    @classmethod
    def delta(cls, f: Polynomial) -> "DeltaExpansion":
        return cls(f, [FPowerFraction(f, f.ring.one(), 0)])

    @classmethod
    def f_inverse_delta(cls, f: Polynomial) -> "DeltaExpansion":
        return cls(f, [FPowerFraction(f, f.ring.one(), 1)])

    def coefficient(self, j: int) -> FPowerFraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return FPowerFraction(self.f, self.f.ring.zero(), 0)

    def t_order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, DeltaExpansion):
            return NotImplemented
        if self.f != other.f or len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __add__(self, other):
        top = max(len(self.coeffs), len(other.coeffs))
        return DeltaExpansion(
            self.f,
            [self.coefficient(j) + other.coefficient(j) for j in range(top)],
        )

    def __neg__(self):
        return DeltaExpansion(self.f, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            tail = "" if j == 0 else (f"*dt^{j}" if j > 1 else "*dt")
            bits.append(f"[{c}]{tail}")
        return " + ".join(bits) + " delta"

    __repr__ = __str__

    # -- the four action rules -------------------------------------------

    def act_x_poly(self, g: Polynomial) -> "DeltaExpansion":
        return DeltaExpansion(self.f, [c.mul_poly(g) for c in self.coeffs])

    def act_t(self) -> "DeltaExpansion":
        out = [c.mul_poly(self.f) for c in self.coeffs]
        for j in range(1, len(self.coeffs)):
            out[j - 1] = out[j - 1] + self.coeffs[j].mul_scalar(-j)
        return DeltaExpansion(self.f, out)

    def act_dt(self) -> "DeltaExpansion":
        zero = FPowerFraction(self.f, self.f.ring.zero(), 0)
        return DeltaExpansion(self.f, [zero] + self.coeffs)

    def act_partial(self, var: str) -> "DeltaExpansion":
        fprime = self.f.derivative(var)
        out = [c.derivative(var) for c in self.coeffs]
        out.append(FPowerFraction(self.f, self.f.ring.zero(), 0))
        for j, c in enumerate(self.coeffs):
            out[j + 1] = out[j + 1] + c.mul_poly(-fprime)
        return DeltaExpansion(self.f, out)

    def act_xt_poly(self, g: Polynomial, tname: str = "t") -> "DeltaExpansion":
        """g(x, t) action: expand the t-powers through the t rule."""
        ring = g.ring
        ti = ring.index[tname]
        acc = DeltaExpansion(self.f, [])
        for m, c in g.terms.items():
            cur = self
            for _ in range(m[ti]):
                cur = cur.act_t()
            xmono = m[:ti] + m[ti + 1:]
            xpoly = Polynomial(self.f.ring, {xmono: c})
            acc = acc + cur.act_x_poly(xpoly)
        return acc


def delta_act(op, u: DeltaExpansion, var: str | None = None) -> DeltaExpansion:
    """Apply one of the four elementary operators.

    op: 't', 'dt', 'dx' (with var naming the coordinate), or a Polynomial
    over the coordinate ring (multiplication).
    """
    if isinstance(op, Polynomial):
        return u.act_x_poly(op)
    if op == "t":
        return u.act_t()
    if op == "dt":
        return u.act_dt()
    if op == "dx":
        if var is None:
            raise ValueError("coordinate name required for a partial")
        return u.act_partial(var)
    raise ValueError(f"unknown operator {op!r}")


def apply_ds_operator(P: WeylOperator, u: DeltaExpansion) -> DeltaExpansion:
    """P(-dt t) . u for P in D_n[s]: each s is replaced by -dt t."""
    ring = P.ring
    n = ring.n
    total = DeltaExpansion(u.f, [])
    for mono, coeff in P.terms.items():
        cur = u
        j = mono[ring.s_pos] if ring.has_s else 0
        for _ in range(j):
            cur = -(cur.act_t().act_dt())
        for i in range(n):
            for _ in range(mono[n + i]):
                cur = cur.act_partial(ring.coord_names[i])
        xpoly = Polynomial(u.f.ring, {mono[:n]: coeff})
        total = total + cur.act_x_poly(xpoly)
    return total


def mp_map(v: DeltaExpansion) -> FPowerFraction:
    """sum_j j! f^(-j-1) v_j, the inverse-side evaluation map."""
    acc = FPowerFraction(v.f, v.f.ring.zero(), 0)
    for j, c in enumerate(v.coeffs):
        acc = acc + c.div_f(j + 1).mul_scalar(factorial(j))
    return acc


def helpcompute_check(u: DeltaExpansion) -> bool:
    """Both coefficient identities for v = t . u, checked exactly."""
    v = u.act_t()
    top = max(len(u.coeffs), len(v.coeffs)) + 1
    for j in range(top):
        lhs = v.coefficient(j)
        rhs = u.coefficient(j).mul_poly(u.f) + u.coefficient(j + 1).mul_scalar(-(j + 1))
        if lhs != rhs:
            return False
    return mp_map(v) == u.coefficient(0)


def graph_maps(P: WeylOperator, f: Polynomial):
    """(pi_f(P), psi_{f,0}(pi_f(P)), specialize(P f^(s-1))) plus the
    commutativity verdict against phi_0(P) f^(-1)."""
    from .hodge import apply_operator_to_inverse

    pi = apply_ds_operator(P, DeltaExpansion.f_inverse_delta(f))
    psi = pi.coefficient(0)
    spec = act_on_fs(P, FsExpression.power(f, -1)).specialize()
    direct = apply_operator_to_inverse(P.phi0(), f)
    commutes = psi == spec == direct
    return {
        "pi": pi,
        "psi": psi,
        "specialized": spec,
        "phi0_route": direct,
        "commutes": commutes,
    }
