"""Symbolic elements u/f^m * f^(s+l) and the D[s]-module action on them.

The action is the formal chain/product rule:

    d_i (u/f^m * f^(s+l)) = [f*d_i(u) + (s + l - m)*u*d_i(f)] / f^(m+1) * f^(s+l)

with s acting as multiplication by the polynomial variable s.  The
denominator exponent is kept minimal (the numerator is never divisible
by f while m > 0), which makes membership in O * f^(-m) visible.
"""

from __future__ import annotations

from .polyring import Polynomial, PolyRing
from .rational import rat
from .weyl import WeylOperator, WeylRing


def _try_divide(p: Polynomial, f: Polynomial):
    from .ideals import _divide_exact

    try:
        return _divide_exact(p, f)
    except ArithmeticError:
        return None


class FPowerFraction:
    """A rational function num / f^k with pure f-power denominator."""

    __slots__ = ("f", "num", "k")

    def __init__(self, f: Polynomial, num: Polynomial, k: int):
        while k > 0 and not num.is_zero():
            q = _try_divide(num, f)
            if q is None:
                break
            num, k = q, k - 1
        if num.is_zero():
            k = 0
        if k < 0:
            num = num * f ** (-k)
            k = 0
        self.f = f
        self.num = num
        self.k = k

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FPowerFraction):
            return NotImplemented
        return self.f == other.f and self.k == other.k and self.num == other.num

    def __add__(self, other):
        k = max(self.k, other.k)
        num = self.num * self.f ** (k - self.k) + other.num * self.f ** (k - other.k)
        return FPowerFraction(self.f, num, k)

    def __sub__(self, other):
        return self + FPowerFraction(other.f, -other.num, other.k)

    def __neg__(self):
        return FPowerFraction(self.f, -self.num, self.k)

    def mul_poly(self, p: Polynomial):
        return FPowerFraction(self.f, self.num * p, self.k)

    def mul_scalar(self, c):
        return FPowerFraction(self.f, self.num * c, self.k)

    def div_f(self, times: int = 1):
        return FPowerFraction(self.f, self.num, self.k + times)

    def derivative(self, var: str):
        # d/dx (num/f^k) = (f*num' - k*num*f') / f^(k+1)
        fprime = self.f.derivative(var)
        num = self.f * self.num.derivative(var) - self.num * fprime * self.k
        return FPowerFraction(self.f, num, self.k + 1)

    def __str__(self):
        if self.k == 0:
            return str(self.num)
        return f"({self.num})/({self.f})^{self.k}"

    __repr__ = __str__


class FsExpression:
    """(num(x, s) / f^m) * f^(s + shift), num over Q[x_1..x_n, s]."""

    __slots__ = ("f", "num", "m", "shift", "_sring")

    def __init__(self, f: Polynomial, num: Polynomial, m: int, shift: int):
        if m < 0:
            raise ValueError("denominator exponent must be non-negative")
        sring = num.ring
        while m > 0 and not num.is_zero():
            q = _try_divide(num, _inject_xs(f, sring))
            if q is None:
                break
            num, m = q, m - 1
        if num.is_zero():
            m = 0
        self.f = f
        self.num = num
        self.m = m
        self.shift = shift
        self._sring = sring

    @classmethod
    def power(cls, f: Polynomial, shift: int = 0) -> "FsExpression":
        """The generator f^(s+shift)."""
        sring = PolyRing(f.ring.names + ("s",))
        return cls(f, sring.one(), 0, shift)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FsExpression):
            return NotImplemented
        if self.f != other.f:
            return NotImplemented
        # compare as (num * f^(m'-m)) at a common shift and denominator
        if self.shift != other.shift:
            a, b = self.align_shift(other)
            return a == b
        k = max(self.m, other.m)
        fa = _inject_xs(self.f, self._sring)
        return self.num * fa ** (k - self.m) == other.num * fa ** (k - other.m)

    def align_shift(self, other: "FsExpression"):
        """Rewrite both at the smaller shift (multiplying by f powers)."""
        ell = min(self.shift, other.shift)
        return self.with_shift(ell), other.with_shift(ell)

    def with_shift(self, ell: int) -> "FsExpression":
        if ell > self.shift:
            raise ValueError("can only lower the shift")
        d = self.shift - ell
        fa = _inject_xs(self.f, self._sring)
        return FsExpression(self.f, self.num * fa**d, self.m, ell)

    # -- module action ----------------------------------------------------

    def apply_partial(self, var: str) -> "FsExpression":
        fs = _inject_xs(self.f, self._sring)
        fprime = _inject_xs(self.f.derivative(var), self._sring)
        svar = self._sring.var("s")
        factor = svar + self._sring.const(self.shift - self.m)
        num = fs * self.num.derivative(var) + factor * self.num * fprime
        return FsExpression(self.f, num, self.m + 1, self.shift)

    def mul_coordinate_s_poly(self, p: Polynomial) -> "FsExpression":
        return FsExpression(self.f, self.num * p, self.m, self.shift)

    def specialize(self, j: int | None = None) -> FPowerFraction:
        """Substitute s + shift -> j; with j = shift this is s -> 0.

        Default j = shift reproduces the map used throughout: the value
        num(x, 0)/f^m * f^shift as a rational function.
        """
        if j is None:
            j = self.shift
        sring = self._sring
        s_idx = sring.index["s"]
        out = {}
        val = rat(j - self.shift)
        for mono, c in self.num.terms.items():
            e = mono[s_idx]
            coeff = c * (val**e if e else 1)
            if not coeff:
                continue
            key = mono[:s_idx] + (0,) + mono[s_idx + 1 :]
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s:
                out[key] = s
            else:
                del out[key]
        from .ideals import project

        num0 = project(Polynomial(sring, out), self.f.ring)
        return FPowerFraction(self.f, num0, self.m - j)

    def __str__(self):
        head = f"({self.num})"
        if self.m:
            head += f"/({self.f})^{self.m}"
        tail = f"f^(s{'+' if self.shift >= 0 else ''}{self.shift})" if self.shift else "f^s"
        return f"{head}*{tail}"

    __repr__ = __str__


def _inject_xs(p: Polynomial, sring: PolyRing) -> Polynomial:
    from .ideals import inject

    return inject(p, sring)


def act_on_fs(P: WeylOperator, e: FsExpression) -> FsExpression:
    """The left action of an operator in D_n[s] on u f^(s+l)."""
    ring = P.ring
    if tuple(ring.coord_names) != tuple(e.f.ring.names):
        raise ValueError("operator and expression base rings differ")
    n = ring.n
    sring = e._sring
    total: FsExpression | None = None
    for mono, coeff in P.terms.items():
        if any(mono[2 * n + (1 if ring.has_s else 0) :]):
            raise ValueError("operator involves tag variables")
        cur = e
        for i in range(n):
            for _ in range(mono[n + i]):
                cur = cur.apply_partial(ring.coord_names[i])
        ax = {
            mono[:n] + ((mono[ring.s_pos],) if ring.has_s else (0,)): coeff
        }
        cur = cur.mul_coordinate_s_poly(Polynomial(sring, ax))
        total = cur if total is None else _add(total, cur)
    if total is None:
        return FsExpression(e.f, sring.zero(), 0, e.shift)
    return total


def _add(a: FsExpression, b: FsExpression) -> FsExpression:
    if a.shift != b.shift:
        raise ValueError("shift mismatch in addition")
    k = max(a.m, b.m)
    fa = _inject_xs(a.f, a._sring)
    num = a.num * fa ** (k - a.m) + b.num * fa ** (k - b.m)
    return FsExpression(a.f, num, k, a.shift)


def annihilates(P: WeylOperator, f: Polynomial, shift: int = 0) -> bool:
    """Exact symbolic test P * f^(s+shift) == 0."""
    return act_on_fs(P, FsExpression.power(f, shift)).is_zero()
