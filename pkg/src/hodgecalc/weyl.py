"""Weyl algebras D_n and D_n[s] with normally ordered arithmetic.

A WeylRing has paired coordinates/duals ([d_i, x_i] = 1), an optional
central s, and optional central commutative tag variables (used by the
annihilator elimination).  Monomials are single exponent tuples over the
layout (coords..., duals..., s?, centrals...); an operator is a dict of
normally ordered monomials, so equality is equality of term maps.

Left Groebner bases run through the shared engine: the Weyl algebra is
of solvable type for every monomial well-order, commutators only drop
filtration weight, and S-pair lcms are the commutative ones.
"""

from __future__ import annotations

from math import comb, factorial

from .gb import ResourceBudget, buchberger, normal_form as _raw_nf
from .polyring import (
    Polynomial,
    PolyRing,
    TermOrder,
    degrevlex,
    elimination_order,
    weight_order,
    format_rational,
)
from .rational import rat


class WeylRing:
    def __init__(self, coord_names, has_s: bool = False, central_names=()):
        self.coord_names = tuple(coord_names)
        self.dual_names = tuple("d" + nm for nm in self.coord_names)
        self.has_s = has_s
        self.central_names = tuple(central_names)
        names = self.coord_names + self.dual_names
        if has_s:
            names = names + ("s",)
        names = names + self.central_names
        if len(set(names)) != len(names):
            raise ValueError("variable name collision in Weyl ring layout")
        self.names = names
        self.nvars = len(names)
        self.n = len(self.coord_names)
        self.index = {nm: i for i, nm in enumerate(names)}
        self.s_pos = 2 * self.n if has_s else None
        self._zero = (0,) * self.nvars
        self.order = degrevlex()

    def __repr__(self):
        s = "[s]" if self.has_s else ""
        extra = f"+{','.join(self.central_names)}" if self.central_names else ""
        return f"WeylRing({','.join(self.coord_names)}){s}{extra}"

    def __eq__(self, other):
        return isinstance(other, WeylRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    # -- constructors --------------------------------------------------

    def zero(self):
        return WeylOperator(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = rat(c)
        return WeylOperator(self, {self._zero: c} if c else {})

    def var(self, name: str):
        i = self.index[name]
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return WeylOperator(self, {mono: rat(1)})

    def coordinate_ring(self) -> PolyRing:
        return PolyRing(self.coord_names)

    def coordinate_s_ring(self) -> PolyRing:
        return PolyRing(self.coord_names + ("s",))

    def from_polynomial(self, p: Polynomial):
        """Embed a polynomial in the coordinates (optionally with s)."""
        pos = [self.index[nm] for nm in p.ring.names]
        out = {}
        for m, c in p.terms.items():
            row = [0] * self.nvars
            for i, e in enumerate(m):
                row[pos[i]] = e
            out[tuple(row)] = c
        return WeylOperator(self, out)

    # -- filtration weights ---------------------------------------------

    def sharp_weights(self):
        """0 on coordinates and centrals, 1 on duals and s."""
        w = [0] * self.nvars
        for i in range(self.n, 2 * self.n):
            w[i] = 1
        if self.has_s:
            w[self.s_pos] = 1
        return tuple(w)

    def ord_weights(self):
        """0 everywhere except 1 on duals (operator order)."""
        w = [0] * self.nvars
        for i in range(self.n, 2 * self.n):
            w[i] = 1
        return tuple(w)

    def sharp_order_term(self) -> TermOrder:
        return weight_order(self.sharp_weights())

    def ord_order_term(self) -> TermOrder:
        return weight_order(self.ord_weights())

    def elimination_term(self, drop_names) -> TermOrder:
        drop = set(drop_names)
        front = tuple(i for i, nm in enumerate(self.names) if nm in drop)
        back = tuple(i for i, nm in enumerate(self.names) if nm not in drop)
        return elimination_order(front, back)


class WeylOps:
    """Engine ops for left ideals in a Weyl ring."""

    commutative = False

    def __init__(self, ring: WeylRing, order: TermOrder, degree_cap: int | None = None):
        self.ring = ring
        self.order = order
        self.degree_cap = degree_cap
        self._cache: dict = {}

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            k = self.order.key(m)
            self._cache[m] = k
        return k

    @staticmethod
    def divides(a, b):
        for x, y in zip(a, b):
            if x > y:
                return False
        return True

    @staticmethod
    def quotient(a, b):
        return tuple(y - x for x, y in zip(a, b))

    @staticmethod
    def lcm(a, b):
        return tuple(x if x > y else y for x, y in zip(a, b))

    @staticmethod
    def disjoint(a, b):  # pragma: no cover - product criterion disabled
        return False

    @staticmethod
    def degree(cofactor):
        return sum(cofactor)

    @staticmethod
    def sugar_degree(lead_key):
        return sum(lead_key)

    def mul_term_poly(self, coeff, mono, poly):
        n = self.ring.n
        cap = self.degree_cap
        out: dict = {}
        mdeg = sum(mono)
        for m2, c2 in poly.items():
            if cap is not None and mdeg + sum(m2) > cap:
                raise ResourceBudget(
                    f"operator degree cap {cap} exceeded during multiplication"
                )
            _mono_mul_into(out, coeff * c2, mono, m2, n)
        return out


def _mono_mul_into(out: dict, coeff, m1, m2, n) -> None:
    """out += coeff * (normally ordered product of monomials m1*m2)."""
    pairs = []  # (position, [(j, integer factor)])
    for i in range(n):
        b1 = m1[n + i]
        a2 = m2[i]
        if b1 and a2:
            top = min(b1, a2)
            pairs.append(
                (i, [(j, comb(b1, j) * comb(a2, j) * factorial(j)) for j in range(top + 1)])
            )
    base = tuple(x + y for x, y in zip(m1, m2))
    if not pairs:
        s = out.get(base)
        s = coeff if s is None else s + coeff
        if s:
            out[base] = s
        else:
            del out[base]
        return
    stack = [(0, base, 1)]
    while stack:
        idx, mono, factor = stack.pop()
        if idx == len(pairs):
            c = coeff * factor
            s = out.get(mono)
            s = c if s is None else s + c
            if s:
                out[mono] = s
            else:
                del out[mono]
            continue
        pos, choices = pairs[idx]
        for j, f in choices:
            if j == 0:
                stack.append((idx + 1, mono, factor))
            else:
                m = list(mono)
                m[pos] -= j
                m[n + pos] -= j
                stack.append((idx + 1, tuple(m), factor * f))


class WeylOperator:
    """Normally ordered element of a Weyl ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: WeylRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, WeylOperator):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, WeylOperator):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return WeylOperator(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOperator(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, WeylOperator):
            c = rat(other)
            if not c:
                return self.ring.zero()
            return WeylOperator(self.ring, {m: q * c for m, q in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        n = self.ring.n
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _mono_mul_into(out, c1 * c2, m1, m2, n)
        return WeylOperator(self.ring, out)

    def __rmul__(self, other):
        # scalars commute; anything else must use the ordered product
        if isinstance(other, WeylOperator):  # pragma: no cover
            return other.__mul__(self)
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # -- structure ------------------------------------------------------

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def sharp_order(self) -> int:
        if not self.terms:
            raise ValueError("zero operator has no order")
        w = self.ring.sharp_weights()
        return max(sum(wi * e for wi, e in zip(w, m)) for m in self.terms)

    def ord_order(self) -> int:
        if not self.terms:
            raise ValueError("zero operator has no order")
        n = self.ring.n
        return max(sum(m[n : 2 * n]) for m in self.terms)

    def substitute_s(self, shift: int):
        """s -> s + shift (the D-linear twist)."""
        ring = self.ring
        if not ring.has_s:
            raise ValueError("ring has no s")
        if shift == 0:
            return self
        sp = ring.s_pos
        out: dict = {}
        for m, c in self.terms.items():
            k = m[sp]
            for j in range(k + 1):
                factor = comb(k, j) * shift ** (k - j)
                if not factor:
                    continue
                m2 = m[:sp] + (j,) + m[sp + 1 :]
                s = out.get(m2)
                s = c * factor if s is None else s + c * factor
                if s:
                    out[m2] = s
                else:
                    del out[m2]
        return WeylOperator(ring, out)

    def phi0(self):
        """s -> 0; the D-linear specialization on operators."""
        ring = self.ring
        if not ring.has_s:
            return self
        sp = ring.s_pos
        return WeylOperator(
            ring, {m: c for m, c in self.terms.items() if m[sp] == 0}
        )

    def coordinate_part(self) -> Polynomial | None:
        """As a polynomial in the coordinates, or None if any ∂/s occurs."""
        ring = self.ring
        n = ring.n
        out = {}
        for m, c in self.terms.items():
            if any(m[n:]):
                return None
            out[m[:n]] = c
        return Polynomial(ring.coordinate_ring(), out)

    def coordinate_s_part(self) -> Polynomial | None:
        """As a polynomial in coordinates and s, or None if ∂ occurs."""
        ring = self.ring
        n = ring.n
        sp = ring.s_pos
        out = {}
        for m, c in self.terms.items():
            if any(m[n : 2 * n]) or any(m[2 * n :][1 if ring.has_s else 0 :]):
                return None
            out[m[:n] + ((m[sp],) if ring.has_s else (0,))] = c
        return Polynomial(ring.coordinate_s_ring(), out)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        key = ring.order.key
        chunks = []
        for m in sorted(self.terms, key=key, reverse=True):
            c = self.terms[m]
            body = "*".join(
                nm if e == 1 else f"{nm}^{e}"
                for nm, e in zip(ring.names, m)
                if e
            )
            neg = c < 0
            mag = -c if neg else c
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)}*{body}"
            if not chunks:
                chunks.append(f"-{text}" if neg else text)
            else:
                chunks.append(f"- {text}" if neg else f"+ {text}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<weyl {self}>"


class _WeylAlgebra:
    """Parser adapter for the operator grammar."""

    def __init__(self, ring: WeylRing):
        self.ring = ring

    def const(self, c):
        return self.ring.const(c)

    def var(self, name):
        if name not in self.ring.index:
            raise KeyError(name)
        return self.ring.var(name)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def pow(a, n):
        return a**n


def parse_operator(text: str, ring: WeylRing) -> WeylOperator:
    from .parser import parse_with_algebra

    return parse_with_algebra(text, _WeylAlgebra(ring))


class WeylIdeal:
    """Left ideal with per-order cached Groebner bases."""

    def __init__(self, ring: WeylRing, generators):
        gens = [g for g in generators if not g.is_zero()]
        for g in gens:
            if g.ring != ring:
                raise ValueError("ring mismatch among generators")
        self.ring = ring
        self.generators = gens
        self._gb_cache: dict[TermOrder, list[WeylOperator]] = {}

    def __repr__(self):
        return f"WeylIdeal({len(self.generators)} gens over {self.ring})"

    def groebner(self, order: TermOrder | None = None, budget=None,
                 degree_cap=None) -> list[WeylOperator]:
        order = order or self.ring.sharp_order_term()
        cached = self._gb_cache.get(order)
        if cached is None:
            ops = WeylOps(self.ring, order, degree_cap=degree_cap)
            raw = buchberger([g.terms for g in self.generators], ops, budget=budget)
            cached = [WeylOperator(self.ring, t) for t in raw]
            self._gb_cache[order] = cached
        return cached

    def normal_form(self, p: WeylOperator, order: TermOrder | None = None,
                    budget=None) -> WeylOperator:
        order = order or self.ring.sharp_order_term()
        gb = self.groebner(order, budget=budget)
        ops = WeylOps(self.ring, order)
        r = _raw_nf(p.terms, [g.terms for g in gb], ops)
        return WeylOperator(self.ring, r)

    def contains(self, p: WeylOperator, order=None, budget=None) -> bool:
        return self.normal_form(p, order=order, budget=budget).is_zero()

    def shift_s(self, ell: int) -> "WeylIdeal":
        return WeylIdeal(self.ring, [g.substitute_s(ell) for g in self.generators])

    def __add__(self, other):
        if isinstance(other, WeylIdeal):
            return WeylIdeal(self.ring, self.generators + other.generators)
        return NotImplemented


def weyl_normal_form(p: WeylOperator, basis, order: TermOrder) -> WeylOperator:
    ops = WeylOps(p.ring, order)
    r = _raw_nf(p.terms, [g.terms for g in basis], ops)
    return WeylOperator(p.ring, r)


def divide_with_trace(p: WeylOperator, basis, order: TermOrder):
    """Left division returning (remainder, [(cofactor mono, basis idx)]).

    Used by the filtration-respecting division property checks.
    """
    ops = WeylOps(p.ring, order)
    lead = []
    for g in basis:
        lm = max(g.terms, key=ops.key)
        lead.append((lm, g.terms[lm], g.terms))
    work = dict(p.terms)
    result: dict = {}
    trace = []
    while work:
        m = max(work, key=ops.key)
        c = work.pop(m)
        hit = None
        for idx, (lm, lc, g) in enumerate(lead):
            if ops.divides(lm, m):
                hit = (idx, lm, lc, g)
                break
        if hit is None:
            result[m] = c
            continue
        idx, lm, lc, g = hit
        u = ops.quotient(lm, m)
        trace.append((u, idx))
        work[m] = c
        from .gb import sub_mul

        sub_mul(work, c / lc, u, g, ops)
    return WeylOperator(p.ring, result), trace


def sharp_order_and_symbol(P: WeylOperator):
    """(F-sharp order, top-slice symbol in Q[x, xi_1.., s])."""
    if P.is_zero():
        raise ValueError("zero operator")
    ring = P.ring
    d = P.sharp_order()
    w = ring.sharp_weights()
    sym_ring = _symbol_ring(ring, with_s=ring.has_s)
    out = {}
    for m, c in P.terms.items():
        if sum(wi * e for wi, e in zip(w, m)) == d:
            out[_symbol_mono(ring, m, sym_ring)] = c
    return d, Polynomial(sym_ring, out)


def ord_symbol(P: WeylOperator):
    """(order in ∂ only, gr-ord symbol with ∂ -> xi)."""
    if P.is_zero():
        raise ValueError("zero operator")
    ring = P.ring
    d = P.ord_order()
    n = ring.n
    sym_ring = _symbol_ring(ring, with_s=ring.has_s)
    out = {}
    for m, c in P.terms.items():
        if sum(m[n : 2 * n]) == d:
            out[_symbol_mono(ring, m, sym_ring)] = c
    return d, Polynomial(sym_ring, out)


def _symbol_ring(ring: WeylRing, with_s: bool) -> PolyRing:
    names = ring.coord_names + tuple(f"xi{i+1}" for i in range(ring.n))
    if with_s:
        names = names + ("s",)
    return PolyRing(names)


def _symbol_mono(ring: WeylRing, m, sym_ring: PolyRing):
    n = ring.n
    row = list(m[: 2 * n])
    if ring.has_s:
        row.append(m[ring.s_pos])
    return tuple(row)


def symbol_ideal(gens_or_gb, kind: str = "sharp") -> "Ideal":
    """Commutative ideal of top symbols of a Groebner basis.

    For a basis Groebner with respect to the matching weight order, this
    is the full graded ideal of principal symbols.
    """
    from .ideals import Ideal

    symbols = []
    for g in gens_or_gb:
        if kind == "sharp":
            _, s = sharp_order_and_symbol(g)
        else:
            _, s = ord_symbol(g)
        symbols.append(s)
    ring = symbols[0].ring
    return Ideal(ring, symbols)


def weyl_eliminate(I: WeylIdeal, drop_names, budget=None):
    """Intersection of I with the subalgebra on the remaining variables.

    Dropping a coordinate requires dropping its dual and vice versa;
    central variables may be dropped freely.  When the remaining
    variables are commutative (subset of coordinates, s, tags), the
    result is a commutative Ideal; otherwise a WeylIdeal.
    """
    ring = I.ring
    drop = set(drop_names)
    unknown = drop - set(ring.names)
    if unknown:
        raise ValueError(f"unknown variables: {sorted(unknown)}")
    for i, nm in enumerate(ring.coord_names):
        dual = ring.dual_names[i]
        if nm in drop and dual not in drop:
            raise ValueError(
                f"dropping {nm} requires dropping {dual} (duality closure)"
            )
    order = ring.elimination_term(drop)
    gb = I.groebner(order, budget=budget)
    front = [i for i, nm in enumerate(ring.names) if nm in drop]
    kept = [
        g for g in gb if all(all(m[i] == 0 for i in front) for m in g.terms)
    ]
    remaining = [nm for nm in ring.names if nm not in drop]
    remaining_duals = [nm for nm in remaining if nm in ring.dual_names]
    if not remaining_duals:
        from .ideals import Ideal

        target = PolyRing(tuple(remaining))
        polys = []
        pos = [ring.index[nm] for nm in remaining]
        for g in kept:
            polys.append(
                Polynomial(
                    target,
                    {tuple(m[i] for i in pos): c for m, c in g.terms.items()},
                )
            )
        return Ideal(target, polys)
    return WeylIdeal(ring, kept)
