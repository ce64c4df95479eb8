"""Sparse multivariate polynomials over Q with pluggable term orders.

Monomials are exponent tuples; a polynomial is a dict mapping exponent
tuples to nonzero rationals.  Everything is immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

from .rational import Rational, rat, format_rational

Mono = tuple  # exponent vector, one entry per ring variable


class TermOrder:
    """A multiplicative monomial well-order, exposed as a max-key function.

    kinds:
      lex                    parameters: none
      degrevlex              parameters: none
      weight-then-degrevlex  parameters: weights (tuple of rationals >= 0)
      block-elimination      parameters: blocks (tuple of index tuples);
                             earlier blocks dominate, degrevlex inside each
    """

    def __init__(self, kind: str, parameters=None):
        self.kind = kind
        self.parameters = parameters
        if kind == "lex":
            self.key = lambda m: m
        elif kind == "degrevlex":
            self.key = _degrevlex_key
        elif kind == "weight-then-degrevlex":
            w = tuple(parameters)
            self.key = lambda m, _w=w: (_dot(_w, m), _degrevlex_key(m))
        elif kind == "block-elimination":
            blocks = tuple(tuple(b) for b in parameters)
            def key(m, _blocks=blocks):
                return tuple(
                    _degrevlex_key(tuple(m[i] for i in blk)) for blk in _blocks
                )
            self.key = key
        else:
            raise ValueError(f"unknown term order kind: {kind}")

    def __repr__(self):
        if self.parameters is None:
            return self.kind
        return f"{self.kind}{tuple(self.parameters)}"

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.kind == other.kind
            and self.parameters == other.parameters
        )

    def __hash__(self):
        p = self.parameters
        return hash((self.kind, tuple(p) if p is not None else None))


def _degrevlex_key(m: Mono):
    return (sum(m), tuple(-e for e in reversed(m)))


def _dot(w, m):
    return sum(wi * ei for wi, ei in zip(w, m) if ei)


def lex() -> TermOrder:
    return TermOrder("lex")


def degrevlex() -> TermOrder:
    return TermOrder("degrevlex")


def weight_order(weights) -> TermOrder:
    return TermOrder("weight-then-degrevlex", tuple(weights))


def elimination_order(front: tuple[int, ...], back: tuple[int, ...]) -> TermOrder:
    return TermOrder("block-elimination", (tuple(front), tuple(back)))


class PolyRing:
    """Q[x_1..x_n] with named variables and optional positive weights."""

    def __init__(self, names, weights=None, order: TermOrder | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names = names
        self.nvars = len(names)
        self.index = {nm: i for i, nm in enumerate(names)}
        if weights is not None:
            weights = tuple(rat(w) for w in weights)
            if len(weights) != self.nvars or any(w <= 0 for w in weights):
                raise ValueError("weights must be positive, one per variable")
        self.weights = weights
        self.order = order if order is not None else degrevlex()
        self._zero_mono = (0,) * self.nvars

    def __repr__(self):
        return f"PolyRing({','.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = rat(c)
        if not c:
            return self.zero()
        return Polynomial(self, {self._zero_mono: c})

    def var(self, name: str) -> "Polynomial":
        i = self.index[name]
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: rat(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(nm) for nm in self.names]

    def monomial(self, mono: Mono, coeff=1) -> "Polynomial":
        c = rat(coeff)
        if not c:
            return self.zero()
        return Polynomial(self, {tuple(mono): c})

    def from_terms(self, terms: dict) -> "Polynomial":
        return Polynomial(self, {m: c for m, c in terms.items() if c})

    def extend(self, extra_names, order=None) -> "PolyRing":
        return PolyRing(self.names + tuple(extra_names), order=order)


class Polynomial:
    """Immutable sparse polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic structure ------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (
            len(self.terms) == 1 and self.ring._zero_mono in self.terms
        )

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_mono, rat(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = rat(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {m: q * c for m, q in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m)
                if s is None:
                    out[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        return self * c

    # -- calculus and grading ---------------------------------------------

    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index.get(var)
        if i is None:
            raise KeyError(f"unknown variable {var!r}")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1 :]
                c2 = c * e
                s = out.get(m2)
                out[m2] = c2 if s is None else s + c2
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    def weighted_degrees(self, weights):
        """Set of distinct weighted degrees over the support."""
        w = tuple(rat(x) for x in weights)
        return {_dot(w, m) for m in self.terms}

    def substitute(self, assignment: dict) -> "Polynomial":
        """Substitute polynomials (same ring) for variables."""
        ring = self.ring
        out = ring.zero()
        for m, c in self.terms.items():
            term = ring.const(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                nm = ring.names[i]
                base = assignment.get(nm)
                if base is None:
                    base = ring.var(nm)
                term = term * base**e
            out = out + term
        return out

    # -- leading data ------------------------------------------------------

    def leading_monomial(self, order: TermOrder | None = None) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def leading_coeff(self, order: TermOrder | None = None):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        return Polynomial(self.ring, {m: c / lc for m, c in self.terms.items()})

    # -- printing ------------------------------------------------------------

    def sorted_terms(self, order: TermOrder | None = None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda it: key(it[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<poly {self}>"


def format_monomial(ring: PolyRing, mono: Mono) -> str:
    parts = []
    for nm, e in zip(ring.names, mono):
        if e == 1:
            parts.append(nm)
        elif e:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: TermOrder | None = None) -> str:
    """Canonical rendering; re-parsing reproduces the term map."""
    if not p.terms:
        return "0"
    chunks = []
    for mono, coeff in p.sorted_terms(order):
        mstr = format_monomial(p.ring, mono)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if not mstr:
            body = format_rational(mag)
        elif mag == 1:
            body = mstr
        else:
            body = f"{format_rational(mag)}*{mstr}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    return p.derivative(var)


def weighted_degree(p: Polynomial, weights):
    """deg_w p when every term agrees, else ('inhomogeneous', m1, m2).

    The two witness monomials are returned as exponent tuples with
    distinct weighted degrees.
    """
    if not p.terms:
        raise ValueError("weighted degree of the zero polynomial")
    w = tuple(rat(x) for x in weights)
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    by_deg: dict = {}
    for m in p.terms:
        by_deg.setdefault(_dot(w, m), m)
    if len(by_deg) == 1:
        return next(iter(by_deg))
    degs = sorted(by_deg)
    return ("inhomogeneous", by_deg[degs[0]], by_deg[degs[-1]])
