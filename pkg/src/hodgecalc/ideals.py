"""Commutative ideal operations on top of the Buchberger engine.

Everything here is exact over Q.  Ideals cache their reduced Groebner
bases per term order; ideal equality means equality of reduced bases
under a common order.
"""

from __future__ import annotations

import itertools

from .gb import CommutativeOps, buchberger, normal_form as _nf, spair_reductions_vanish
from .polyring import (
    Polynomial,
    PolyRing,
    TermOrder,
    degrevlex,
    elimination_order,
)
from .rational import rat


class Ideal:
    """Finitely generated ideal of Q[x_1..x_n]."""

    def __init__(self, ring: PolyRing, generators):
        gens = [g for g in generators if not g.is_zero()]
        for g in gens:
            if g.ring != ring:
                raise ValueError("ring mismatch among generators")
        self.ring = ring
        self.generators = gens
        self._gb_cache: dict[TermOrder, GroebnerBasis] = {}

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"

    def groebner(self, order: TermOrder | None = None, budget=None) -> "GroebnerBasis":
        order = order or self.ring.order
        cached = self._gb_cache.get(order)
        if cached is None:
            cached = GroebnerBasis(self, order, budget=budget)
            self._gb_cache[order] = cached
        return cached

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, p: Polynomial, order=None) -> bool:
        return self.groebner(order).normal_form(p).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner()
        return all(gb.normal_form(g).is_zero() for g in other.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.generators + other.generators)

    def product(self, other: "Ideal") -> "Ideal":
        gens = [a * b for a in self.generators for b in other.generators]
        return Ideal(self.ring, gens)

    def power(self, k: int) -> "Ideal":
        if k <= 0:
            return Ideal(self.ring, [self.ring.one()])
        out = self
        for _ in range(k - 1):
            out = out.product(self)
        return out

    def is_trivial(self) -> bool:
        gb = self.groebner()
        return len(gb.basis) == 1 and gb.basis[0].is_constant()


class GroebnerBasis:
    """Reduced monic basis of an ideal under a fixed term order."""

    def __init__(self, ideal: Ideal, order: TermOrder, budget=None):
        self.ideal = ideal
        self.order = order
        self.ops = CommutativeOps(order)
        raw = buchberger([g.terms for g in ideal.generators], self.ops, budget=budget)
        self.basis = [Polynomial(ideal.ring, t) for t in raw]

    def __repr__(self):
        return f"GB[{self.order}]({', '.join(str(g) for g in self.basis)})"

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ideal.ring:
            raise ValueError("ring mismatch")
        r = _nf(p.terms, [g.terms for g in self.basis], self.ops)
        return Polynomial(p.ring, r)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def self_check(self) -> bool:
        """All S-polynomials reduce to zero and generators are members."""
        ok = spair_reductions_vanish([g.terms for g in self.basis], self.ops)
        return ok and all(
            self.normal_form(g).is_zero() for g in self.ideal.generators
        )

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ideal.ring == other.ideal.ring
            and self.order == other.order
            and [g.terms for g in self.basis] == [g.terms for g in other.basis]
        )


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder | None = None) -> bool:
    order = order or I.ring.order
    a = I.groebner(order)
    b = J.groebner(order)
    return [g.terms for g in a.basis] == [g.terms for g in b.basis]


# ---------------------------------------------------------------------------
# ring plumbing: temporary tag variables and projections
# ---------------------------------------------------------------------------


def _fresh_names(ring: PolyRing, count: int, stem: str) -> list[str]:
    names = []
    k = 0
    while len(names) < count:
        cand = f"{stem}{k}" if (count > 1 or k > 0) else stem
        if cand not in ring.index and cand not in names:
            names.append(cand)
        k += 1
    return names


def _extend_ring(ring: PolyRing, extra: list[str]) -> PolyRing:
    return PolyRing(ring.names + tuple(extra))


def inject(p: Polynomial, big: PolyRing) -> Polynomial:
    """View p in a ring whose variables are a superset of p's (by name)."""
    pos = [big.index[nm] for nm in p.ring.names]
    zero = [0] * big.nvars
    out = {}
    for m, c in p.terms.items():
        row = zero[:]
        for i, e in enumerate(m):
            row[pos[i]] = e
        out[tuple(row)] = c
    return Polynomial(big, out)


def project(p: Polynomial, small: PolyRing) -> Polynomial:
    """View p in a subring; fails if p involves a dropped variable."""
    pos = {nm: i for i, nm in enumerate(p.ring.names)}
    keep = [pos[nm] for nm in small.names]
    dropped = [i for i in range(p.ring.nvars) if i not in set(keep)]
    out = {}
    for m, c in p.terms.items():
        if any(m[i] for i in dropped):
            raise ValueError("polynomial involves a dropped variable")
        out[tuple(m[i] for i in keep)] = c
    return Polynomial(small, out)


# ---------------------------------------------------------------------------
# elimination, intersection, quotient, saturation
# ---------------------------------------------------------------------------


def eliminate(I: Ideal, drop, budget=None) -> Ideal:
    """Generators of I intersected with Q[remaining variables]."""
    drop = set(drop)
    unknown = drop - set(I.ring.names)
    if unknown:
        raise ValueError(f"unknown variables: {sorted(unknown)}")
    front = tuple(i for i, nm in enumerate(I.ring.names) if nm in drop)
    back = tuple(i for i, nm in enumerate(I.ring.names) if nm not in drop)
    order = elimination_order(front, back)
    gb = I.groebner(order, budget=budget)
    kept = [
        g
        for g in gb.basis
        if all(all(m[i] == 0 for i in front) for m in g.terms)
    ]
    return Ideal(I.ring, kept)


def intersect(I: Ideal, J: Ideal, budget=None) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    (w,) = _fresh_names(I.ring, 1, "w_")
    big = _extend_ring(I.ring, [w])
    wv = big.var(w)
    gens = [wv * inject(g, big) for g in I.generators]
    gens += [(big.one() - wv) * inject(g, big) for g in J.generators]
    elim = eliminate(Ideal(big, gens), {w}, budget=budget)
    return Ideal(I.ring, [project(g, I.ring) for g in elim.generators])


def _divide_exact(p: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient p/g when division is exact."""
    ops = CommutativeOps(p.ring.order)
    work = dict(p.terms)
    quot = {}
    glm = g.leading_monomial()
    glc = g.terms[glm]
    gterms = g.terms
    while work:
        m = max(work, key=ops.key)
        if not ops.divides(glm, m):
            raise ArithmeticError("division is not exact")
        u = ops.quotient(glm, m)
        c = work[m] / glc
        quot[u] = c
        for mm, cc in gterms.items():
            key = tuple(a + b for a, b in zip(u, mm))
            s = work.get(key)
            s = -c * cc if s is None else s - c * cc
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    return Polynomial(p.ring, quot)


def quotient_by_poly(I: Ideal, g: Polynomial, budget=None) -> Ideal:
    """(I : g) via I ∩ (g) followed by exact division."""
    if g.is_zero():
        return Ideal(I.ring, [I.ring.one()])
    meet = intersect(I, Ideal(I.ring, [g]), budget=budget)
    return Ideal(I.ring, [_divide_exact(h, g) for h in meet.generators])


def saturate_by_poly(I: Ideal, g: Polynomial, budget=None) -> Ideal:
    """(I : g^inf) by the inverted-tag trick."""
    if g.is_zero():
        return Ideal(I.ring, [I.ring.one()])
    (w,) = _fresh_names(I.ring, 1, "w_")
    big = _extend_ring(I.ring, [w])
    wv = big.var(w)
    gens = [inject(h, big) for h in I.generators]
    gens.append(big.one() - wv * inject(g, big))
    elim = eliminate(Ideal(big, gens), {w}, budget=budget)
    return Ideal(I.ring, [project(h, I.ring) for h in elim.generators])


def quotient_and_saturation(I: Ideal, J: Ideal, budget=None) -> tuple[Ideal, Ideal]:
    """((I : J), (I : J^inf)); both computed generator by generator."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    if not J.generators:
        one = Ideal(I.ring, [I.ring.one()])
        return one, one
    quot = None
    sat = None
    for g in J.generators:
        q = quotient_by_poly(I, g, budget=budget)
        s = saturate_by_poly(I, g, budget=budget)
        quot = q if quot is None else intersect(quot, q, budget=budget)
        sat = s if sat is None else intersect(sat, s, budget=budget)
    return quot, sat


# ---------------------------------------------------------------------------
# module layer: syzygies and lifting
# ---------------------------------------------------------------------------


class ModuleOps:
    """Free-module term algebra, position-over-term, component 0 dominant."""

    commutative = False  # no product criterion for module pairs

    def __init__(self, order):
        self.order = order
        self._cache: dict = {}

    def key(self, km):
        k = self._cache.get(km)
        if k is None:
            comp, m = km
            k = (-comp, self.order.key(m))
            self._cache[km] = k
        return k

    @staticmethod
    def divides(a, b):
        if a[0] != b[0]:
            return False
        return all(x <= y for x, y in zip(a[1], b[1]))

    @staticmethod
    def quotient(a, b):
        return tuple(y - x for x, y in zip(a[1], b[1]))

    @staticmethod
    def lcm(a, b):
        if a[0] != b[0]:
            return None
        return (a[0], tuple(max(x, y) for x, y in zip(a[1], b[1])))

    @staticmethod
    def disjoint(a, b):  # pragma: no cover - never called (commutative=False)
        return False

    @staticmethod
    def degree(cofactor):
        return sum(cofactor)

    @staticmethod
    def sugar_degree(lead_key):
        return sum(lead_key[1])

    @staticmethod
    def mul_term_poly(coeff, mono, poly):
        out = {}
        for (comp, m), c in poly.items():
            out[(comp, tuple(a + b for a, b in zip(mono, m)))] = coeff * c
        return out


class SyzygyModule:
    """Generators of the first syzygy module of a list of polynomials."""

    def __init__(self, ring: PolyRing, source, generators):
        self.ring = ring
        self.source = list(source)
        self.generators = generators  # list of tuples of Polynomial

    def __len__(self):
        return len(self.generators)

    def verify(self) -> bool:
        for vec in self.generators:
            acc = self.ring.zero()
            for v, g in zip(vec, self.source):
                acc = acc + v * g
            if not acc.is_zero():
                return False
        return True


def _module_gb(gens_as_vectors, ring, ncomp, budget=None):
    ops = ModuleOps(ring.order)
    return buchberger(gens_as_vectors, ops, budget=budget), ops


def syzygies(gens, budget=None) -> SyzygyModule:
    """First syzygies of gens, via a module Groebner basis.

    Zero generators are legal: each contributes its unit vector and is
    excluded from the module computation.
    """
    gens = list(gens)
    if not gens:
        return SyzygyModule(None, [], [])
    ring = gens[0].ring
    zero_mono = ring._zero_mono
    live = [(i, g) for i, g in enumerate(gens) if not g.is_zero()]
    out = []
    for i, g in enumerate(gens):
        if g.is_zero():
            vec = [ring.zero()] * len(gens)
            vec[i] = ring.one()
            out.append(tuple(vec))
    vectors = []
    for slot, (_i, g) in enumerate(live):
        vec = {(0, m): c for m, c in g.terms.items()}
        vec[(slot + 1, zero_mono)] = rat(1)
        vectors.append(vec)
    if vectors:
        gb, _ops = _module_gb(vectors, ring, len(live) + 1, budget=budget)
        for elem in gb:
            if any(comp == 0 for (comp, _m) in elem):
                continue
            vec = [ring.zero()] * len(gens)
            for slot, (i, _g) in enumerate(live):
                terms = {m: c for (comp, m), c in elem.items() if comp == slot + 1}
                vec[i] = Polynomial(ring, terms)
            out.append(tuple(vec))
    return SyzygyModule(ring, gens, out)


def lift(p: Polynomial, gens, budget=None):
    """Cofactors h with p = sum h_i * gens_i, or None if p is not a member."""
    gens = list(gens)
    ring = p.ring
    zero_mono = ring._zero_mono
    vectors = []
    for i, g in enumerate(gens):
        vec = {(0, m): c for m, c in g.terms.items()}
        vec[(i + 1, zero_mono)] = rat(1)
        vectors.append(vec)
    gb, ops = _module_gb(vectors, ring, len(gens) + 1, budget=budget)
    target = {(0, m): c for m, c in p.terms.items()}
    from .gb import normal_form as raw_nf

    r = raw_nf(target, gb, ops)
    if any(comp == 0 for (comp, _m) in r):
        return None
    out = []
    for i in range(1, len(gens) + 1):
        terms = {m: -c for (comp, m), c in r.items() if comp == i}
        out.append(Polynomial(ring, terms))
    return out


# ---------------------------------------------------------------------------
# dimension, Rees kernel, associated primes, graded pieces
# ---------------------------------------------------------------------------


def dimension_height(I: Ideal, budget=None) -> tuple[int, int]:
    """(Krull dimension of R/I, height = nvars - dim)."""
    gb = I.groebner(budget=budget)
    if any(g.is_constant() and not g.is_zero() for g in gb.basis):
        raise ValueError("ideal is the unit ideal")
    n = I.ring.nvars
    lead = [set(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials()]
    best = 0
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            sset = set(subset)
            if all(not supp <= sset for supp in lead):
                best = size
                break
        if best:
            break
    return best, n - best


def rees_kernel(gens, xi_stem: str = "xi", budget=None) -> Ideal:
    """Kernel of Q[x, xi_1..xi_m] -> Q[x, t], xi_i -> t*g_i.

    Returned in the ring Q[x, xi_1..xi_m]; prime by construction.
    """
    gens = list(gens)
    ring = gens[0].ring
    m = len(gens)
    xi_names = [f"{xi_stem}{i+1}" for i in range(m)]
    if any(nm in ring.index for nm in xi_names):
        raise ValueError("xi names collide with ring variables")
    (tname,) = _fresh_names(ring, 1, "t_")
    big = PolyRing(ring.names + tuple(xi_names) + (tname,))
    tv = big.var(tname)
    rel = [big.var(nm) - tv * inject(g, big) for nm, g in zip(xi_names, gens)]
    elim = eliminate(Ideal(big, rel), {tname}, budget=budget)
    target = PolyRing(ring.names + tuple(xi_names))
    return Ideal(target, [project(g, target) for g in elim.generators])


def monomials_of_degree(ring: PolyRing, degree: int):
    """All exponent tuples of total degree == degree."""
    n = ring.nvars

    def rec(i, remaining):
        if i == n - 1:
            yield (remaining,)
            return
        for e in range(remaining + 1):
            for rest in rec(i + 1, remaining - e):
                yield (e,) + rest

    if n == 0:
        return
    yield from rec(0, degree)


def is_associated_prime(I: Ideal, P: Ideal, degree_bound: int | None = None,
                        budget=None):
    """Tri-state associated-prime probe.

    Returns ('associated', witness) | ('not-associated', None) |
    ('unknown', None).  Caller asserts P prime; requires I within P.
    """
    if not P.contains_ideal(I):
        raise ValueError("I is not contained in P")
    Q = quotient_by_poly_list(I, P, budget=budget)
    if ideal_equal(Q, I):
        return ("not-associated", None)
    if degree_bound is None:
        degree_bound = 2 + max(
            (g.total_degree() for g in I.generators), default=0
        )
    gb_I = I.groebner()
    gb_Q = Q.groebner()
    candidates = []
    for g in gb_Q.basis:
        if not gb_I.normal_form(g).is_zero():
            candidates.append(g)
    ring = I.ring
    for d in range(0, degree_bound + 1):
        for mono in monomials_of_degree(ring, d):
            p = ring.monomial(mono)
            if gb_Q.normal_form(p).is_zero() and not gb_I.normal_form(p).is_zero():
                candidates.append(p)
    seen = set()
    for w in candidates:
        key = frozenset(w.terms.items())
        if key in seen:
            continue
        seen.add(key)
        ann_w = quotient_by_poly(I, w, budget=budget)
        if ideal_equal(ann_w, P):
            return ("associated", w)
    return ("unknown", None)


def quotient_by_poly_list(I: Ideal, J: Ideal, budget=None) -> Ideal:
    out = None
    for g in J.generators:
        q = quotient_by_poly(I, g, budget=budget)
        out = q if out is None else intersect(out, q, budget=budget)
    return out if out is not None else Ideal(I.ring, [I.ring.one()])


def saturate_irrelevant(I: Ideal, budget=None) -> Ideal:
    """(I : m^inf) for the irrelevant maximal ideal m = (x_1..x_n).

    Equals the intersection of the saturations at the single variables,
    not their composition.
    """
    out = None
    for nm in I.ring.names:
        s = saturate_by_poly(I, I.ring.var(nm), budget=budget)
        out = s if out is None else intersect(out, s, budget=budget)
    return out if out is not None else I


def monomials_of_weighted_degree(ring: PolyRing, weights, target):
    """Exponent tuples m with sum(w_i * m_i) == target (weights > 0)."""
    w = [rat(x) for x in weights]
    target = rat(target)
    n = ring.nvars
    out = []

    def rec(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        wi = w[i]
        e = 0
        while wi * e <= remaining:
            rec(i + 1, remaining - wi * e, prefix + [e])
            e += 1

    rec(0, target, [])
    return out


def _rank(rows) -> int:
    """Rank of a list of dense rational rows, destructive Gauss."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        pivot = None
        for idx in range(rank, len(rows)):
            if rows[idx][col]:
                pivot = idx
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        pc = prow[col]
        for idx in range(rank + 1, len(rows)):
            c = rows[idx][col]
            if c:
                factor = c / pc
                row = rows[idx]
                for k in range(col, ncols):
                    row[k] = row[k] - factor * prow[k]
        rank += 1
        col += 1
    return rank


def _weighted_piece_dimension(J: Ideal, weights, t) -> int:
    """Q-dimension of the weighted-degree-t slice of the ideal J."""
    ring = J.ring
    basis_monos = monomials_of_weighted_degree(ring, weights, t)
    if not basis_monos:
        return 0
    index = {m: i for i, m in enumerate(basis_monos)}
    rows = []
    w = [rat(x) for x in weights]
    for g in J.groebner().basis:
        degs = g.weighted_degrees(w)
        if len(degs) != 1:
            raise ValueError("ideal is not weighted-homogeneous")
        (d,) = degs
        gap = rat(t) - d
        if gap < 0:
            continue
        for u in monomials_of_weighted_degree(ring, weights, gap):
            row = [rat(0)] * len(basis_monos)
            for m, c in g.terms.items():
                key = tuple(a + b for a, b in zip(u, m))
                row[index[key]] = c
            rows.append(row)
    if not rows:
        return 0
    return _rank(rows)


def graded_piece_vanishes(J: Ideal, weights, t, budget=None) -> bool:
    """True iff the degree-t piece of H^0_m(R/J) vanishes.

    Decided by comparing the weighted degree-t slices of J and of its
    irrelevant-ideal saturation.
    """
    for g in J.generators:
        if len(g.weighted_degrees(weights)) != 1:
            raise ValueError("ideal is not weighted-homogeneous for the weights")
    sat = saturate_irrelevant(J, budget=budget)
    return _weighted_piece_dimension(J, weights, t) == _weighted_piece_dimension(
        sat, weights, t
    )
