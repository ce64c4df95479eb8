"""Combinatorial oracle for the zeroth Hodge ideal of a central
hyperplane arrangement, via the intersection-lattice formula

    I_0 = intersection over flats F of I_F^(m_F - rank F).

Flat enumeration is by closure of normal-vector spans; this is
exponential in the number of hyperplanes and capped accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import Ideal, intersect
from .polyring import Polynomial, PolyRing
from .rational import rat

MAX_HYPERPLANES = 12


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class Flat:
    span_rows: tuple          # RREF basis of the normal span
    rank: int
    members: tuple            # indices of hyperplanes containing the flat

    @property
    def multiplicity(self) -> int:
        return len(self.members)


class Arrangement:
    """A reduced central arrangement given by degree-one forms."""

    def __init__(self, forms):
        forms = list(forms)
        if not forms:
            raise ArrangementError("empty arrangement")
        ring = forms[0].ring
        normals = []
        for h in forms:
            if h.ring != ring:
                raise ArrangementError("forms live in different rings")
            if h.is_zero() or h.total_degree() != 1:
                raise ArrangementError(f"not a linear form: {h}")
            if h.constant_coeff():
                raise ArrangementError(f"not central: {h}")
            normals.append(_normal_vector(h))
        for i in range(len(normals)):
            for j in range(i + 1, len(normals)):
                if _proportional(normals[i], normals[j]):
                    raise ArrangementError(
                        "arrangement is not reduced: proportional forms "
                        f"{forms[i]} and {forms[j]}"
                    )
        if len(forms) > MAX_HYPERPLANES:
            raise ArrangementError(
                f"more than {MAX_HYPERPLANES} hyperplanes; flat enumeration refused"
            )
        self.ring = ring
        self.forms = forms
        self.normals = normals

    def defining_polynomial(self) -> Polynomial:
        f = self.ring.one()
        for h in self.forms:
            f = f * h
        return f

    def flats(self) -> list[Flat]:
        """All nonempty-intersection flats of positive rank."""
        seen = {}
        frontier = []
        for i in range(len(self.normals)):
            fl = self._closure([i])
            if fl.span_rows not in seen:
                seen[fl.span_rows] = fl
                frontier.append(fl)
        while frontier:
            nxt = []
            for fl in frontier:
                for j in range(len(self.normals)):
                    if j in fl.members:
                        continue
                    cand = self._closure(list(fl.members) + [j])
                    if cand.span_rows not in seen:
                        seen[cand.span_rows] = cand
                        nxt.append(cand)
            frontier = nxt
        return sorted(
            seen.values(), key=lambda fl: (fl.rank, fl.members)
        )

    def _closure(self, indices) -> Flat:
        rows = _rref([self.normals[i] for i in indices])
        members = tuple(
            i
            for i, nv in enumerate(self.normals)
            if _in_span(nv, rows)
        )
        rows = _rref([self.normals[i] for i in members])
        return Flat(tuple(tuple(r) for r in rows), len(rows), members)

    def flat_ideal(self, flat: Flat) -> Ideal:
        gens = []
        for row in flat.span_rows:
            terms = {}
            for i, c in enumerate(row):
                if c:
                    mono = tuple(1 if k == i else 0 for k in range(self.ring.nvars))
                    terms[mono] = rat(c)
            gens.append(Polynomial(self.ring, terms))
        return Ideal(self.ring, gens)


def _normal_vector(h: Polynomial):
    n = h.ring.nvars
    vec = [rat(0)] * n
    for m, c in h.terms.items():
        i = next(k for k, e in enumerate(m) if e)
        vec[i] = c
    return tuple(vec)


def _proportional(a, b) -> bool:
    cross = None
    for x, y in zip(a, b):
        if x == 0 and y == 0:
            continue
        if x == 0 or y == 0:
            return False
        r = x / y
        if cross is None:
            cross = r
        elif r != cross:
            return False
    return True


def _rref(rows):
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    out = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [x - fac * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return [tuple(row) for row in rows[:r]]


def _in_span(vec, rref_rows):
    v = list(vec)
    for row in rref_rows:
        lead = next((i for i, x in enumerate(row) if x), None)
        if lead is not None and v[lead]:
            fac = v[lead] / row[lead]
            v = [x - fac * y for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def linear_factors(f: Polynomial) -> list[Polynomial]:
    """Split a reduced product of rational linear forms into its factors.

    f is restricted to a generic rational line; each rational root gives a
    point on exactly one hyperplane, whose normal is the gradient of f
    there.  A few fixed lines cover unlucky choices; failure to split
    completely raises ArrangementError.
    """
    ring = f.ring
    n = ring.nvars
    d = f.total_degree()
    from .dmod import rational_roots_with_multiplicity, IrrationalRoots, s_ring

    seeds = [
        ([3, 1, 2, 5, 7][:n] + [1] * max(0, n - 5),
         [1, 2, -1, 3, -2][:n] + [2] * max(0, n - 5)),
        ([1, 4, 9, 2, 3][:n] + [1] * max(0, n - 5),
         [5, 1, 3, -1, 2][:n] + [1] * max(0, n - 5)),
        ([2, 7, 3, 1, 5][:n] + [1] * max(0, n - 5),
         [-1, 3, 2, 4, 1][:n] + [3] * max(0, n - 5)),
    ]
    sr = s_ring()
    for a, b in seeds:
        g = _restrict_to_line(f, a, b, sr)
        if g.total_degree() != d:
            continue
        try:
            roots = rational_roots_with_multiplicity(g)
        except IrrationalRoots:
            continue
        if sum(m for _r, m in roots) != d or any(m > 1 for _r, m in roots):
            continue
        factors = []
        ok = True
        for root, _m in roots:
            point = [rat(ai) * root + rat(bi) for ai, bi in zip(a, b)]
            normal = [_eval_at(f.derivative(nm), point) for nm in ring.names]
            if all(x == 0 for x in normal):
                ok = False
                break
            factors.append(_form_from_normal(ring, normal))
        if not ok:
            continue
        check = ring.one()
        for h in factors:
            check = check * h
        if _proportional_poly(check, f):
            return factors
    raise ArrangementError("polynomial does not split into distinct rational "
                           "linear forms")


def _restrict_to_line(f: Polynomial, a, b, sr) -> Polynomial:
    t = sr.var("s")
    acc = sr.zero()
    for m, c in f.terms.items():
        term = sr.const(c)
        for e, ai, bi in zip(m, a, b):
            if e:
                term = term * (t * ai + sr.const(bi)) ** e
        acc = acc + term
    return acc


def _eval_at(p: Polynomial, point):
    total = rat(0)
    for m, c in p.terms.items():
        v = c
        for e, x in zip(m, point):
            if e:
                v = v * x**e
        total += v
    return total


def _form_from_normal(ring: PolyRing, normal) -> Polynomial:
    from math import gcd, lcm

    dens = [int(x.denominator) for x in normal]
    L = 1
    for dd in dens:
        L = lcm(L, dd)
    ints = [int(x * L) for x in normal]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    terms = {}
    for i, c in enumerate(ints):
        if c:
            mono = tuple(1 if k == i else 0 for k in range(ring.nvars))
            terms[mono] = rat(c)
    return Polynomial(ring, terms)


def _proportional_poly(a: Polynomial, b: Polynomial) -> bool:
    if a.is_zero() or b.is_zero() or len(a.terms) != len(b.terms):
        return False
    m0 = next(iter(a.terms))
    if m0 not in b.terms:
        return False
    ratio = a.terms[m0] / b.terms[m0]
    return all(
        m in b.terms and c == ratio * b.terms[m] for m, c in a.terms.items()
    )


def mustata_multiplier_ideal(arr: Arrangement, budget=None) -> Ideal:
    """I_0 of the arrangement from the flat lattice alone."""
    result = None
    for flat in arr.flats():
        e = flat.multiplicity - flat.rank
        if e <= 0:
            continue
        piece = arr.flat_ideal(flat).power(e)
        result = piece if result is None else intersect(result, piece, budget=budget)
    if result is None:
        return Ideal(arr.ring, [arr.ring.one()])
    gb = result.groebner(budget=budget)
    return Ideal(arr.ring, list(gb.basis))
