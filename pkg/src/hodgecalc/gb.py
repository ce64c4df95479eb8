"""Shared Buchberger engine.

One pair-driven loop serves three term algebras: commutative polynomial
rings, Weyl algebras (left ideals, solvable type), and free modules over
a commutative ring (position-over-term).  An algebra is described by an
ops object; polynomials are plain dicts {key: coefficient} where a key
is an exponent tuple (or (component, exponent tuple) for modules).

Pair selection is sugar-degree normal strategy with Gebauer-Moeller
elimination.  The product criterion is applied only when the ops object
declares itself commutative; the chain criterion is safe in all cases.

A step budget caps the number of S-pair reductions; exhausting it
raises ResourceBudget (a resource error, never a wrong answer).
"""

from __future__ import annotations

import heapq


class ResourceBudget(RuntimeError):
    """Raised when a configured computation budget is exhausted."""


DEFAULT_STEP_BUDGET = 2_000_000


class CommutativeOps:
    """Term algebra of a commutative polynomial ring for the engine."""

    commutative = True

    def __init__(self, order):
        self.order = order
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
        """Cofactor u with u + a == b componentwise."""
        return tuple(y - x for x, y in zip(a, b))

    @staticmethod
    def lcm(a, b):
        return tuple(x if x > y else y for x, y in zip(a, b))

    @staticmethod
    def disjoint(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    @staticmethod
    def degree(cofactor):
        return sum(cofactor)

    @staticmethod
    def sugar_degree(lead_key):
        return sum(lead_key)

    @staticmethod
    def mul_term_poly(coeff, mono, poly):
        out = {}
        for m, c in poly.items():
            out[tuple(a + b for a, b in zip(mono, m))] = coeff * c
        return out


def leading(poly, ops):
    m = max(poly, key=ops.key)
    return m, poly[m]


def sub_mul(target: dict, coeff, mono, poly, ops) -> None:
    """target -= coeff * mono * poly, in place."""
    for m, c in ops.mul_term_poly(coeff, mono, poly).items():
        s = target.get(m)
        if s is None:
            target[m] = -c
        else:
            s = s - c
            if s:
                target[m] = s
            else:
                del target[m]


def normal_form(poly, basis, ops, head_only=False, lead_data=None):
    """Remainder of left division of poly by the list of basis dicts.

    lead_data, when provided, is the precomputed [(lm, lc, poly)] list
    (the Buchberger loop maintains it incrementally).
    """
    if not poly:
        return {}
    if lead_data is None:
        lead_data = [(leading(g, ops) + (g,)) for g in basis if g]
    work = dict(poly)
    result = {}
    while work:
        m = max(work, key=ops.key)
        c = work.pop(m)
        hit = None
        for lm, lc, g in lead_data:
            if ops.divides(lm, m):
                hit = (lm, lc, g)
                break
        if hit is None:
            result[m] = c
            if head_only:
                result.update(work)
                return result
            continue
        lm, lc, g = hit
        u = ops.quotient(lm, m)
        work[m] = c
        sub_mul(work, c / lc, u, g, ops)
    return result


def _spair(gi, gj, lmi, lci, lmj, lcj, lcm, ops):
    ui = ops.quotient(lmi, lcm)
    uj = ops.quotient(lmj, lcm)
    s = ops.mul_term_poly(1 / lci, ui, gi)
    sub_mul(s, 1 / lcj, uj, gj, ops)
    return s


class _PairQueue:
    """Min-heap of S-pairs with lazy deletion keyed by (i, j)."""

    def __init__(self):
        self.heap = []
        self.active = {}

    def push(self, i, j, lcm, sugar, key):
        self.active[(i, j)] = lcm
        heapq.heappush(self.heap, (sugar, key, i, j))

    def discard(self, i, j):
        self.active.pop((i, j), None)

    def pop(self):
        while self.heap:
            sugar, key, i, j = heapq.heappop(self.heap)
            lcm = self.active.pop((i, j), None)
            if lcm is not None:
                return i, j, lcm, sugar
        return None

    def __bool__(self):
        return bool(self.active)


class _Basis:
    __slots__ = ("polys", "lms", "lcs", "sugars")

    def __init__(self):
        self.polys = []
        self.lms = []
        self.lcs = []
        self.sugars = []

    def add(self, poly, ops, sugar):
        lm, lc = leading(poly, ops)
        self.polys.append(poly)
        self.lms.append(lm)
        self.lcs.append(lc)
        self.sugars.append(sugar)
        return len(self.polys) - 1


def _update_pairs(queue: _PairQueue, basis: _Basis, t: int, ops):
    """Gebauer-Moeller update after basis element t was appended."""
    lmt = basis.lms[t]
    # chain criterion against surviving old pairs
    for (i, j), lcm in list(queue.active.items()):
        if (
            ops.divides(lmt, lcm)
            and ops.lcm(basis.lms[i], lmt) != lcm
            and ops.lcm(basis.lms[j], lmt) != lcm
        ):
            queue.discard(i, j)
    # candidate new pairs (i, t)
    cand = []
    for i in range(t):
        if basis.polys[i] is None:
            continue
        lcm = ops.lcm(basis.lms[i], lmt)
        if lcm is not None:
            cand.append((i, lcm))
    for idx, (i, lcm) in enumerate(cand):
        drop = False
        for jdx, (j, lcm2) in enumerate(cand):
            if idx == jdx:
                continue
            if lcm2 == lcm:
                if jdx < idx:
                    drop = True
                    break
            elif ops.divides(lcm2, lcm):
                drop = True
                break
        if drop:
            continue
        if ops.commutative and ops.disjoint(basis.lms[i], lmt):
            continue
        du = ops.degree(ops.quotient(basis.lms[i], lcm))
        dv = ops.degree(ops.quotient(lmt, lcm))
        sug = max(basis.sugars[i] + du, basis.sugars[t] + dv)
        queue.push(i, t, lcm, sug, ops.key(lcm))


def buchberger(generators, ops, budget: int | None = None,
               known_groebner_prefix: int = 0):
    """Reduced (left) Groebner basis of the ideal/module generated.

    Returns a list of monic dicts sorted by leading key; deterministic
    for a fixed ops object and generator list.

    When the first known_groebner_prefix generators are already a
    Groebner basis, their mutual S-pairs are skipped (they reduce to
    zero by assumption); this makes adding generators to a computed
    basis incremental.
    """
    budget = budget if budget is not None else DEFAULT_STEP_BUDGET
    gens = [dict(g) for g in generators if g]
    if not gens:
        return []
    if not known_groebner_prefix:
        gens.sort(key=lambda g: ops.key(max(g, key=ops.key)))
    basis = _Basis()
    queue = _PairQueue()
    lead_data = []
    for idx, g in enumerate(gens):
        lm, lc = leading(g, ops)
        g = {m: c / lc for m, c in g.items()}
        t = basis.add(g, ops, ops.sugar_degree(lm))
        lead_data.append((basis.lms[t], basis.lcs[t], g))
        _update_pairs(queue, basis, t, ops)
        if idx < known_groebner_prefix:
            for (a, b) in [key for key in queue.active if key[1] == t]:
                if a < known_groebner_prefix:
                    queue.discard(a, b)
    steps = 0
    while True:
        item = queue.pop()
        if item is None:
            break
        i, j, lcm, sug = item
        if basis.polys[i] is None or basis.polys[j] is None:
            continue
        steps += 1
        if steps > budget:
            raise ResourceBudget(f"S-pair budget of {budget} exceeded")
        s = _spair(
            basis.polys[i], basis.polys[j],
            basis.lms[i], basis.lcs[i], basis.lms[j], basis.lcs[j],
            lcm, ops,
        )
        r = normal_form(s, None, ops, lead_data=lead_data)
        if not r:
            continue
        lm, lc = leading(r, ops)
        r = {m: c / lc for m, c in r.items()}
        t = basis.add(r, ops, sug)
        lead_data.append((basis.lms[t], basis.lcs[t], r))
        _update_pairs(queue, basis, t, ops)
    return interreduce(basis.polys, ops)


def interreduce(polys, ops):
    """Auto-reduced monic basis: canonical for a fixed order."""
    polys = [dict(g) for g in polys if g]
    polys.sort(key=lambda g: ops.key(max(g, key=ops.key)))
    kept = []
    lms = []
    for g in polys:
        lm, _ = leading(g, ops)
        if any(ops.divides(l, lm) for l in lms):
            continue
        kept.append(g)
        lms.append(lm)
    out = []
    for idx, g in enumerate(kept):
        others = [h for jdx, h in enumerate(kept) if jdx != idx]
        r = normal_form(g, others, ops) if others else dict(g)
        if r:
            lm, lc = leading(r, ops)
            out.append({m: c / lc for m, c in r.items()})
    out.sort(key=lambda g: ops.key(max(g, key=ops.key)))
    return out


def spair_reductions_vanish(basis, ops) -> bool:
    """Direct Buchberger criterion check, used by tests and invariants."""
    lead = [leading(g, ops) for g in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            lcm = ops.lcm(lead[i][0], lead[j][0])
            if lcm is None:
                continue
            s = _spair(
                basis[i], basis[j],
                lead[i][0], lead[i][1], lead[j][0], lead[j][1],
                lcm, ops,
            )
            if normal_form(s, basis, ops):
                return False
    return True
