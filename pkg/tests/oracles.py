"""Independent oracles and random generators used by the test suite.

Nothing here touches the package's Groebner or wedge machinery: membership
is decided by exact linear algebra on a Macaulay-style matrix, determinants
by the Leibniz permutation sum, and monomial-ideal radicals combinatorially.
Oracle verdicts are compared against the engine in the tests.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from kohnalg.poly import (GR_ZERO, GaussianRational, Poly, monomial_degree,
                          monomial_divides, monomial_key, monomial_mul)


# ---------------------------------------------------------------------------
# Macaulay-matrix membership: is p a combination sum(q_i * g_i) with
# deg(q_i * g_i) <= degree_bound?  Exact column elimination over Q(i).


def _monomials_up_to(width: int, degree: int):
    out = [(0,) * width]
    frontier = [(0,) * width]
    for _ in range(degree):
        nxt = []
        seen = set()
        for mono in frontier:
            for slot in range(width):
                grown = mono[:slot] + (mono[slot] + 1,) + mono[slot + 1:]
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        out.extend(nxt)
        frontier = nxt
    return out


def _reduce_column(col: dict, pivots: dict) -> dict:
    col = dict(col)
    while col:
        lead = max(col, key=monomial_key)
        pivot = pivots.get(lead)
        if pivot is None:
            break
        c = col[lead]
        for mono, v in pivot.items():
            s = col.get(mono, GR_ZERO) - c * v
            if s.is_zero():
                col.pop(mono, None)
            else:
                col[mono] = s
    return col


def macaulay_contains(gens, p: Poly, degree_bound: int) -> bool:
    """Degree-bounded membership by exact linear algebra."""
    if p.is_zero():
        return True
    if p.total_degree() > degree_bound:
        return False
    width = 2 * p.n
    pivots: dict = {}
    for g in gens:
        if g.is_zero():
            continue
        room = degree_bound - g.total_degree()
        if room < 0:
            continue
        for mult in _monomials_up_to(width, room):
            col = {}
            for mono, c in g.terms.items():
                col[monomial_mul(mult, mono)] = c
            col = _reduce_column(col, pivots)
            if col:
                lead = max(col, key=monomial_key)
                inv = GaussianRational(1) / col[lead]
                pivots[lead] = {m: c * inv for m, c in col.items()}
    rest = _reduce_column(dict(p.terms), pivots)
    return not rest


# ---------------------------------------------------------------------------
# Leibniz determinants.


def leibniz_determinant(rows) -> Poly:
    size = len(rows)
    n = rows[0][0].n
    acc = Poly.zero(n)
    for perm in permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Poly.one(n)
        for i in range(size):
            term = term * rows[i][perm[i]]
        acc = acc + term if sign > 0 else acc - term
    return acc


def bordered_hessian_determinant(r: Poly) -> Poly:
    """Determinant of [[0, dr/dzbar_j], [dr/dz_i, d2r/dz_i dzbar_j]]."""
    n = r.n
    rows = [[Poly.zero(n)] + [r.partial_zbar(j) for j in range(1, n + 1)]]
    for i in range(1, n + 1):
        ri = r.partial_z(i)
        rows.append([ri] + [ri.partial_zbar(j) for j in range(1, n + 1)])
    return leibniz_determinant(rows)


# ---------------------------------------------------------------------------
# Monomial-ideal radical: the radical of a monomial ideal is generated by the
# squarefree parts, and a polynomial lies in a monomial ideal iff each of its
# monomials is divisible by a generator.


def _squarefree(mono):
    return tuple(min(e, 1) for e in mono)


def monomial_ideal_contains(gen_monos, p: Poly) -> bool:
    return all(any(monomial_divides(g, mono) for g in gen_monos)
               for mono in p.terms)


def monomial_radical_contains(gen_monos, p: Poly) -> bool:
    squarefree = [_squarefree(g) for g in gen_monos]
    return monomial_ideal_contains(squarefree, p)


# ---------------------------------------------------------------------------
# Random generators (callers seed their own rng).


def random_gaussian(rng: random.Random, span: int = 4) -> GaussianRational:
    return GaussianRational(Fraction(rng.randint(-span, span), rng.randint(1, 3)),
                            Fraction(rng.randint(-span, span), rng.randint(1, 3)))


def random_poly(rng: random.Random, n: int, degree: int, terms: int,
                span: int = 4) -> Poly:
    acc: dict = {}
    for _ in range(terms):
        mono = [0] * (2 * n)
        for _ in range(rng.randint(0, degree)):
            mono[rng.randrange(2 * n)] += 1
        c = random_gaussian(rng, span)
        key = tuple(mono)
        prev = acc.get(key, GR_ZERO) + c
        if prev.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = prev
    return Poly(n, acc)


def random_nonzero_poly(rng, n, degree, terms, span=4) -> Poly:
    while True:
        p = random_poly(rng, n, degree, terms, span)
        if not p.is_zero():
            return p


def random_real_poly(rng, n, degree, terms) -> Poly:
    g = random_poly(rng, n, degree, terms)
    return g + g.conjugate()


def random_defining_function(rng: random.Random, n: int, degree: int,
                             terms: int) -> Poly:
    """Real r with r(0) = 0 and dr/dz_n(0) = 1: 2*Re(z_n) plus noise."""
    base = Poly.z(n, n) + Poly.zbar(n, n)
    while True:
        g = random_poly(rng, n, degree, terms)
        g = g - Poly.constant(n, g.terms.get((0,) * (2 * n), GR_ZERO))
        noise = g + g.conjugate()
        r = base + noise
        grad = [r.partial_z(i) for i in range(1, n + 1)]
        origin_vals = [gi.terms.get((0,) * (2 * n), GR_ZERO) for gi in grad]
        if not all(v.is_zero() for v in origin_vals):
            return r
