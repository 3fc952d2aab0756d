"""Polynomial ideals, Groebner bases, and a certified real-radical closure.

The closure operator under-approximates the real radical by three sound rules:
ordinary radical membership (power test plus the 1 - t*f trick in an extended
ring), splitting of Hermitian sums of squares, and conjugation stability.
Every adjoined element carries a RadicalCertificate that can be re-verified
independently against the generator context recorded at admission time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from heapq import heapify, heappop, heappush
from itertools import combinations
from typing import Iterable, Sequence

from .poly import (GR_ONE, GR_ZERO, GaussianRational, Poly, monomial_degree,
                   monomial_divides, monomial_key, monomial_lcm, monomial_mul,
                   monomial_quotient)


# ---------------------------------------------------------------------------
# Groebner bases (Buchberger with product and chain criteria, degrevlex).


def normal_form(p: Poly, basis: Sequence[Poly]) -> Poly:
    """Fully reduce p modulo basis; deterministic divisor choice."""
    return _reduce(p, basis, track=False)[0]


def normal_form_with_quotients(p: Poly, basis: Sequence[Poly]):
    """Reduce p modulo basis, returning (remainder, quotients).

    The quotients q_i satisfy p = sum(q_i * basis_i) + remainder.
    """
    return _reduce(p, basis, track=True)


def _reduce(p: Poly, basis: Sequence[Poly], track: bool):
    divisors = [(g.leading_monomial(), g.leading_coefficient(), g, idx)
                for idx, g in enumerate(basis) if not g.is_zero()]
    work = dict(p.terms)
    # max-heap with lazy deletion; entries sort largest monomial first
    heap = [(-sum(m), m[::-1], m) for m in work]
    heapify(heap)
    out: dict = {}
    quotients: dict[int, dict] = {}
    n = p.n
    while heap:
        lm = heappop(heap)[2]
        lc = work.pop(lm, None)
        if lc is None:
            continue  # stale entry, already eliminated
        for gm, gc, g, idx in divisors:
            if monomial_divides(gm, lm):
                q = monomial_quotient(lm, gm)
                scale = lc / gc
                if track:
                    qterms = quotients.setdefault(idx, {})
                    prev = qterms.get(q, GR_ZERO) + scale
                    if prev.is_zero():
                        qterms.pop(q, None)
                    else:
                        qterms[q] = prev
                for m2, c2 in g.terms.items():
                    if m2 == gm:
                        continue
                    mono = monomial_mul(q, m2)
                    prev = work.get(mono)
                    if prev is None:
                        s = -(scale * c2)
                        if not s.is_zero():
                            work[mono] = s
                            heappush(heap, (-sum(mono), mono[::-1], mono))
                    else:
                        s = prev - scale * c2
                        if s.is_zero():
                            del work[mono]
                        else:
                            work[mono] = s
                break
        else:
            out[lm] = lc
    remainder = Poly(n, out)
    if not track:
        return remainder, None
    qlist = [Poly(n, quotients.get(i, {})) for i in range(len(basis))]
    return remainder, qlist


def s_polynomial(f: Poly, g: Poly) -> Poly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lf, lg)
    uf = Poly(f.n, {monomial_quotient(lcm, lf): GR_ONE / f.leading_coefficient()})
    ug = Poly(g.n, {monomial_quotient(lcm, lg): GR_ONE / g.leading_coefficient()})
    return uf * f - ug * g


def _buchberger(seed: Sequence[Poly], start: int):
    """Complete seed to a (not necessarily reduced) Groebner basis.

    The first `start` elements are assumed to form a Groebner basis already,
    so only pairs touching later elements are processed; with start=0 this is
    the plain algorithm.  Pair selection is deterministic: lowest lcm total
    degree, then monomial order on the lcm, then index order.  Returns the
    single-element unit basis as soon as a constant appears.
    """
    basis = list(seed)
    n = basis[0].n

    def pair_entry(i: int, j: int):
        lcm = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        return (monomial_degree(lcm), monomial_key(lcm), i, j)

    treated = {(i, j) for i in range(start) for j in range(i + 1, start)}
    pairs = [pair_entry(i, j)
             for i in range(len(basis)) for j in range(i + 1, len(basis))
             if j >= start]
    heapify(pairs)

    while pairs:
        i, j = heappop(pairs)[2:]
        treated.add((i, j))
        fi, fj = basis[i], basis[j]
        lmi, lmj = fi.leading_monomial(), fj.leading_monomial()
        lcm = monomial_lcm(lmi, lmj)
        if lcm == monomial_mul(lmi, lmj):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not monomial_divides(basis[k].leading_monomial(), lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in treated and b in treated:
                skip = True
                break
        if skip:
            continue
        h = normal_form(s_polynomial(fi, fj), basis)
        if h.is_zero():
            continue
        if h.is_constant():
            return [Poly.one(n)]
        h = h.monic()
        basis.append(h)
        new = len(basis) - 1
        for k in range(new):
            heappush(pairs, pair_entry(k, new))
    return basis


def _reduce_basis(basis: Sequence[Poly]):
    """Canonical reduced form of a Groebner basis, ascending leading monomial."""
    # minimalize: drop elements whose leading monomial is divisible by another
    ordered = sorted(basis, key=lambda g: monomial_key(g.leading_monomial()))
    minimal: list[Poly] = []
    for g in ordered:
        lm = g.leading_monomial()
        if not any(monomial_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    # reduce tails against the rest
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: monomial_key(g.leading_monomial()))
    return tuple(reduced)


def _dedup_monic(gens: Iterable[Poly]):
    polys = [p for p in gens if not p.is_zero()]
    if not polys:
        return []
    n = polys[0].n
    if any(p.n != n for p in polys):
        raise ValueError("ambient dimension mismatch")
    out: list[Poly] = []
    seen = set()
    for p in polys:
        m = p.monic()
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def groebner(gens: Iterable[Poly]):
    """Reduced monic Groebner basis, sorted by ascending leading monomial.

    The reduced basis is the canonical representative of the ideal, so equal
    ideals give equal tuples.
    """
    polys = _dedup_monic(gens)
    if not polys:
        return ()
    return _reduce_basis(_buchberger(polys, 0))


def _is_unit_basis(basis) -> bool:
    return any(not g.is_zero() and g.is_constant() for g in basis)


def groebner_with_representation(gens: Sequence[Poly]):
    """Reduced basis plus cofactor rows over the original generators.

    Returns (basis, rows) with basis[i] == sum(rows[i][j] * gens[j]).  Same
    pair selection and normalization as groebner(), so the basis agrees with
    it; the rows let membership proofs be expressed over the input generators.
    """
    gens = tuple(gens)
    n = None
    basis: list[Poly] = []
    rows: list[list[Poly]] = []
    for j, p in enumerate(gens):
        if p.is_zero():
            continue
        if n is None:
            n = p.n
        elif p.n != n:
            raise ValueError("ambient dimension mismatch")
        scale = GR_ONE / p.leading_coefficient()
        row = [Poly.zero(p.n) for _ in gens]
        row[j] = Poly.constant(p.n, scale)
        basis.append(p.monic())
        rows.append(row)
    if not basis:
        return (), ()

    def pair_entry(i: int, j: int):
        lcm = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        return (monomial_degree(lcm), monomial_key(lcm), i, j)

    pairs = [pair_entry(i, j)
             for i in range(len(basis)) for j in range(i + 1, len(basis))]
    heapify(pairs)
    treated: set = set()
    while pairs:
        i, j = heappop(pairs)[2:]
        treated.add((i, j))
        fi, fj = basis[i], basis[j]
        lmi, lmj = fi.leading_monomial(), fj.leading_monomial()
        lcm = monomial_lcm(lmi, lmj)
        if lcm == monomial_mul(lmi, lmj):
            continue
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not monomial_divides(basis[k].leading_monomial(), lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in treated and b in treated:
                skip = True
                break
        if skip:
            continue
        uf = Poly(fi.n, {monomial_quotient(lcm, lmi): GR_ONE})
        ug = Poly(fj.n, {monomial_quotient(lcm, lmj): GR_ONE})
        s = uf * fi - ug * fj
        s_row = [uf * a - ug * b for a, b in zip(rows[i], rows[j])]
        h, quotients = normal_form_with_quotients(s, basis)
        h_row = s_row
        for k, q in enumerate(quotients):
            if not q.is_zero():
                h_row = [a - q * b for a, b in zip(h_row, rows[k])]
        if h.is_zero():
            continue
        scale = Poly.constant(h.n, GR_ONE / h.leading_coefficient())
        basis.append(h.monic())
        rows.append([scale * a for a in h_row])
        new = len(basis) - 1
        for k in range(new):
            heappush(pairs, pair_entry(k, new))

    order = sorted(range(len(basis)),
                   key=lambda i: monomial_key(basis[i].leading_monomial()))
    minimal: list[int] = []
    for i in order:
        lm = basis[i].leading_monomial()
        if not any(monomial_divides(basis[k].leading_monomial(), lm)
                   for k in minimal):
            minimal.append(i)
    out_basis: list[Poly] = []
    out_rows: list[list[Poly]] = []
    for pos, i in enumerate(minimal):
        others = [basis[k] for k in minimal if k != i]
        other_rows = [rows[k] for k in minimal if k != i]
        reduced, quotients = normal_form_with_quotients(basis[i], others)
        row = rows[i]
        for k, q in enumerate(quotients):
            if not q.is_zero():
                row = [a - q * b for a, b in zip(row, other_rows[k])]
        scale = Poly.constant(reduced.n, GR_ONE / reduced.leading_coefficient())
        out_basis.append(reduced.monic())
        out_rows.append([scale * a for a in row])
    pairing = sorted(zip(out_basis, out_rows),
                     key=lambda br: monomial_key(br[0].leading_monomial()))
    out_basis = [b for b, _ in pairing]
    out_rows = [r for _, r in pairing]
    return tuple(out_basis), tuple(tuple(r) for r in out_rows)


def member_cofactors(p: Poly, gens: Sequence[Poly]):
    """Cofactors expressing p over gens, or None when p is not a member."""
    gens = tuple(gens)
    basis, rows = groebner_with_representation(gens)
    remainder, quotients = normal_form_with_quotients(p, basis)
    if not remainder.is_zero():
        return None
    cof = [Poly.zero(p.n) for _ in gens]
    for k, q in enumerate(quotients):
        if q.is_zero():
            continue
        cof = [a + q * b for a, b in zip(cof, rows[k])]
    return cof


class Ideal:
    """Finitely generated ideal of Q(i)[z, zbar] with a cached reduced basis."""

    __slots__ = ("n", "generators", "_basis")

    def __init__(self, generators: Iterable[Poly] = (), n: int | None = None) -> None:
        gens = tuple(g for g in generators if not g.is_zero())
        if gens:
            dim = gens[0].n
            if any(g.n != dim for g in gens):
                raise ValueError("ambient dimension mismatch")
            if n is not None and n != dim:
                raise ValueError("ambient dimension mismatch")
            n = dim
        elif n is None:
            raise ValueError("empty generator list needs an explicit ambient dimension")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_basis", None)

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    def groebner_basis(self):
        if self._basis is None:
            object.__setattr__(self, "_basis", groebner(self.generators))
        return self._basis

    def is_unit(self) -> bool:
        return _is_unit_basis(self.groebner_basis())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        gens = ", ".join(g.to_text() for g in self.generators)
        return f"Ideal([{gens}], n={self.n})"


def contains(ideal: Ideal, p: Poly) -> bool:
    """Membership via zero normal form against the reduced basis."""
    if p.is_zero():
        return True
    return normal_form(p, ideal.groebner_basis()).is_zero()


def is_subideal(inner: Ideal, outer: Ideal) -> bool:
    return all(contains(outer, g) for g in inner.generators)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Mathematical equality: identical reduced Groebner bases."""
    if a.n != b.n:
        raise ValueError("ambient dimension mismatch")
    return a.groebner_basis() == b.groebner_basis()


def contains_unit_at(ideal: Ideal, point) -> bool:
    """True when some generator is nonzero at the point.

    For a finitely generated ideal this is exactly 'the stalk at the point
    contains a unit': any combination vanishes wherever all generators do.
    """
    return any(not g.evaluate(point).is_zero() for g in ideal.generators)


# ---------------------------------------------------------------------------
# Ordinary radical membership.


def _lift(p: Poly) -> Poly:
    """Embed Q(i)[z1..zn, zbar..] into the ring with one extra variable."""
    n = p.n
    terms = {}
    for mono, c in p.terms.items():
        terms[mono[:n] + (0,) + mono[n:] + (0,)] = c
    return Poly(n + 1, terms)


def _rabinowitsch_member(basis: Sequence[Poly], p: Poly) -> bool:
    """True iff p vanishes on the common zero set: 1 in (basis, 1 - t*p).

    Lifting inserts zero exponent slots at fixed positions, which preserves
    the monomial order, so a Groebner basis lifts to one and only the pairs
    against the new element need processing.
    """
    n = p.n
    t = Poly.z(n + 1, n + 1)
    lifted = [_lift(g) for g in basis]
    seed = lifted + [(Poly.one(n + 1) - t * _lift(p)).monic()]
    return _is_unit_basis(_buchberger(seed, len(lifted)))


def _radical_membership(basis: Sequence[Poly], p: Poly, power_cap: int):
    """(member?, smallest exponent if found within the cap)."""
    if p.is_zero():
        return True, 1
    power = p
    for m in range(1, power_cap + 1):
        if normal_form(power, basis).is_zero():
            return True, m
        if m < power_cap:
            power = power * p
    if _rabinowitsch_member(basis, p):
        return True, None
    return False, None


def radical_contains(ideal: Ideal, p: Poly, power_cap: int = 8):
    """Is p in the radical of the ideal?  Returns (verdict, exponent).

    The exponent is the smallest m <= power_cap with p^m in the ideal, or
    None when membership was settled by the extended-ring unit test alone.
    """
    return _radical_membership(ideal.groebner_basis(), p, power_cap)


# ---------------------------------------------------------------------------
# Hermitian sums of squares.


def _gram_data(p: Poly):
    """Gram matrix of p over the z-only monomial halves.

    Since z and zbar monomials are independent, the representation
    p = sum G[a][b] * z^a * conj(z)^b is unique; p is a Hermitian sum of
    squares exactly when G is positive semidefinite.
    """
    n = p.n
    halves = set()
    for mono in p.terms:
        halves.add(mono[:n])
        halves.add(mono[n:])
    basis = sorted(halves, key=monomial_key, reverse=True)
    index = {h: i for i, h in enumerate(basis)}
    size = len(basis)
    matrix = [[GR_ZERO] * size for _ in range(size)]
    for mono, c in p.terms.items():
        matrix[index[mono[:n]]][index[mono[n:]]] = c
    return basis, matrix


def gram_basis_size(p: Poly) -> int:
    return len(_gram_data(p)[0])


def sos_split(p: Poly):
    """Exact decomposition p = sum c_i * h_i * conj(h_i), c_i > 0 rational.

    Returns the list of (c_i, h_i) with h_i polynomials in the unbarred
    variables only, or None when p is not such a sum.  The decomposition is
    found by rational LDL elimination on the (unique) Gram matrix.
    """
    if not p.is_real():
        raise ValueError("sos_split requires a real-valued polynomial")
    if p.is_zero():
        return []
    n = p.n
    basis, matrix = _gram_data(p)
    size = len(basis)
    decomposition = []
    for k in range(size):
        d = matrix[k][k]
        if d.im:
            return None
        if d.re < 0:
            return None
        if not d.re:
            if any(not matrix[k][j].is_zero() for j in range(k + 1, size)):
                return None
            continue
        w = [matrix[j][k] / d for j in range(size)]
        decomposition.append((d.re, w))
        for a in range(k, size):
            wa = w[a]
            if wa.is_zero():
                continue
            for b in range(k, size):
                if w[b].is_zero():
                    continue
                matrix[a][b] = matrix[a][b] - d * wa * w[b].conjugate()
    result = []
    for c, w in decomposition:
        terms = {}
        for j, coeff in enumerate(w):
            if not coeff.is_zero():
                half = basis[j]
                terms[half + (0,) * n] = coeff
        result.append((c, Poly(n, terms)))
    return result


# ---------------------------------------------------------------------------
# Certificates.


@dataclass(frozen=True)
class RadicalCertificate:
    """Independent evidence that `element` may be adjoined.

    Membership claims are witnessed by cofactor lists: pairs (g, c) of
    context generators and polynomials with sum(c * g) equal to the claimed
    member, so verification is a ring identity plus a lookup.

    kind 'radical-power': element**exponent is the claimed member; exponent
    None means membership came from the extended-ring unit test (1 in
    (context, 1 - t*element)) and is rechecked that way.
    kind 'sos-split': witness = (target, decomposition, cofactors); target is
    a member equal to sum(c * h * conj(h)) with c > 0, and element is one of
    the h or a conjugate of one.
    kind 'linear-combination': element itself is the claimed member.
    """

    element: Poly
    kind: str
    exponent: int | None
    witness: tuple
    context: tuple


def _cofactors_valid(cofactors, claimed: Poly, context) -> bool:
    if not cofactors:
        return normal_form(claimed, groebner(context)).is_zero()
    pool = list(context)
    total = Poly.zero(claimed.n)
    for gen, cof in cofactors:
        if gen not in pool:
            return False
        total = total + cof * gen
    return total == claimed


def verify_certificate(cert: RadicalCertificate) -> bool:
    """Recheck a certificate from scratch against its recorded context."""
    if cert.kind == "radical-power":
        if cert.exponent is None:
            return _rabinowitsch_member(groebner(cert.context), cert.element)
        return _cofactors_valid(cert.witness, cert.element ** cert.exponent,
                                cert.context)
    if cert.kind == "sos-split":
        target, decomposition, cofactors = cert.witness
        if not _cofactors_valid(cofactors, target, cert.context):
            return False
        total = Poly.zero(target.n)
        for c, h in decomposition:
            if c <= 0:
                return False
            total = total + h * h.conjugate() * c
        if total != target:
            return False
        return any(cert.element == h or cert.element == h.conjugate()
                   for _, h in decomposition)
    if cert.kind == "linear-combination":
        return _cofactors_valid(cert.witness, cert.element, cert.context)
    return False


# ---------------------------------------------------------------------------
# Real-radical closure.


@dataclass(frozen=True)
class ClosureCaps:
    """Budgets for the closure search; exceeding one truncates, never errors."""

    candidate_degree: int = 4
    rounds: int = 8
    gram_size: int = 64
    power_cap: int = 8


@dataclass(frozen=True)
class ClosureResult:
    ideal: Ideal
    certificates: tuple
    truncated: bool
    truncation_reasons: tuple


_MODES = ("full", "radical-only", "sos-only")

# Cofactor witnesses come from a tracked basis whose rows can blow up badly.
# Past this many work-list terms, certificates fall back to the empty witness,
# which verify_certificate rechecks by normal form against the context ideal.
_WITNESS_TERM_BUDGET = 200


def _sign_normalize(p: Poly) -> Poly:
    """Flip sign so the leading coefficient is positive (real part first)."""
    lc = p.leading_coefficient()
    if lc.re < 0 or (not lc.re and lc.im < 0):
        return -p
    return p


def _radical_candidates(n: int, degree_cap: int):
    """Squarefree monomials up to the degree cap, in ascending order.

    A monomial lies in a radical iff its squarefree part does, so squarefree
    candidates decide every monomial up to any degree.
    """
    out = []
    for size in range(1, min(degree_cap, 2 * n) + 1):
        monos = []
        for combo in combinations(range(2 * n), size):
            exps = [0] * (2 * n)
            for slot in combo:
                exps[slot] = 1
            monos.append(tuple(exps))
        monos.sort(key=monomial_key)
        out.extend(Poly(n, {m: GR_ONE}) for m in monos)
    return out


def real_radical_closure(ideal: Ideal, caps: ClosureCaps | None = None,
                         mode: str = "full") -> ClosureResult:
    """Close an ideal under the three admissible real-radical rules.

    Repeats until a fixed point or until a cap is hit: (R1) adjoin candidates
    caught by ordinary radical membership, (R2) split real members into
    Hermitian squares and adjoin the halves with their conjugates, (R3) adjoin
    conjugates of generators.  The result's generators are the reduced basis
    of the closed ideal; certificates record every admission.
    """
    if caps is None:
        caps = ClosureCaps()
    if mode not in _MODES:
        raise ValueError("unknown radical mode")
    n = ideal.n
    work: list[Poly] = []
    seen: set = set()
    for g in ideal.generators:
        if not g.is_zero() and g not in seen:
            seen.add(g)
            work.append(g)
    certificates: list[RadicalCertificate] = []
    reasons: set = set()
    basis = groebner(work)
    rep_cache: tuple | None = None  # tracked basis over the current work list

    def cofactor_pairs(claimed: Poly):
        nonlocal rep_cache
        if sum(len(g.terms) for g in work) > _WITNESS_TERM_BUDGET:
            return ()
        if rep_cache is None:
            rep_cache = groebner_with_representation(tuple(work))
        rep_basis, rep_rows = rep_cache
        remainder, quotients = normal_form_with_quotients(claimed, rep_basis)
        if not remainder.is_zero():
            return ()
        cof = [Poly.zero(n) for _ in work]
        for k, q in enumerate(quotients):
            if q.is_zero():
                continue
            cof = [a + q * b for a, b in zip(cof, rep_rows[k])]
        return tuple((g, c) for g, c in zip(work, cof) if not c.is_zero())

    def adjoin(element: Poly, kind: str, exponent, witness) -> None:
        nonlocal basis, rep_cache
        certificates.append(RadicalCertificate(
            element=element, kind=kind, exponent=exponent,
            witness=witness, context=tuple(work)))
        work.append(element)
        seen.add(element)
        # the old basis stays a Groebner basis, so only new pairs are run
        basis = tuple(_buchberger(list(basis) + [element.monic()], len(basis)))
        rep_cache = None

    candidates = _radical_candidates(n, caps.candidate_degree)
    split_done: set = set()
    rounds_used = 0
    progressed = True
    while progressed and rounds_used < caps.rounds:
        progressed = False
        rounds_used += 1
        if _is_unit_basis(basis):
            break
        if mode != "sos-only":
            for f in candidates + list(basis):
                if _is_unit_basis(basis):
                    break
                if normal_form(f, basis).is_zero():
                    continue
                ok, m = _radical_membership(basis, f, caps.power_cap)
                if not ok:
                    continue
                witness = cofactor_pairs(f ** m) if m is not None else ()
                adjoin(f, "radical-power", m, witness)
                progressed = True
        if mode != "radical-only":
            targets = []
            target_seen = set()
            for g in work:
                row = []
                if g.is_real():
                    row.append(g)
                gc = g.conjugate()
                row.append(g * gc)
                s = g + gc
                if not s.is_zero() and normal_form(s, basis).is_zero():
                    row.append(s)
                for t in row:
                    if t.is_zero() or t.is_constant():
                        continue
                    t = _sign_normalize(t)
                    if t not in target_seen:
                        target_seen.add(t)
                        targets.append(t)
            for target in targets:
                if _is_unit_basis(basis):
                    break
                if target in split_done:
                    continue
                if gram_basis_size(target) > caps.gram_size:
                    reasons.add("gram size cap")
                    continue
                split_done.add(target)
                decomposition = sos_split(target)
                if not decomposition:
                    continue
                target_cofactors = cofactor_pairs(target)
                for _, h in decomposition:
                    for candidate in (h, h.conjugate()):
                        if not normal_form(candidate, basis).is_zero():
                            witness = (target, tuple(decomposition), target_cofactors)
                            adjoin(candidate, "sos-split", None, witness)
                            progressed = True
        for g in list(work):
            if _is_unit_basis(basis):
                break
            gc = g.conjugate()
            if not normal_form(gc, basis).is_zero():
                # g*conj(g) is a member by construction, with cofactor conj(g)
                witness = (g * gc, ((Fraction(1), gc),), ((g, gc),))
                adjoin(gc, "sos-split", None, witness)
                progressed = True
    if progressed and rounds_used >= caps.rounds and not _is_unit_basis(basis):
        reasons.add("round cap")

    final = _reduce_basis(basis)
    for g in final:
        if g not in seen:
            certificates.append(RadicalCertificate(
                element=g, kind="linear-combination", exponent=None,
                witness=cofactor_pairs(g), context=tuple(work)))
    closed = Ideal(final, n=n)
    object.__setattr__(closed, "_basis", final)
    return ClosureResult(ideal=closed, certificates=tuple(certificates),
                         truncated=bool(reasons), truncation_reasons=tuple(sorted(reasons)))
