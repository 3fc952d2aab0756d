"""Exterior algebra of (p,q)-forms with polynomial coefficients.

A form is a map from cobasis symbols dz_I ∧ dzbar_J (I, J strictly increasing
index tuples) to polynomial coefficients.  The canonical factor order puts all
dz before all dzbar, each block ascending; wedge products sort factors into
that order and pick up the permutation sign.  All forms here are homogeneous
of a single bidegree (p, q); the zero form is bidegree-less.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import Poly

CoBasis = tuple  # (holo indices, anti indices), both ascending, 1-based


class Form:
    """Bidegree-homogeneous differential form with Poly coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None) -> None:
        clean: dict[CoBasis, Poly] = {}
        degree = None
        if terms:
            for basis, coeff in terms.items():
                holo, anti = basis
                if coeff.n != n:
                    raise ValueError("ambient dimension mismatch")
                if coeff.is_zero():
                    continue
                if degree is None:
                    degree = (len(holo), len(anti))
                elif degree != (len(holo), len(anti)):
                    raise ValueError("bidegree mismatch")
                clean[(tuple(holo), tuple(anti))] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    @staticmethod
    def zero(n: int) -> "Form":
        return Form(n)

    @staticmethod
    def scalar(n: int, coeff: Poly) -> "Form":
        """A (0,0)-form; wedge identity when coeff is 1."""
        return Form(n, {((), ()): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def bidegree(self) -> tuple | None:
        """(p, q) for a nonzero form, None for the zero form."""
        if not self.terms:
            return None
        holo, anti = next(iter(self.terms))
        return (len(holo), len(anti))

    def cobases(self) -> list:
        return sorted(self.terms)

    def coefficient(self, holo: Sequence[int], anti: Sequence[int]) -> Poly:
        return self.terms.get((tuple(holo), tuple(anti)), Poly.zero(self.n))

    def coefficients(self) -> list:
        """Coefficients in ascending cobasis order (deterministic)."""
        return [self.terms[b] for b in self.cobases()]

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("ambient dimension mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.bidegree() != other.bidegree():
            raise ValueError("bidegree mismatch")
        terms = dict(self.terms)
        for basis, coeff in other.terms.items():
            s = terms.get(basis, Poly.zero(self.n)) + coeff
            if s.is_zero():
                terms.pop(basis, None)
            else:
                terms[basis] = s
        return _raw_form(self.n, terms)

    def __neg__(self) -> "Form":
        return _raw_form(self.n, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def scale(self, factor: Poly) -> "Form":
        """Multiply every coefficient by a polynomial."""
        if factor.n != self.n:
            raise ValueError("ambient dimension mismatch")
        terms = {}
        for basis, coeff in self.terms.items():
            prod = coeff * factor
            if not prod.is_zero():
                terms[basis] = prod
        return _raw_form(self.n, terms)

    def wedge(self, other: "Form") -> "Form":
        if other.n != self.n:
            raise ValueError("ambient dimension mismatch")
        acc: dict[CoBasis, Poly] = {}
        for (h1, a1), c1 in self.terms.items():
            for (h2, a2), c2 in other.terms.items():
                merged = _merge_cobasis(h1, a1, h2, a2)
                if merged is None:
                    continue
                basis, sign = merged
                contrib = c1 * c2
                if sign < 0:
                    contrib = -contrib
                s = acc.get(basis, Poly.zero(self.n)) + contrib
                if s.is_zero():
                    acc.pop(basis, None)
                else:
                    acc[basis] = s
        return _raw_form(self.n, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for holo, anti in self.cobases():
            coeff = self.terms[(holo, anti)]
            factors = [f"dz{i}" for i in holo] + [f"dzbar{i}" for i in anti]
            symbol = "∧".join(factors) if factors else "1"
            parts.append(f"({coeff.to_text()})·{symbol}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Form({self.to_text()!r}, n={self.n})"


def _raw_form(n: int, terms: dict) -> Form:
    f = Form.__new__(Form)
    object.__setattr__(f, "n", n)
    object.__setattr__(f, "terms", terms)
    return f


def _merge_sorted(u: tuple, v: tuple):
    """Merge two ascending index tuples; None on collision.

    Returns (merged, inversions) where inversions counts the transpositions
    needed to sort the concatenation u ++ v.
    """
    inv = 0
    out = []
    i = j = 0
    while i < len(u) and j < len(v):
        if u[i] == v[j]:
            return None
        if u[i] < v[j]:
            out.append(u[i])
            i += 1
        else:
            out.append(v[j])
            j += 1
            inv += len(u) - i
    out.extend(u[i:])
    out.extend(v[j:])
    return tuple(out), inv


def _merge_cobasis(h1: tuple, a1: tuple, h2: tuple, a2: tuple):
    holo = _merge_sorted(h1, h2)
    if holo is None:
        return None
    anti = _merge_sorted(a1, a2)
    if anti is None:
        return None
    # moving the dz block of the right factor past the dzbar block of the left
    swaps = holo[1] + anti[1] + len(h2) * len(a1)
    sign = -1 if swaps % 2 else 1
    return (holo[0], anti[0]), sign


def d_holo(f: Poly) -> Form:
    """∂f = sum of (∂f/∂z_i) dz_i."""
    terms = {}
    for i in range(1, f.n + 1):
        coeff = f.partial_z(i)
        if not coeff.is_zero():
            terms[((i,), ())] = coeff
    return Form(f.n, terms)


def d_antiholo(f: Poly) -> Form:
    """∂̄f = sum of (∂f/∂zbar_i) dzbar_i."""
    terms = {}
    for i in range(1, f.n + 1):
        coeff = f.partial_zbar(i)
        if not coeff.is_zero():
            terms[((), (i,))] = coeff
    return Form(f.n, terms)


def ddbar(f: Poly) -> Form:
    """∂∂̄f; the coefficient of dz_i ∧ dzbar_j is ∂²f/∂z_i∂zbar_j."""
    terms = {}
    for i in range(1, f.n + 1):
        fi = f.partial_z(i)
        if fi.is_zero():
            continue
        for j in range(1, f.n + 1):
            coeff = fi.partial_zbar(j)
            if not coeff.is_zero():
                terms[((i,), (j,))] = coeff
    return Form(f.n, terms)


def d_holo_form(form: Form) -> Form:
    """Extend ∂ to forms: differentiate coefficients and prepend dz_i."""
    acc: dict[CoBasis, Poly] = {}
    for (holo, anti), coeff in form.terms.items():
        for i in range(1, form.n + 1):
            partial = coeff.partial_z(i)
            if partial.is_zero() or i in holo:
                continue
            merged = _merge_sorted((i,), holo)
            new_holo, inv = merged
            sign = -1 if inv % 2 else 1
            contrib = partial if sign > 0 else -partial
            basis = (new_holo, anti)
            s = acc.get(basis, Poly.zero(form.n)) + contrib
            if s.is_zero():
                acc.pop(basis, None)
            else:
                acc[basis] = s
    return _raw_form(form.n, acc)


def d_antiholo_form(form: Form) -> Form:
    """Extend ∂̄ to forms: differentiate coefficients and prepend dzbar_i."""
    acc: dict[CoBasis, Poly] = {}
    for (holo, anti), coeff in form.terms.items():
        for i in range(1, form.n + 1):
            partial = coeff.partial_zbar(i)
            if partial.is_zero() or i in anti:
                continue
            merged = _merge_sorted((i,), anti)
            new_anti, inv = merged
            swaps = inv + len(holo)  # dzbar_i passes the whole dz block
            sign = -1 if swaps % 2 else 1
            contrib = partial if sign > 0 else -partial
            basis = (holo, new_anti)
            s = acc.get(basis, Poly.zero(form.n)) + contrib
            if s.is_zero():
                acc.pop(basis, None)
            else:
                acc[basis] = s
    return _raw_form(form.n, acc)


def wedge_many(forms: Iterable[Form]) -> Form:
    out = None
    for f in forms:
        out = f if out is None else out.wedge(f)
    if out is None:
        raise ValueError("empty wedge product")
    return out


def wedge_power(form: Form, k: int) -> Form:
    """k-fold wedge power; k = 0 gives the scalar (0,0)-form 1."""
    if k < 0:
        raise ValueError("negative exponent")
    out = Form.scalar(form.n, Poly.one(form.n))
    base = form
    while k:
        if k & 1:
            out = out.wedge(base)
        base = base.wedge(base) if k > 1 else base
        k >>= 1
    return out


def levi_determinants(r: Poly, q: int, multipliers: Sequence[Poly] = ()) -> list:
    """Coefficients of ∂f_1∧..∧∂f_j∧∂r∧∂̄r∧(∂∂̄r)^(n-q-j).

    These are the generalized Levi determinants contributed by a tuple of
    multipliers (f_1..f_j); the empty tuple gives the base determinants used
    in the first step.  The combinatorial factor from the wedge power is kept
    exactly as computed.
    """
    n = r.n
    if not 1 <= q <= n - 1:
        raise ValueError("q out of range")
    j = len(multipliers)
    if j > n - q:
        raise ValueError("tuple too long for level q")
    factors = [d_holo(f) for f in multipliers]
    factors.append(d_holo(r))
    factors.append(d_antiholo(r))
    factors.append(wedge_power(ddbar(r), n - q - j))
    return wedge_many(factors).coefficients()
