"""Exact scalars and polynomials in z1..zn and their formal conjugates.

Everything happens in the ring Q(i)[z1..zn, zbar1..zbarn] where the barred
variables are independent indeterminates.  Conjugation swaps the two variable
blocks and conjugates coefficients; a polynomial is real-valued exactly when
it is fixed by that involution.  Monomials are exponent tuples of length 2n
(z block first), compared in graded reverse lexicographic order with
z1 > ... > zn > zbar1 > ... > zbarn.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union["GaussianRational", Fraction, int]

_FRAC_ONE = Fraction(1)
_FRAC_ZERO = Fraction(0)


class GaussianRational:
    """Complex number re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Fraction | int = 0) -> None:
        if isinstance(re, GaussianRational):
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im + Fraction(im))
            return
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other: Scalar) -> "GaussianRational":
        o = _try_gr(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re + o.re)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> "GaussianRational":
        o = _try_gr(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re - o.re)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        o = _try_gr(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        o = _try_gr(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        o = _try_gr(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            if not o.re:
                raise ZeroDivisionError("division by zero GaussianRational")
            return GaussianRational(self.re / o.re)
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * o.re + self.im * o.im) / den,
                                (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        o = _try_gr(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            raise ValueError("negative exponent")
        out = GR_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def to_text(self) -> str:
        """Canonical literal, e.g. '3/2', '-i', '1/2-3i'."""
        if self.is_zero():
            return "0"
        if not self.im:
            return _frac_text(self.re)
        imag = _imag_text(self.im)
        if not self.re:
            return imag
        sep = "+" if self.im > 0 else "-"
        return _frac_text(self.re) + sep + _imag_text(abs(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


def _as_gr(value: Scalar) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


def _try_gr(value) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


def _frac_text(q: Fraction) -> str:
    return str(q)


def _imag_text(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return _frac_text(q) + "i"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# Monomials: exponent tuples of length 2n, z block then zbar block.

Monomial = tuple

_KEY_CACHE: dict = {}

def monomial_key(m: Monomial):
    """Sort key realizing degrevlex; larger key means larger monomial."""
    k = _KEY_CACHE.get(m)
    if k is None:
        k = (sum(m), tuple(-e for e in reversed(m)))
        _KEY_CACHE[m] = k
    return k


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    # caller guarantees a | b
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_conjugate(m: Monomial) -> Monomial:
    half = len(m) // 2
    return m[half:] + m[:half]


def variable_name(slot: int, n: int) -> str:
    return f"z{slot + 1}" if slot < n else f"zbar{slot - n + 1}"


def monomial_text(m: Monomial, n: int) -> str:
    parts = []
    for slot, e in enumerate(m):
        if not e:
            continue
        name = variable_name(slot, n)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


# ---------------------------------------------------------------------------


class Poly:
    """Polynomial in Q(i)[z1..zn, zbar1..zbarn], stored canonically.

    The term map never holds zero coefficients, so structural equality is
    mathematical equality.  Instances are treated as immutable.
    """

    __slots__ = ("n", "terms", "_lead")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        clean: dict[Monomial, GaussianRational] = {}
        if terms:
            width = 2 * n
            for mono, coeff in terms.items():
                if len(mono) != width:
                    raise ValueError("ambient dimension mismatch")
                c = _as_gr(coeff)
                if mono in clean:
                    c = clean[mono] + c
                if c.is_zero():
                    clean.pop(mono, None)
                else:
                    clean[mono] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Poly":
        return Poly(n)

    @staticmethod
    def constant(n: int, value: Scalar) -> "Poly":
        return Poly(n, {(0,) * (2 * n): _as_gr(value)})

    @staticmethod
    def one(n: int) -> "Poly":
        return Poly.constant(n, 1)

    @staticmethod
    def z(n: int, i: int) -> "Poly":
        _check_index(i, n)
        exps = [0] * (2 * n)
        exps[i - 1] = 1
        return Poly(n, {tuple(exps): GR_ONE})

    @staticmethod
    def zbar(n: int, i: int) -> "Poly":
        _check_index(i, n)
        exps = [0] * (2 * n)
        exps[n + i - 1] = 1
        return Poly(n, {tuple(exps): GR_ONE})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in o.terms.items():
            s = terms.get(mono, GR_ZERO) + c
            if s.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return self._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if len(self.terms) > len(o.terms):
            self, o = o, self
        acc: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                mono = monomial_mul(m1, m2)
                s = acc.get(mono, GR_ZERO) + c1 * c2
                if s.is_zero():
                    acc.pop(mono, None)
                else:
                    acc[mono] = s
        return self._raw(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        out = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("ambient dimension mismatch")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Poly.constant(self.n, other)
        return NotImplemented

    @staticmethod
    def _raw(n: int, terms: dict) -> "Poly":
        p = Poly.__new__(Poly)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "terms", terms)
        return p

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(monomial_degree(m) == 0 for m in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((0,) * (2 * self.n), GR_ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def sorted_terms(self) -> list:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        try:
            return self._lead
        except AttributeError:
            lead = max(self.terms, key=monomial_key)
            object.__setattr__(self, "_lead", lead)
            return lead

    def leading_coefficient(self) -> GaussianRational:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == GR_ONE:
            return self
        inv = GR_ONE / lc
        return self._raw(self.n, {m: c * inv for m, c in self.terms.items()})

    # -- conjugation and reality -------------------------------------------

    def conjugate(self) -> "Poly":
        return self._raw(self.n, {monomial_conjugate(m): c.conjugate()
                                  for m, c in self.terms.items()})

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- calculus ------------------------------------------------------------

    def partial_z(self, i: int) -> "Poly":
        _check_index(i, self.n)
        return self._partial(i - 1)

    def partial_zbar(self, i: int) -> "Poly":
        _check_index(i, self.n)
        return self._partial(self.n + i - 1)

    def _partial(self, slot: int) -> "Poly":
        acc: dict[Monomial, GaussianRational] = {}
        for mono, c in self.terms.items():
            e = mono[slot]
            if not e:
                continue
            lowered = mono[:slot] + (e - 1,) + mono[slot + 1:]
            s = acc.get(lowered, GR_ZERO) + c * e
            if s.is_zero():
                acc.pop(lowered, None)
            else:
                acc[lowered] = s
        return self._raw(self.n, acc)

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, point: "Point") -> GaussianRational:
        if point.n != self.n:
            raise ValueError("ambient dimension mismatch")
        total = GR_ZERO
        for mono, c in self.terms.items():
            val = c
            for i in range(self.n):
                e = mono[i]
                if e:
                    val = val * point.coordinates[i] ** e
                e = mono[self.n + i]
                if e:
                    val = val * point.coordinates[i].conjugate() ** e
            total = total + val
        return total

    # -- text ------------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical rendering: terms in descending monomial order."""
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            neg = coeff.re < 0 or (not coeff.re and coeff.im < 0)
            mag = -coeff if neg else coeff
            body = _term_text(mag, mono, self.n)
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r}, n={self.n})"


def _term_text(mag: GaussianRational, mono: Monomial, n: int) -> str:
    mono_str = monomial_text(mono, n)
    if not mono_str:
        if mag.re and mag.im:
            return "(" + mag.to_text() + ")"
        return mag.to_text()
    if mag == GR_ONE:
        return mono_str
    if mag.re and mag.im:
        return "(" + mag.to_text() + ")*" + mono_str
    return mag.to_text() + "*" + mono_str


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError("variable index out of range")


@dataclass(frozen=True)
class Point:
    """Point of C^n with exact Gaussian-rational coordinates."""

    coordinates: tuple

    def __post_init__(self):
        object.__setattr__(self, "coordinates",
                           tuple(_as_gr(c) for c in self.coordinates))
        if not self.coordinates:
            raise ValueError("ambient dimension must be at least 1")

    @property
    def n(self) -> int:
        return len(self.coordinates)

    @staticmethod
    def origin(n: int) -> "Point":
        return Point((GR_ZERO,) * n)

    def to_texts(self) -> list[str]:
        return [c.to_text() for c in self.coordinates]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_texts()) + ")"
