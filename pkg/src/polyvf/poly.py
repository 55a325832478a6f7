"""Exact sparse multivariate polynomials over the rationals.

A polynomial in n variables is stored as a dictionary mapping exponent
tuples to nonzero ``Fraction`` coefficients:

    x^2*y + 3  in 2 variables  ->  {(2, 1): Fraction(1), (0, 0): Fraction(3)}

Monomials ARE plain exponent tuples of length n.  The zero polynomial is the
empty dictionary, and every constructor strips zero coefficients, so equality
of polynomials is equality of their term maps.  All arithmetic is exact; no
floating point enters anywhere.

Term iteration and printing use graded lexicographic order: higher total
degree first, ties broken lexicographically with x1 > x2 > ... > xn.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from . import linalg
from .errors import DimensionMismatch, NotClosed

Scalar = Union[int, Fraction]
Monomial = tuple  # exponent tuple, one nonnegative int per variable

#: Degree of the zero polynomial; compares below every integer degree.
NEG_INFINITY = float("-inf")


def monomial_degree(mono: Monomial) -> int:
    return sum(mono)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    """Exponent tuple of x^b / x^a; assumes a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def grlex_key(mono: Monomial):
    """Sort key for graded lexicographic order (ascending)."""
    return (sum(mono), mono)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent tuples of total degree exactly d, grlex-sorted."""
    if d < 0:
        return []
    if n == 1:
        return [(d,)]
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, n)
    out.sort()
    return out


def monomials_up_to(n: int, d: int) -> list[Monomial]:
    """All exponent tuples of total degree at most d, grlex-sorted."""
    out = []
    for k in range(max(d, -1) + 1):
        out.extend(monomials_of_degree(n, k))
    return out


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Union[Mapping, Iterable] = ()):
        if n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise DimensionMismatch(
                    f"monomial {mono} has {len(mono)} exponents, expected {n}"
                )
            if any(e < 0 or not isinstance(e, int) for e in mono):
                raise ValueError(f"bad exponent tuple {mono}")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
                if clean[mono] == 0:
                    del clean[mono]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def _make(cls, n: int, terms: dict) -> "Poly":
        """Internal constructor; ``terms`` must already be canonical."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls._make(n, {})

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls.constant(n, 1)

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "Poly":
        value = Fraction(value)
        if value == 0:
            return cls._make(n, {})
        return cls._make(n, {(0,) * n: value})

    @classmethod
    def variable(cls, n: int, i: int) -> "Poly":
        """The coordinate polynomial x_{i+1} (0-based index i)."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        mono = tuple(1 if j == i else 0 for j in range(n))
        return cls._make(n, {mono: Fraction(1)})

    @classmethod
    def from_monomial(cls, n: int, mono: Monomial, coeff: Scalar = 1) -> "Poly":
        return cls(n, {tuple(mono): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """Copy of the term map."""
        return dict(self._terms)

    def sorted_terms(self, reverse: bool = True) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order (descending by default)."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]),
                      reverse=reverse)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(monomial_degree(m) == 0 for m in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises otherwise."""
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        return self._terms.get((0,) * self.n, Fraction(0))

    @property
    def degree(self):
        """Total degree; NEG_INFINITY for the zero polynomial."""
        if not self._terms:
            return NEG_INFINITY
        return max(monomial_degree(m) for m in self._terms)

    def uses_variable(self, i: int) -> bool:
        return any(m[i] > 0 for m in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Poly[{self.n}]({self.to_text()})"

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.n != self.n:
                raise DimensionMismatch(
                    f"cannot combine polynomials in {self.n} and {other.n} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.n, other)
        return None

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = out.get(mono, Fraction(0)) + coeff
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return Poly._make(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._make(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = monomial_mul(ma, mb)
                s = out.get(mono, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return Poly._make(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus ----------------------------------------------------------

    def partial(self, i: int) -> "Poly":
        """Formal partial derivative with respect to x_{i+1} (0-based i)."""
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for n={self.n}")
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            if e == 0:
                continue
            lowered = mono[:i] + (e - 1,) + mono[i + 1:]
            out[lowered] = out.get(lowered, Fraction(0)) + coeff * e
        return Poly._make(self.n, {m: c for m, c in out.items() if c != 0})

    def integrate(self, i: int) -> "Poly":
        """Monomial-wise antiderivative in x_{i+1}, zero integration constant."""
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for n={self.n}")
        out = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            raised = mono[:i] + (e + 1,) + mono[i + 1:]
            out[raised] = coeff / (e + 1)
        return Poly._make(self.n, out)

    def compose(self, maps: Sequence["Poly"]) -> "Poly":
        """Substitute ``maps[i]`` for x_{i+1}; all entries share one dimension."""
        if len(maps) != self.n:
            raise DimensionMismatch(
                f"need {self.n} substitution polynomials, got {len(maps)}"
            )
        m = maps[0].n
        for p in maps:
            if p.n != m:
                raise DimensionMismatch("substitution polynomials disagree on dimension")
        powers: list[dict[int, Poly]] = [{0: Poly.one(m)} for _ in range(self.n)]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            top = max(cache)
            while top < e:
                cache[top + 1] = cache[top] * maps[i]
                top += 1
            return cache[e]

        total = Poly.zero(m)
        for mono, coeff in self._terms.items():
            term = Poly.constant(m, coeff)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.n:
            raise DimensionMismatch(f"need {self.n} coordinates, got {len(point)}")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in zip(vals, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    def homogeneous_part(self, d: int) -> "Poly":
        """The sum of terms of total degree exactly d."""
        return Poly._make(
            self.n, {m: c for m, c in self._terms.items() if monomial_degree(m) == d}
        )

    # -- printing ----------------------------------------------------------

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        """Canonical text form, terms in descending graded lex order.

        Output re-parses to an equal polynomial under the CLI grammar.
        """
        if names is None:
            names = [f"x{i + 1}" for i in range(self.n)]
        if not self._terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def divides(f: Poly, g: Poly) -> Optional[Poly]:
    """Quotient q with g = q*f, or None when f does not divide g.

    Solved as an exact linear system on the coefficients of q over the
    monomials of degree at most deg g - deg f; no monomial order is chosen.
    """
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.n != g.n:
        raise DimensionMismatch("dividend and divisor disagree on dimension")
    if g.is_zero:
        return Poly.zero(f.n)
    bound = g.degree - f.degree
    if bound < 0:
        return None
    candidates = monomials_up_to(f.n, bound)
    col_of = {m: j for j, m in enumerate(candidates)}
    rows: dict[Monomial, int] = {}
    for fm in f._terms:
        for qm in candidates:
            rows.setdefault(monomial_mul(fm, qm), len(rows))
    for gm in g._terms:
        rows.setdefault(gm, len(rows))
    a = [[Fraction(0)] * len(candidates) for _ in range(len(rows))]
    b = [Fraction(0)] * len(rows)
    for fm, fc in f._terms.items():
        for qm in candidates:
            a[rows[monomial_mul(fm, qm)]][col_of[qm]] += fc
    for gm, gc in g._terms.items():
        b[rows[gm]] = gc
    solution = linalg.solve(a, b)
    if solution is None:
        return None
    return Poly(f.n, {m: c for m, c in zip(candidates, solution)})


def potential_of_closed_form(components: Sequence[Poly]) -> Poly:
    """A polynomial f with grad f equal to the given closed tuple.

    Checks the cross-partial symmetry first and raises ``NotClosed`` with a
    witness index pair when it fails.  The result has zero constant term:
    integrate the first component in x1, correct the remainder, repeat.
    """
    components = list(components)
    if not components:
        raise ValueError("empty component list")
    n = components[0].n
    if len(components) != n:
        raise DimensionMismatch(f"need {n} components, got {len(components)}")
    for h in components:
        if h.n != n:
            raise DimensionMismatch("components disagree on dimension")
    for i in range(n):
        for j in range(i + 1, n):
            if components[i].partial(j) != components[j].partial(i):
                raise NotClosed((i, j))
    f = Poly.zero(n)
    for i in range(n):
        residue = components[i] - f.partial(i)
        # closedness makes the residue free of x1..xi at this stage
        f = f + residue.integrate(i)
    return f
