"""Univariate polynomials over a commutative ring, truncated series in 1/t,
and a small sparse multivariate polynomial type for symbolic identities.

Coefficients may be any ring values supporting ``+ - *`` and comparison with
``0``: Python numbers, :class:`~frobcover.algebra.AlgebraElement`, or
:class:`MPoly`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from numbers import Number


def _zero_like(x):
    return x * 0


def _invert(c):
    if isinstance(c, bool):
        c = int(c)
    if isinstance(c, int):
        if c == 0:
            raise ZeroDivisionError
        return Fraction(1, c)
    if isinstance(c, Fraction):
        if c == 0:
            raise ZeroDivisionError
        return 1 / c
    if isinstance(c, complex) or isinstance(c, float):
        if c == 0:
            raise ZeroDivisionError
        return 1 / c
    if hasattr(c, "inverse"):
        return c.inverse()
    raise TypeError(f"cannot invert {type(c).__name__}")


class Polynomial:
    """Coefficients low to high; trailing zeros stripped."""

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs, zero=None):
        coeffs = list(coeffs)
        if zero is None:
            if not coeffs:
                zero = 0
            else:
                zero = _zero_like(coeffs[0])
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.zero = zero

    @classmethod
    def monomial(cls, k, coeff=1, zero=None):
        z = _zero_like(coeff) if zero is None else zero
        return cls([z] * k + [coeff], zero=z)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.zero

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other], zero=self.zero)

    def __add__(self, other):
        other = self._lift(other)
        z = self.zero
        return Polynomial([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=z)], zero=z)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-a for a in self.coeffs], zero=self.zero)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([a * other for a in self.coeffs], zero=self.zero)
        if not self.coeffs or not other.coeffs:
            return Polynomial([], zero=self.zero)
        out = [self.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, zero=self.zero)

    def __rmul__(self, other):
        return Polynomial([other * a for a in self.coeffs], zero=self.zero)

    def __pow__(self, k):
        result = Polynomial([self.zero + 1], zero=self.zero)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = self._lift(other)
        z = self.zero
        return all(a == b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=z))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = self.zero
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose(self, q):
        """``self(q(t))``."""
        acc = Polynomial([], zero=q.zero)
        for a in reversed(self.coeffs):
            acc = acc * q + Polynomial([a], zero=q.zero)
        return acc

    def derivative(self):
        return Polynomial([a * k for k, a in enumerate(self.coeffs)][1:], zero=self.zero)

    def map_coeffs(self, fn, zero=None):
        return Polynomial([fn(a) for a in self.coeffs], zero=fn(self.zero) if zero is None else zero)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = [f"{a!r}*t^{k}" for k, a in enumerate(self.coeffs) if not a == 0]
        return "Polynomial(" + " + ".join(terms) + ")"


class TruncatedSeries:
    """``sum_{q=0}^{N} coeffs[q] / t^(q+1)``; terms beyond order N are dropped."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        coeffs = list(coeffs)[: order + 1]
        if len(coeffs) < order + 1:
            z = _zero_like(coeffs[0]) if coeffs else 0
            coeffs += [z] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def first_difference(self, other):
        """Index of the first differing coefficient up to the shared order, or ``None``."""
        for q, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if not a == b:
                return q
        return None

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.first_difference(other) is None

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"


def series_log_derivative(p: Polynomial, order: int) -> TruncatedSeries:
    """Expand ``p'(t)/p(t)`` in powers of ``1/t`` up to ``1/t^(order+1)``."""
    if p.is_zero():
        raise ValueError("non-invertible leading coefficient")
    n = p.degree
    lead = p.leading
    try:
        inv = _invert(lead)
    except (ZeroDivisionError, TypeError):
        raise ValueError("non-invertible leading coefficient") from None
    # With u = 1/t: p = t^n D(u), p' = t^(n-1) N(u), so p'/p = u N(u)/D(u).
    D = [p.coeff(n - j) for j in range(n + 1)]
    Nu = [p.coeff(n - j) * (n - j) for j in range(n)]
    z = p.zero
    Q = []
    for q in range(order + 1):
        acc = Nu[q] if q < len(Nu) else z
        for j in range(1, min(q, n) + 1):
            acc = acc - D[j] * Q[q - j]
        Q.append(acc * inv)
    return TruncatedSeries(Q, order)


class MPoly:
    """Sparse multivariate polynomial over the rationals.

    ``terms`` maps exponent tuples (length ``nvars``) to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def variables(cls, nvars):
        return [cls.var(i, nvars) for i in range(nvars)]

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, Number):
            return MPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MPoly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MPoly(self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MPoly.const(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def inverse(self):
        if not self.is_constant() or not self.terms:
            raise ZeroDivisionError("only nonzero constants are invertible")
        return MPoly.const(self.nvars, 1 / next(iter(self.terms.values())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"v{i}^{k}" if k > 1 else f"v{i}" for i, k in enumerate(e) if k)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
