"""Scalar backends.

Two fields are supported: exact rationals (``fractions.Fraction``) and
complex doubles compared with an absolute tolerance.  Algebras carry one of
these objects and route every equality test through it.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Number

DEFAULT_EPSILON = 1e-9


# shared instances for the integers that dominate enumerations
_SMALL_INTS = {i: Fraction(i) for i in range(-64, 65)}


class RationalField:
    name = "rational"
    exact = True

    def coerce(self, x):
        kind = type(x)
        if kind is Fraction:
            return x
        if kind is int:
            small = _SMALL_INTS.get(x)
            return small if small is not None else Fraction(x)
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x.strip())
        if isinstance(x, float):
            raise TypeError(f"refusing to coerce float {x!r} to an exact rational")
        if isinstance(x, complex):
            raise TypeError(f"complex value {x!r} in a rational algebra")
        return Fraction(x)

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def div(self, a, b):
        return Fraction(a) / Fraction(b)

    def format(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        return self.coerce(s)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class ComplexField:
    """Complex doubles; ``a == b`` iff ``|a - b| <= epsilon`` (absolute)."""

    name = "complex"
    exact = False

    def __init__(self, epsilon: float = DEFAULT_EPSILON):
        if epsilon < 0:
            raise ValueError("epsilon must be non-negative")
        self.epsilon = float(epsilon)

    def coerce(self, x):
        if isinstance(x, str):
            s = x.strip().replace(" ", "").replace("i", "j")
            if "/" in s and "j" not in s:
                return complex(float(Fraction(s)))
            return complex(s)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            return complex(float(x[0]), float(x[1]))
        if isinstance(x, Number):
            return complex(x)
        raise TypeError(f"cannot coerce {x!r} to complex")

    def eq(self, a, b) -> bool:
        return abs(complex(a) - complex(b)) <= self.epsilon

    def is_zero(self, a) -> bool:
        return abs(complex(a)) <= self.epsilon

    def div(self, a, b):
        return complex(a) / complex(b)

    def format(self, x) -> str:
        x = complex(x)
        return repr(x)

    def parse(self, s):
        return self.coerce(s)

    def __eq__(self, other):
        return isinstance(other, ComplexField) and other.epsilon == self.epsilon

    def __hash__(self):
        return hash(("complex", self.epsilon))

    def __repr__(self):
        return f"ComplexField(epsilon={self.epsilon!r})"


QQ = RationalField()


def field_from_name(name: str, epsilon: float = DEFAULT_EPSILON):
    if name == "rational":
        return QQ
    if name == "complex":
        return ComplexField(epsilon)
    raise ValueError(f"unknown scalar backend {name!r}")
