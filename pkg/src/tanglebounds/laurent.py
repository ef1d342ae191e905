"""Exact integer Laurent polynomials.

Exponents are stored as integers counting quarter-units of ``t``.  The Kauffman
bracket variable satisfies ``A = t^(-1/4)``, so ``A^e`` is stored under key
``-e``; Jones polynomials of knots land on keys divisible by 4.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

QUARTER = 4


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if v:
                c[e] = c.get(e, 0) + v
                if not c[e]:
                    del c[e]
        self._c = c

    # construction helpers

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def from_t(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        """Build from integer powers of t."""
        return cls({QUARTER * e: v for e, v in coeffs.items()})

    @classmethod
    def from_A(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        """Build from integer powers of the bracket variable A."""
        return cls({-e: v for e, v in coeffs.items()})

    def as_A(self) -> dict[int, int]:
        return {-e: v for e, v in self._c.items()}

    def as_t(self) -> dict[Fraction, int]:
        return {Fraction(e, QUARTER): v for e, v in self._c.items()}

    # mapping-like access

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def items(self):
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    # ring operations

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have negative powers")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({e * n: v ** -n})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the monomial of exponent k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division ordered from the highest exponent down.

        The remainder has all exponents below
        ``min_exp(self) + (max_exp(divisor) - min_exp(divisor))``.
        """
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        lead_e = divisor.max_exp()
        lead_c = divisor[lead_e]
        span = lead_e - divisor.min_exp()
        rem = dict(self._c)
        quo: dict[int, int] = {}
        floor = (min(rem) if rem else 0) + span
        while rem:
            top = max(rem)
            if top < floor:
                break
            c = rem[top]
            if c % lead_c:
                break
            q = c // lead_c
            shift = top - lead_e
            quo[shift] = quo.get(shift, 0) + q
            for e, v in divisor._c.items():
                k = e + shift
                rem[k] = rem.get(k, 0) - q * v
                if not rem[k]:
                    del rem[k]
        return LaurentPoly(quo), LaurentPoly(rem)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    # formatting

    def format(self, var: str = "t") -> str:
        """Descending ``c*t^e`` terms; ``var='A'`` prints bracket exponents."""
        if not self._c:
            return "0"
        if var == "A":
            terms = sorted(self.as_A().items(), reverse=True)
            return " + ".join(f"{v}*A^{_fmt_exp(Fraction(e))}" for e, v in terms)
        terms = sorted(self._c.items(), reverse=True)
        return " + ".join(f"{v}*{var}^{_fmt_exp(Fraction(e, QUARTER))}" for e, v in terms)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


def _fmt_exp(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of ``LaurentPoly.format`` for the ``t`` variable."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    out: dict[int, int] = {}
    for term in text.split(" + "):
        coeff, _, power = term.partition("*t^")
        power = power.strip("()")
        e = Fraction(power) * QUARTER
        if e.denominator != 1:
            raise ValueError(f"exponent off the quarter grid: {term!r}")
        out[int(e)] = out.get(int(e), 0) + int(coeff)
    return LaurentPoly(out)
