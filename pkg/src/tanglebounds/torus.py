"""Continued fractions and Teragaito's crosscap numbers of torus knots."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .jones import coefficient_summary, torus_jones


def continued_fraction(p: int, q: int) -> list[int]:
    """Terms ``[a_0, ..., a_n]`` of p/q with ``a_i > 0`` for i >= 1 and ``a_n > 1``."""
    if p < 0 or q < 1:
        raise ValueError("need p >= 0 and q >= 1")
    if math.gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not in lowest terms")
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    if len(terms) > 1 and terms[-1] == 1:
        terms[-2] += 1
        terms.pop()
    return terms


def evaluate_cf(terms) -> Fraction:
    x = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        x = a + 1 / x
    return x


def b_sequence(terms) -> list[int]:
    """``b_0 = a_0``; then ``b_i = 0`` exactly when ``b_{i-1} = a_{i-1}`` and
    ``b_0 + ... + b_{i-1}`` is even, and ``b_i = a_i`` otherwise."""
    b = [terms[0]]
    for i in range(1, len(terms)):
        if b[i - 1] == terms[i - 1] and sum(b) % 2 == 0:
            b.append(0)
        else:
            b.append(terms[i])
    return b


def N(p: int, q: int) -> int:
    """Half the sum of the whole b-sequence of p/q, b_0 included."""
    total = sum(b_sequence(continued_fraction(p, q)))
    if total % 2:
        raise ArithmeticError(f"N({p},{q}) = {total}/2 is not an integer")
    return total // 2


def crosscap_torus(p: int, q: int) -> int:
    if p < 2 or q < 2:
        raise ValueError("torus parameters must be at least 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link, not a knot")
    if (p * q) % 2 == 0:
        if p % 2:
            raise ValueError(f"even type expects the even parameter first: use T({q},{p}), which is the same knot")
        return N(p, q)
    x = next(x for x in range(1, p) if (x * q) % p == p - 1)
    return N(p * q - 1, p * p) if x % 2 == 0 else N(p * q + 1, p * p)


@dataclass
class TorusRow:
    q: int
    k: int
    p: int
    C: int
    T_L: int
    alpha: int
    beta: int
    beta_prime: int
    alpha_prime: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("q", "k", "p", "C", "T_L", "alpha", "beta", "beta_prime", "alpha_prime")}


def family_part_a(q: int, k_max: int, k_min: int = 1) -> list[TorusRow]:
    """Torus knots T(2 + 2qk, q) for k in [k_min, k_max]."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and at least 3")
    rows = []
    for k in range(k_min, k_max + 1):
        p = 2 + 2 * q * k
        s = coefficient_summary(torus_jones(p, q))
        row = TorusRow(q, k, p, crosscap_torus(p, q), s.T_L, s.alpha, s.beta, s.beta_prime, s.alpha_prime)
        if row.C != k + 1:
            row.problems.append(f"C = {row.C}, expected {k + 1}")
        if row.T_L > 2:
            row.problems.append(f"T_L = {row.T_L} > 2")
        rows.append(row)
    return rows
