"""Kauffman bracket, Jones polynomial and the coefficients read off from it.

Three bracket evaluators are provided.  ``kauffman_bracket`` sweeps the
crossings once, keeping for each partial state only how the open arc ends are
paired up; it is the one used everywhere else.  ``bracket_state_sum`` walks all
``2^c`` states and ``bracket_skein`` recurses on smoothings with memoization;
both exist to cross-check the first.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from ._uf import UnionFind
from .diagram import LinkDiagram, Orientation, count_components, writhe
from .laurent import QUARTER, LaurentPoly

DEFAULT_CAP = 26

# loop value d = -A^2 - A^-2
LOOP = LaurentPoly.from_A({2: -1, -2: -1})


class CapExceeded(RuntimeError):
    """The diagram has more crossings than the configured state-sum cap."""


def state_sum_cap() -> int:
    env = os.environ.get("TANGLEBOUNDS_CAP")
    return int(env) if env else DEFAULT_CAP


def _check_cap(d: LinkDiagram, cap: int | None):
    cap = state_sum_cap() if cap is None else cap
    if len(d.crossings) > cap:
        raise CapExceeded(f"{len(d.crossings)} crossings exceeds the state-sum cap of {cap}")


def _smoothing_pairs(arcs, use_a: bool):
    a, b, c, d = arcs
    return ((a, b), (c, d)) if use_a else ((a, d), (b, c))


def _assemble(terms: dict[tuple[int, int], int], free_loops: int) -> LaurentPoly:
    """Sum of ``coeff * A^e * d^(loops + free_loops - 1)`` over ``(e, loops)``."""
    by_loops: dict[int, dict[int, int]] = {}
    for (e, loops), v in terms.items():
        row = by_loops.setdefault(loops + free_loops, {})
        row[e] = row.get(e, 0) + v
    total = LaurentPoly()
    for loops, row in by_loops.items():
        if loops < 1:
            raise ValueError("state with no circles")
        total = total + LaurentPoly.from_A(row) * LOOP ** (loops - 1)
    return total


# ---------------------------------------------------------------------------
# production evaluator: sweep with a frontier of open arc pairings


def _crossing_order(arcs) -> list[int]:
    """Greedy order that keeps few arcs half-processed."""
    n = len(arcs)
    done = [False] * n
    seen: set[int] = set()
    order = []
    for _ in range(n):
        best, best_key = None, None
        for ci in range(n):
            if done[ci]:
                continue
            closes = sum(1 for x in arcs[ci] if x in seen)
            key = (closes, -ci)
            if best_key is None or key > best_key:
                best, best_key = ci, key
        done[best] = True
        order.append(best)
        seen.update(arcs[best])
    return order


def _advance(matching: frozenset, arcs, use_a: bool):
    """Apply one smoothing to a frontier pairing.

    Returns the new pairing and the number of circles closed.
    """
    partner = {}
    for u, v in matching:
        partner[u] = v
        partner[v] = u
    edges = list(_smoothing_pairs(arcs, use_a))
    here = set(arcs)
    for x in here:
        if x in partner:
            y = partner[x]
            if y not in here or x < y:
                edges.append((x, y))
    uf = UnionFind()
    deg: dict[int, int] = {}
    for u, v in edges:
        uf.union(u, v)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    groups: dict[int, list[int]] = {}
    edge_count: dict[int, int] = {}
    for x in deg:
        groups.setdefault(uf.find(x), []).append(x)
    for u, _ in edges:
        r = uf.find(u)
        edge_count[r] = edge_count.get(r, 0) + 1
    closed = 0
    new = {p for p in matching if p[0] not in deg and p[1] not in deg}
    for r, nodes in groups.items():
        if edge_count[r] == len(nodes):
            closed += 1
        else:
            ends = sorted(x for x in nodes if deg[x] == 1)
            new.add((ends[0], ends[1]))
    return frozenset(new), closed


def kauffman_bracket(d: LinkDiagram, cap: int | None = None) -> LaurentPoly:
    """Bracket in A, normalized so a single loop evaluates to 1."""
    _check_cap(d, cap)
    arcs = d.arcs
    if not arcs:
        if d.free_loops == 0:
            raise ValueError("empty diagram")
        return LOOP ** (d.free_loops - 1)
    # frontier pairing -> {(A exponent, closed circles): count}
    layer: dict[frozenset, dict[tuple[int, int], int]] = {frozenset(): {(0, 0): 1}}
    for ci in _crossing_order(arcs):
        nxt: dict[frozenset, dict[tuple[int, int], int]] = {}
        for matching, terms in layer.items():
            for use_a, de in ((True, 1), (False, -1)):
                m2, closed = _advance(matching, arcs[ci], use_a)
                bucket = nxt.setdefault(m2, {})
                for (e, loops), v in terms.items():
                    k = (e + de, loops + closed)
                    bucket[k] = bucket.get(k, 0) + v
        layer = nxt
    (terms,) = layer.values()
    return _assemble(terms, d.free_loops)


# ---------------------------------------------------------------------------
# cross-check evaluators


def state_circles(arcs, choice) -> int:
    """Circles of the state ``choice`` (True = A) on a list of crossing tuples."""
    uf = UnionFind()
    for q, use_a in zip(arcs, choice):
        for x, y in _smoothing_pairs(q, use_a):
            uf.union(x, y)
    return uf.count()


def bracket_state_sum(d: LinkDiagram, cap: int | None = None) -> LaurentPoly:
    """Enumerate every Kauffman state explicitly."""
    _check_cap(d, cap)
    arcs = d.arcs
    if not arcs:
        return kauffman_bracket(d, cap)
    terms: dict[tuple[int, int], int] = {}
    for choice in product((True, False), repeat=len(arcs)):
        na = sum(choice)
        k = (2 * na - len(arcs), state_circles(arcs, choice))
        terms[k] = terms.get(k, 0) + 1
    return _assemble(terms, d.free_loops)


def _canonical(crossings: tuple) -> tuple:
    m: dict[int, int] = {}
    out = []
    for q in crossings:
        row = []
        for x in q:
            if x not in m:
                m[x] = len(m)
            row.append(m[x])
        out.append(tuple(row))
    return tuple(out)


@lru_cache(maxsize=None)
def _skein(crossings: tuple) -> LaurentPoly:
    if not crossings:
        return LaurentPoly.one()
    first, rest = crossings[0], crossings[1:]
    total = LaurentPoly()
    for use_a, e in ((True, 1), (False, -1)):
        loops = 0
        pairs = list(_smoothing_pairs(first, use_a))
        remaining = rest
        while pairs:
            x, y = pairs.pop(0)
            if x == y:
                loops += 1
                continue
            # arcs x and y become one arc, named x
            pairs = [tuple(x if v == y else v for v in p) for p in pairs]
            remaining = tuple(tuple(x if v == y else v for v in q) for q in remaining)
        total = total + LaurentPoly.from_A({e: 1}) * LOOP ** loops * _skein(_canonical(remaining))
    return total


def bracket_skein(d: LinkDiagram, cap: int | None = None) -> LaurentPoly:
    """Memoized recursion ``<X> = A <smooth_A> + A^-1 <smooth_B>``."""
    _check_cap(d, cap)
    if not d.crossings:
        return kauffman_bracket(d, cap)
    raw = _skein(_canonical(tuple(d.arcs))) * LOOP ** d.free_loops
    return raw.exact_div(LOOP)


# ---------------------------------------------------------------------------
# Jones polynomial


def jones_polynomial(d: LinkDiagram, o: Orientation | None = None, cap: int | None = None) -> LaurentPoly:
    """``(-A^3)^(-w) <d>`` with ``t = A^-4``.

    Links are computed relative to ``o`` (default: the PD traversal order).
    """
    w = writhe(d, o) if d.crossings else 0
    v = LaurentPoly.from_A({-3 * w: (-1) ** (w % 2)}) * kauffman_bracket(d, cap)
    step = QUARTER if count_components(d) % 2 else QUARTER // 2
    if any(e % QUARTER != (0 if step == QUARTER else 2) for e in v.exponents()):
        raise ArithmeticError(f"Jones exponents off the expected grid: {v}")
    return v


@dataclass(frozen=True)
class JonesSummary:
    """Extreme and next-to-extreme coefficients of a Jones polynomial.

    Degrees are in units of t.  ``beta`` and ``beta_prime`` are read at
    positions ``max_deg - 1`` and ``min_deg + 1``; a position outside
    ``[min_deg, max_deg]`` reads as 0.
    """

    max_deg: Fraction
    min_deg: Fraction
    alpha: int
    beta: int
    beta_prime: int
    alpha_prime: int
    T_L: int
    span: Fraction

    def as_dict(self) -> dict:
        return {
            "max_deg": str(self.max_deg), "min_deg": str(self.min_deg),
            "alpha": self.alpha, "beta": self.beta,
            "beta_prime": self.beta_prime, "alpha_prime": self.alpha_prime,
            "T_L": self.T_L, "span": str(self.span),
        }


def coefficient_summary(v: LaurentPoly) -> JonesSummary:
    if not v:
        raise ValueError("zero polynomial has no coefficient summary")
    n, m = v.max_exp(), v.min_exp()
    if any(e % (QUARTER // 2) for e in v.exponents()):
        raise ValueError("exponents must lie on the half-integer t grid")

    def at(e):
        return v[e] if m <= e <= n else 0

    beta, beta_prime = at(n - QUARTER), at(m + QUARTER)
    return JonesSummary(
        max_deg=Fraction(n, QUARTER), min_deg=Fraction(m, QUARTER),
        alpha=v[n], beta=beta, beta_prime=beta_prime, alpha_prime=v[m],
        T_L=abs(beta) + abs(beta_prime), span=Fraction(n - m, QUARTER),
    )


def torus_jones(p: int, q: int) -> LaurentPoly:
    """Closed form for the (p, q) torus knot, divided out exactly."""
    if p < 2 or q < 2:
        raise ValueError("torus parameters must be at least 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link, gcd = {math.gcd(p, q)}")
    num = LaurentPoly.from_t({0: 1, p + 1: -1, q + 1: -1, p + q: 1})
    den = LaurentPoly.from_t({0: 1, 2: -1})
    quo, rem = num.divmod(den)
    if rem:
        raise ArithmeticError(f"torus Jones division left remainder {rem}")
    return quo.shift(QUARTER * (p - 1) * (q - 1) // 2)
