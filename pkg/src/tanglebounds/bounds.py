"""Crosscap and Jones-coefficient bounds as closed integer intervals.

Every calculator names the hypotheses it relies on and refuses to run when
the caller has not asserted them.  Intervals are clamped below at 0; the raw
endpoints are kept so the clamp can be audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

# hypothesis flags a caller may assert about a diagram or a Conway sum
ALTERNATING = "alternating"
PRIME = "prime"
NON_SPLIT = "non_split"
TWIST_REDUCED = "twist_reduced"
NOT_2P_TORUS = "not_2p_torus"
STRONG_SUMMANDS = "strongly_alternating_summands"
CLOSURE_TWIST_EQUAL = "closure_twist_equal"

HYPOTHESES = (ALTERNATING, PRIME, NON_SPLIT, TWIST_REDUCED, NOT_2P_TORUS,
              STRONG_SUMMANDS, CLOSURE_TWIST_EQUAL)

_LEE_TWIST = (ALTERNATING, PRIME, TWIST_REDUCED)
_LEE_JONES = (ALTERNATING, PRIME, NON_SPLIT, NOT_2P_TORUS)
_SUM = (NON_SPLIT, TWIST_REDUCED, STRONG_SUMMANDS)


class MissingHypothesis(ValueError):
    pass


def _need(given: Iterable[str], required: Sequence[str], source: str) -> None:
    missing = [h for h in required if h not in set(given)]
    if missing:
        raise MissingHypothesis(f"{source} needs {', '.join(missing)}")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class BoundInterval:
    source: str
    raw_lo: int
    raw_hi: int
    quantity: str = "C"
    asserted: bool = True

    @property
    def lo(self) -> int:
        return max(self.raw_lo, 0)

    @property
    def hi(self) -> int:
        return max(self.raw_hi, 0)

    @property
    def clamped(self) -> bool:
        return self.raw_lo < 0 or self.raw_hi < 0

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def as_dict(self) -> dict:
        out = {"source": self.source, "lo": self.lo, "hi": self.hi, "clamped": self.clamped}
        if self.clamped:
            out["raw"] = [self.raw_lo, self.raw_hi]
        if self.quantity != "C":
            out["quantity"] = self.quantity
        if not self.asserted:
            out["asserted"] = False
        return out


# ---------------------------------------------------------------------------
# single-diagram bounds for alternating links


def eflee_tw(tw: int, k: int, hypotheses: Iterable[str]) -> BoundInterval:
    """Crosscap bounds from the twist number of an alternating diagram."""
    _need(hypotheses, _LEE_TWIST, "lee-twist")
    if tw < 2:
        raise ValueError("needs at least two twist regions")
    return BoundInterval("lee-twist", _ceil_div(tw, 3) + 2 - k, tw + 2 - k)


def eflee_TL(T_L: int, k: int, hypotheses: Iterable[str]) -> BoundInterval:
    """Crosscap bounds from T_L for alternating links other than (2,p) torus links."""
    _need(hypotheses, _LEE_JONES, "lee-jones")
    return BoundInterval("lee-jones", _ceil_div(T_L, 3) + 2 - k, T_L + 2 - k)


# ---------------------------------------------------------------------------
# Conway sums of two tangles


def crossmain(m: int, hypotheses: Iterable[str]) -> BoundInterval:
    """Bounds from ``m``, the smaller crosscap sum over matching closures."""
    _need(hypotheses, _SUM, "pair-closures")
    return BoundInterval("pair-closures", m - 2, m + 2)


def crossmain_from_closures(numerators: Sequence[BoundInterval], denominators: Sequence[BoundInterval],
                            hypotheses: Iterable[str]) -> BoundInterval:
    """``crossmain`` when the closure crosscaps are only known up to intervals."""
    _need(hypotheses, _SUM, "pair-closures")
    if len(numerators) != 2 or len(denominators) != 2:
        raise ValueError("needs the closures of exactly two tangles")
    m_lo = min(sum(b.lo for b in numerators), sum(b.lo for b in denominators))
    m_hi = min(sum(b.hi for b in numerators), sum(b.hi for b in denominators))
    return BoundInterval("pair-closures", m_lo - 2, m_hi + 2)


def twistmain(tw: int, k: int, hypotheses: Iterable[str]) -> BoundInterval:
    _need(hypotheses, _SUM, "pair-twist")
    return BoundInterval("pair-twist", _ceil_div(tw, 3) - k, tw + 4 - k)


def cor_tltwist(T_L: int, k: int, hypotheses: Iterable[str]) -> BoundInterval:
    _need(hypotheses, _SUM, "pair-jones")
    return BoundInterval("pair-jones", _ceil_div(T_L, 6) - k, 2 * T_L + k + 8)


def cor_tltwist_equal_closures(T_L: int, k: int, hypotheses: Iterable[str]) -> BoundInterval:
    """Variant with the extra ``+2`` in the lower bound, for tangles whose
    closures keep their twist number."""
    _need(hypotheses, _SUM + (CLOSURE_TWIST_EQUAL,), "pair-jones-equal-closures")
    return BoundInterval("pair-jones-equal-closures", _ceil_div(T_L, 6) + 2 - k, 2 * T_L + k + 8)


def tl_twist_sandwich(tw: int, k: int, hypotheses: Iterable[str] = (STRONG_SUMMANDS,)) -> BoundInterval:
    """Interval for T_L itself: ``tw/2 - k - 2 <= T_L <= 2 tw``."""
    _need(hypotheses, (STRONG_SUMMANDS,), "jones-twist-sandwich")
    return BoundInterval("jones-twist-sandwich", _ceil_div(tw - 2 * k - 4, 2), 2 * tw, quantity="T_L")


def edge_loss_bound(tw: int, k: int, hypotheses: Iterable[str] = (STRONG_SUMMANDS,)) -> BoundInterval:
    """Interval for the external edge loss: ``l_ext <= tw/2 + k + 4``."""
    _need(hypotheses, (STRONG_SUMMANDS,), "external-loss")
    return BoundInterval("external-loss", 0, (tw + 2 * k + 8) // 2, quantity="l_ext")


# ---------------------------------------------------------------------------
# Conway sums of l tangles


def sum_closures(numerators: Sequence[BoundInterval], denominators: Sequence[BoundInterval],
                 hypotheses: Iterable[str]) -> BoundInterval:
    """Bounds through the closures of each of the l summands.

    The lower bound uses whichever closure the spanning surface cuts to, so
    it takes the smaller of the two per tangle.
    """
    _need(hypotheses, (NON_SPLIT, STRONG_SUMMANDS), "sum-closures")
    l = len(numerators)
    if l != len(denominators) or l < 2:
        raise ValueError("needs matching closure lists for at least two tangles")
    lo = sum(min(n.lo, d.lo) for n, d in zip(numerators, denominators)) - l
    hi = min(sum(n.hi for n in numerators) + l, sum(d.hi for d in denominators) + 2)
    return BoundInterval("sum-closures", lo, hi)


def generalized(l: int, tw: int, T_L: int, k: int, hypotheses: Iterable[str]) -> list[BoundInterval]:
    """All l-tangle bounds that the hypotheses allow.

    The twist bound is emitted twice: ``sum-twist-stated`` with the lower
    bound as displayed, and ``sum-twist-as-proved`` with the weaker lower
    bound the argument actually reaches.  Only the latter is asserted.
    """
    hypotheses = set(hypotheses)
    _need(hypotheses, _SUM, "sum")
    if l < 2:
        raise ValueError("a Conway sum has at least two tangles")
    out = [
        BoundInterval("sum-twist-stated", _ceil_div(tw, 3) + 2 - k, tw + l + 2 - k, asserted=False),
        BoundInterval("sum-twist-as-proved", _ceil_div(tw - 2 * l, 3) + 2 - k, tw + l + 2 - k),
        BoundInterval("sum-jones", _ceil_div(T_L - 2 * l, 6) + 2 - k, 2 * T_L + l + 6 + k),
    ]
    if CLOSURE_TWIST_EQUAL in hypotheses:
        out.append(BoundInterval("sum-jones-equal-closures", _ceil_div(T_L, 6) + 2 - k, 2 * T_L + l + 6 + k))
    return out


# ---------------------------------------------------------------------------
# records and consistency


@dataclass
class ClosureData:
    """Twist number and component count of one summand's two closures."""

    tw_N: int
    k_N: int
    tw_D: int
    k_D: int
    hypotheses_N: frozenset = frozenset()
    hypotheses_D: frozenset = frozenset()


@dataclass
class LinkRecord:
    name: str
    k: int
    tw: int
    T_L: int
    adequate_A: bool
    adequate_B: bool
    hypotheses: frozenset = frozenset()
    l: int | None = None
    C: int | None = None
    C_cap: int | None = None
    closures: list[ClosureData] = field(default_factory=list)
    l_ext: int | None = None


def _closure_interval(tw, k, hyps) -> BoundInterval | None:
    try:
        return eflee_tw(tw, k, hyps)
    except (MissingHypothesis, ValueError):
        return None


def applicable_intervals(rec: LinkRecord) -> list[BoundInterval]:
    """Every crosscap interval whose hypotheses the record asserts."""
    h = set(rec.hypotheses)
    out = []
    for fn, args in ((eflee_tw, (rec.tw, rec.k)), (eflee_TL, (rec.T_L, rec.k))):
        try:
            out.append(fn(*args, h))
        except (MissingHypothesis, ValueError):
            pass
    if rec.l is not None and set(_SUM) <= h:
        if rec.l == 2:
            out.append(twistmain(rec.tw, rec.k, h))
            out.append(cor_tltwist(rec.T_L, rec.k, h))
            if CLOSURE_TWIST_EQUAL in h:
                out.append(cor_tltwist_equal_closures(rec.T_L, rec.k, h))
        out.extend(generalized(rec.l, rec.tw, rec.T_L, rec.k, h))
        if rec.closures:
            ns = [_closure_interval(c.tw_N, c.k_N, c.hypotheses_N) for c in rec.closures]
            ds = [_closure_interval(c.tw_D, c.k_D, c.hypotheses_D) for c in rec.closures]
            if all(ns) and all(ds):
                if rec.l == 2:
                    out.append(crossmain_from_closures(ns, ds, h))
                out.append(sum_closures(ns, ds, h))
    if rec.C_cap is not None:
        out.append(BoundInterval("genus-one-cap", 0, rec.C_cap))
    return out


def consistency_report(rec: LinkRecord) -> dict:
    intervals = applicable_intervals(rec)
    asserted = [b for b in intervals if b.asserted]
    lo = max((b.lo for b in asserted), default=0)
    hi = min((b.hi for b in asserted), default=None)
    consistent = hi is None or lo <= hi
    if rec.C is not None:
        consistent = consistent and all(rec.C in b for b in asserted)
    report = {
        "name": rec.name,
        "intervals": [b.as_dict() for b in intervals],
        "intersection": [lo, hi],
        "consistent": consistent,
    }
    if rec.C is not None:
        report["witness_C"] = rec.C
    if rec.l is not None and STRONG_SUMMANDS in rec.hypotheses:
        sandwich = tl_twist_sandwich(rec.tw, rec.k)
        report["T_L_sandwich"] = {**sandwich.as_dict(), "value": rec.T_L, "holds": rec.T_L in sandwich}
        if rec.l_ext is not None:
            loss = edge_loss_bound(rec.tw, rec.k)
            report["l_ext_bound"] = {**loss.as_dict(), "value": rec.l_ext, "holds": rec.l_ext in loss}
    return report


# ---------------------------------------------------------------------------
# the two independence families


def independence_check_a(rows) -> dict:
    """T_L stays at most 2 while C grows without bound along the family."""
    rows = sorted(rows, key=lambda r: r.k)
    cs = [r.C for r in rows]
    monotone = all(a < b for a, b in zip(cs, cs[1:]))
    max_tl = max((r.T_L for r in rows), default=0)
    # the alternating T_L bound would cap C at T_L + 1 for knots
    beyond = [r.k for r in rows if r.C > r.T_L + 1]
    return {
        "max_T_L": max_tl,
        "C": cs,
        "T_L_bounded": max_tl <= 2,
        "C_increasing": monotone,
        "outside_alternating_bound": beyond,
        "passed": max_tl <= 2 and monotone,
    }


def independence_check_b(rows) -> dict:
    """``|beta'|`` grows with m while the crosscap stays at most 3.

    ``rows`` are ``(m, beta_prime_abs, C_cap)`` triples.
    """
    rows = sorted(rows)
    bp = [b for _, b, _ in rows]
    growing = all(a < b for a, b in zip(bp, bp[1:]))
    at_least_m = all(b >= m for m, b, _ in rows)
    capped = all(cap <= 3 for _, _, cap in rows)
    return {
        "beta_prime": bp,
        "growing": growing,
        "at_least_m": at_least_m,
        "C_at_most_3": capped,
        "passed": growing and at_least_m and capped,
    }


def clark_cap(genus: int) -> int:
    """Crosscap number is at most twice the genus plus one."""
    return 2 * genus + 1

