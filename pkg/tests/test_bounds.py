import pytest

from tanglebounds import bounds as B

ALT = {B.ALTERNATING, B.PRIME, B.TWIST_REDUCED, B.NON_SPLIT, B.NOT_2P_TORUS}
SUM = {B.NON_SPLIT, B.TWIST_REDUCED, B.STRONG_SUMMANDS}


def span(iv):
    return (iv.lo, iv.hi)


def test_lee_twist():
    assert span(B.eflee_tw(2, 1, ALT)) == (2, 3)
    assert span(B.eflee_tw(4, 1, ALT)) == (3, 5)
    with pytest.raises(ValueError):
        B.eflee_tw(1, 1, ALT)


def test_figure_eight_record():
    # tw = T_L = 2 and k = 1; its crosscap number is 2
    assert 2 in B.eflee_tw(2, 1, ALT)
    assert 2 in B.eflee_TL(2, 1, ALT)


def test_lee_jones():
    assert span(B.eflee_TL(3, 1, ALT)) == (2, 4)
    assert span(B.eflee_TL(0, 1, ALT)) == (1, 1)
    with pytest.raises(B.MissingHypothesis, match="not_2p_torus"):
        B.eflee_TL(3, 1, ALT - {B.NOT_2P_TORUS})


def test_pair_closures():
    assert span(B.crossmain(2, SUM)) == (0, 4)
    iv = B.crossmain(0, SUM)
    assert span(iv) == (0, 2) and iv.clamped and (iv.raw_lo, iv.raw_hi) == (-2, 2)


def test_pair_closures_from_intervals():
    n = [B.BoundInterval("x", 2, 4), B.BoundInterval("x", 1, 3)]
    d = [B.BoundInterval("x", 3, 3), B.BoundInterval("x", 2, 5)]
    assert span(B.crossmain_from_closures(n, d, SUM)) == (1, 9)
    with pytest.raises(ValueError):
        B.crossmain_from_closures(n[:1], d[:1], SUM)


def test_pair_twist():
    assert span(B.twistmain(10, 1, SUM)) == (3, 13)
    iv = B.twistmain(2, 2, SUM)
    assert span(iv) == (0, 4) and iv.clamped


def test_pair_jones():
    assert span(B.cor_tltwist(6, 1, SUM)) == (0, 21)
    iv = B.cor_tltwist(0, 1, SUM)
    assert span(iv) == (0, 9) and (iv.raw_lo, iv.raw_hi) == (-1, 9)
    with pytest.raises(B.MissingHypothesis):
        B.cor_tltwist_equal_closures(6, 1, SUM)
    assert span(B.cor_tltwist_equal_closures(6, 1, SUM | {B.CLOSURE_TWIST_EQUAL})) == (2, 21)


def test_sandwich_and_loss():
    assert span(B.tl_twist_sandwich(10, 1)) == (2, 20)
    assert span(B.tl_twist_sandwich(0, 1)) == (0, 0)
    assert span(B.edge_loss_bound(10, 1)) == (0, 10)


def test_generalized_tags():
    out = {iv.source: iv for iv in B.generalized(3, 15, 15, 1, SUM)}
    assert span(out["sum-twist-stated"]) == (6, 19) and not out["sum-twist-stated"].asserted
    assert span(out["sum-twist-as-proved"]) == (4, 19)
    assert span(out["sum-jones"]) == (3, 40)
    assert "sum-jones-equal-closures" not in out
    out = {iv.source: iv for iv in B.generalized(3, 15, 15, 1, SUM | {B.CLOSURE_TWIST_EQUAL})}
    assert span(out["sum-jones-equal-closures"]) == (4, 40)
    with pytest.raises(ValueError):
        B.generalized(1, 5, 5, 1, SUM)


def test_sum_closures():
    n = [B.BoundInterval("x", 2, 3)] * 3
    d = [B.BoundInterval("x", 1, 4)] * 3
    assert span(B.sum_closures(n, d, SUM)) == (0, 12)


def test_calculators_refuse_missing_flags():
    with pytest.raises(B.MissingHypothesis, match="strongly_alternating_summands"):
        B.twistmain(4, 1, {B.NON_SPLIT, B.TWIST_REDUCED})
    with pytest.raises(B.MissingHypothesis):
        B.eflee_tw(4, 1, set())


def test_every_interval_is_ordered():
    for tw in range(0, 30):
        for k in range(1, 4):
            ivs = [B.twistmain(tw, k, SUM), B.cor_tltwist(tw, k, SUM), B.tl_twist_sandwich(tw, k)]
            ivs += B.generalized(3, tw, tw, k, SUM)
            if tw >= 2:
                ivs.append(B.eflee_tw(tw, k, ALT))
            assert all(iv.lo <= iv.hi for iv in ivs)


def _record(**kw):
    base = dict(name="x", k=1, tw=10, T_L=10, adequate_A=True, adequate_B=True,
                hypotheses=frozenset(ALT | SUM), l=2)
    base.update(kw)
    return B.LinkRecord(**base)


def test_consistency_report():
    rep = B.consistency_report(_record())
    assert rep["consistent"]
    sources = {iv["source"] for iv in rep["intervals"]}
    assert {"lee-twist", "lee-jones", "pair-twist", "pair-jones", "sum-twist-as-proved"} <= sources
    assert rep["T_L_sandwich"]["holds"]
    assert "witness_C" not in rep


def test_consistency_report_catches_bad_witness():
    rep = B.consistency_report(_record(C=50))
    assert not rep["consistent"]
    assert rep["witness_C"] == 50


def test_genus_cap_interval():
    rep = B.consistency_report(B.LinkRecord("w", 1, 11, 3, False, True, C_cap=B.clark_cap(1)))
    assert rep["intervals"] == [{"source": "genus-one-cap", "lo": 0, "hi": 3, "clamped": False}]


def test_independence_b_degenerate_family():
    rep = B.independence_check_b([(1, 2, 3)])
    assert rep["growing"] and rep["passed"]
    assert not B.independence_check_b([(1, 2, 3), (2, 2, 3)])["passed"]
