"""Verdicts for derivative/integral commutation, single and chained."""

import pytest

from segops import (
    EMPTY,
    Outcome,
    Reason,
    Side,
    TripleVerdict,
    ZERO,
    ZeroDerivativeChain,
    ZeroRepInput,
    comm_dual_rdli,
    comm_ldri,
    comm_rdli,
    eta,
    strong_multi,
)

from conftest import G, ms, seg, st, stx, z


# ------------------------------------------------------------ single verdicts

def test_true_via_equal_eta():
    v = comm_rdli(seg(2, 4), seg(2, 2), st((2, 4)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.ETA_EQUAL
    before, after = v.witness
    assert before.values == after.values == (1, 0)


def test_false_via_differing_eta():
    v = comm_rdli(seg(2, 4), seg(2, 6), st((2, 4)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.ETA_DIFFER
    before, after = v.witness
    assert before.values == (1, 0) and after.values == (2, 0)


def test_false_when_eps_vanishes():
    v = comm_rdli(seg(4, 4), seg(0, 0), st((0, 4)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.EPS_ZERO


def test_cuspidal_pair_fails():
    v = comm_rdli(seg(0, 0), seg(0, 0), st((0, 0)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.ETA_DIFFER


def test_true_via_dominant_endpoint():
    v = comm_rdli(seg(1, 3), seg(1, 1), stx((-1, -1), (1, 3)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.DOMINANT_ENDPOINT


def test_true_via_disjoint_support():
    # insertion is linked, supports never meet
    v = comm_rdli(seg(1, 3), seg(7, 7), st((1, 5)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.DISJOINT_SUPPORT


def test_unknown_when_only_a_wider_segment_would_decide():
    # [4,4] inside [0,4] has equal eta towers before/after inserting [2,6],
    # but that only transfers to segments CONTAINED in a decided one; [0,4]
    # is wider, so nothing may be concluded for it.
    v = comm_rdli(seg(0, 4), seg(2, 6), st((0, 4), (4, 4)))
    assert v.outcome is Outcome.UNKNOWN
    assert v.reason is Reason.INTEGRAL_UNSUPPORTED


def test_true_does_not_transfer_leftward():
    # same right end: the short segment commutes, the widened one fails
    narrow = comm_rdli(seg(2, 2), seg(0, 2), st((0, 2), (2, 2)))
    assert narrow.outcome is Outcome.TRUE
    assert narrow.reason is Reason.ETA_EQUAL
    wide = comm_rdli(seg(0, 2), seg(0, 2), st((0, 2), (2, 2)))
    assert wide.outcome is Outcome.FALSE
    assert wide.reason is Reason.ETA_DIFFER


def test_unknown_when_nothing_applies():
    v = comm_rdli(seg(0, 0), seg(0, 2), z(-2, 0))
    assert v.outcome is Outcome.UNKNOWN
    assert v.reason is Reason.INTEGRAL_UNSUPPORTED
    assert not v.decisive


def test_zero_rep_input():
    with pytest.raises(ZeroRepInput):
        comm_rdli(seg(0, 0), seg(0, 0), ZERO)
    with pytest.raises(ZeroRepInput):
        comm_dual_rdli(seg(0, 0), seg(0, 0), ZERO)
    with pytest.raises(ZeroRepInput):
        comm_ldri(seg(0, 0), seg(0, 0), ZERO)


def test_verdict_str_and_decisive():
    v = TripleVerdict(Outcome.TRUE, Reason.SATURATION)
    assert str(v) == 'true(saturation)'
    assert v.decisive
    u = TripleVerdict(Outcome.UNKNOWN, Reason.INTEGRAL_UNSUPPORTED)
    assert str(u) == 'unknown(integral-unsupported)'
    assert not u.decisive


# ------------------------------------------------------------ dual variant

def test_dual_variant_agrees_on_supported_route():
    v = comm_dual_rdli(seg(2, 4), seg(2, 2), st((2, 4)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.ETA_EQUAL
    before, after = v.witness
    assert before.side.name == 'L' and before.base == seg(2, 2)
    assert before.values == after.values == (1,)


def test_dual_variant_eps_zero():
    v = comm_dual_rdli(seg(4, 4), seg(0, 0), st((0, 4)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.EPS_ZERO


def test_dual_variant_shares_criteria():
    v = comm_dual_rdli(seg(1, 3), seg(1, 1), stx((-1, -1), (1, 3)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.DOMINANT_ENDPOINT


def test_variants_never_split_decisively():
    probes = [seg(a, b) for a in range(0, 5) for b in range(a, 5, 2)]
    params = [st((0, 2)), st((0, 4), (2, 2)), z(0, 2), stx((0, 0), (2, 2))]
    checked = 0
    for pi in params:
        for d1 in probes:
            for d2 in probes:
                u = comm_rdli(d1, d2, pi)
                v = comm_dual_rdli(d1, d2, pi)
                if u.decisive and v.decisive:
                    checked += 1
                    assert u.outcome is v.outcome, (d1, d2, pi, u, v)
    assert checked > 100


# ------------------------------------------------------------ mirrored variant

def test_mirror_true_via_equal_eta():
    v = comm_ldri(seg(2, 4), seg(4, 4), st((2, 4)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.ETA_EQUAL
    before, after = v.witness
    assert before.values == after.values == (1, 0)


def test_mirror_false_via_differing_eta():
    v = comm_ldri(seg(2, 4), seg(0, 4), st((2, 4)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.ETA_DIFFER


def test_mirror_eps_zero():
    v = comm_ldri(seg(0, 0), seg(4, 4), st((0, 4)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.EPS_ZERO


def test_mirror_criteria_on_other_line():
    v = comm_ldri(seg(0, 0), seg(0, 0, line=G), z(0, 2))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.DISJOINT_SUPPORT


# ------------------------------------------------------------ chained verdicts

def test_chain_without_integrals_is_automatic():
    v = strong_multi(ms((2, 2)), EMPTY, z(0, 2))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.ETA_EQUAL
    assert v.witness == 0


def test_chain_vacuous():
    v = strong_multi(EMPTY, EMPTY, z(0, 2))
    assert v.outcome is Outcome.TRUE
    assert v.witness == 0


def test_chain_true_with_subchecks():
    v = strong_multi(ms((1, 3)), ms((1, 1)), stx((-1, -1), (1, 3)))
    assert v.outcome is Outcome.TRUE
    assert v.reason is Reason.DOMINANT_ENDPOINT
    assert v.witness == 1


def test_chain_false_aggregates():
    v = strong_multi(ms((0, 0)), ms((0, 0)), st((0, 0)))
    assert v.outcome is Outcome.FALSE
    assert v.reason is Reason.ETA_DIFFER


def test_chain_unknown_aggregates():
    v = strong_multi(ms((0, 0)), ms((0, 2)), z(-2, 0))
    assert v.outcome is Outcome.UNKNOWN
    assert v.reason is Reason.INTEGRAL_UNSUPPORTED


def test_chain_vanishing_derivative_rejected():
    with pytest.raises(ZeroDerivativeChain):
        strong_multi(ms((4, 4)), EMPTY, z(0, 2))


def test_chain_zero_rep_input():
    with pytest.raises(ZeroRepInput):
        strong_multi(EMPTY, EMPTY, ZERO)
