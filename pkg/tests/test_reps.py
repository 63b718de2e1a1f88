import pytest

from conftest import G, R, ms, seg, st, stx, z
from segops import (
    EMPTY,
    GenericSt,
    Multisegment,
    NotPairwiseUnlinked,
    ZERO,
    ZeroRep,
    ZeroRepInput,
    canonical_key,
    csupp,
    dual_rep,
    isomorphic,
    l_abs_rep,
    make_generic,
    shift_rep,
)


def test_make_generic_rejects_linked():
    with pytest.raises(NotPairwiseUnlinked):
        st((0, 2), (2, 4))
    with pytest.raises(NotPairwiseUnlinked):
        st((0, 0), (2, 2))  # adjacency is linkage too


def test_make_generic_allow_adjacent():
    pi = stx((0, 0), (2, 2))
    assert isinstance(pi, GenericSt)
    # genuinely overlapping linked pairs stay rejected
    with pytest.raises(NotPairwiseUnlinked):
        stx((0, 2), (2, 4))


def test_csupp_and_size():
    pi = st((0, 4), (2, 2))
    assert csupp(pi) == (('r', 0), ('r', 2), ('r', 2), ('r', 4))
    assert l_abs_rep(pi) == 4
    assert csupp(z(0, 2)) == (('r', 0), ('r', 2))
    assert l_abs_rep(st()) == 0
    with pytest.raises(ZeroRepInput):
        csupp(ZERO)


def test_dual_and_shift():
    pi = st((0, 2), line=G)
    dpi = dual_rep(pi)
    assert csupp(dpi) == (('gbar', -2), ('gbar', 0))
    assert isomorphic(dual_rep(dpi), pi)
    assert csupp(shift_rep(z(0, 2), 1)) == (('r', 1), ('r', 3))
    assert isinstance(dual_rep(ZERO), ZeroRep)
    assert isinstance(shift_rep(ZERO, 1), ZeroRep)


def test_zero_singleton():
    assert isinstance(ZERO, ZeroRep)
    assert canonical_key(ZERO) == ('zero',)


def test_singleton_z_identified_with_st():
    # a one-point segment names the same irreducible either way
    assert isomorphic(z(2, 2), st((2, 2)))
    assert canonical_key(z(2, 2)) == canonical_key(st((2, 2)))
    assert not isomorphic(z(0, 2), st((0, 2)))
    assert not isomorphic(z(0, 2), z(0, 4))
    assert isomorphic(st(), GenericSt(EMPTY))


def test_isomorphic_ignores_payload_construction_order():
    a = make_generic(Multisegment.of([seg(0, 4), seg(2, 2)]))
    b = make_generic(Multisegment.of([seg(2, 2), seg(0, 4)]))
    assert isomorphic(a, b)
    assert a == b
