"""Layer decompositions, layer indices, and the orbit order on them."""

import itertools

import pytest

from segops import (
    BadSize,
    LayerIndex,
    OrbitCmp,
    ShapeMismatch,
    ZERO,
    ZeroRepInput,
    compose_orbits,
    factors_of,
    jacquet_layers,
    minimal_representative,
    orbit_leq,
    permutation_bruhat_leq,
    pieces_csupp,
    top_layer,
    trivial_index,
)
from segops import CuspidalLine, Segment

from conftest import ms, seg, st, stx, z

H2 = CuspidalLine('h', 'h', 2)


# ---------------------------------------------------------------- factors

def test_factors_of_generic():
    assert factors_of(st((0, 4), (10, 12))) == [
        ('St', seg(0, 4)),
        ('St', seg(10, 12)),
    ]
    assert factors_of(st()) == []


def test_factors_of_zsegment():
    assert factors_of(z(0, 4)) == [('Z', seg(0, 4))]


def test_factors_of_zero_rejected():
    with pytest.raises(ZeroRepInput):
        factors_of(ZERO)


# ---------------------------------------------------------------- indices

def test_layer_index_sums():
    idx = LayerIndex(((3, 0), (1, 1)))
    assert idx.row_sums() == (3, 2)
    assert idx.col_sums() == (4, 1)
    assert idx.corner_sums() == ((3, 3), (4, 5))


def test_layer_index_rejects_bad_shapes():
    with pytest.raises(ShapeMismatch):
        LayerIndex(((1, 2), (3,)))
    with pytest.raises(ShapeMismatch):
        LayerIndex(((1, -1),))


def test_trivial_index_formula():
    idx = trivial_index((3, 2), (4, 1))
    assert idx.rows == ((3, 0), (1, 1))
    assert idx.is_trivial()
    with pytest.raises(ShapeMismatch):
        trivial_index((3, 2), (4, 2))


def test_nontrivial_index_detected():
    assert not LayerIndex(((2, 1), (2, 0))).is_trivial()


# ---------------------------------------------------------------- layers

FACTORS = [('St', seg(0, 4)), ('St', seg(10, 12))]


def test_layers_two_factor_example():
    layers = jacquet_layers(FACTORS, 1)
    assert len(layers) == 2
    top = layers[0]
    assert top.first == (('St', seg(0, 4)), ('St', seg(12, 12)))
    assert top.second == (('St', seg(10, 10)),)
    assert top.index.rows == ((3, 0), (1, 1))
    low = layers[1]
    assert low.first == (('St', seg(2, 4)), ('St', seg(10, 12)))
    assert low.second == (('St', seg(0, 0)),)
    assert low.index.rows == ((2, 1), (2, 0))


def test_top_layer_heads_enumeration():
    assert top_layer(FACTORS, 1) == jacquet_layers(FACTORS, 1)[0]


def test_layers_k_zero_is_trivial():
    layers = jacquet_layers(FACTORS, 0)
    assert len(layers) == 1
    assert layers[0].first == tuple(FACTORS)
    assert layers[0].second == ()
    assert layers[0].index.is_trivial()


def test_layers_z_factor_splits_right():
    layers = jacquet_layers([('Z', seg(0, 4))], 1)
    assert len(layers) == 1
    assert layers[0].first == (('Z', seg(0, 2)),)
    assert layers[0].second == (('Z', seg(4, 4)),)
    assert layers[0].index.rows == ((2, 1),)


def test_layers_bad_sizes():
    with pytest.raises(BadSize):
        jacquet_layers(FACTORS, 6)
    with pytest.raises(BadSize):
        jacquet_layers(FACTORS, -1)
    with pytest.raises(BadSize):
        top_layer(FACTORS, 3)  # more than the last factor holds
    with pytest.raises(BadSize):
        top_layer([], 1)
    assert top_layer([], 0).first == ()


def test_weighted_line_units():
    f = [('St', Segment(H2, 0, 2))]
    assert jacquet_layers(f, 1) == []
    with pytest.raises(BadSize):
        top_layer(f, 1)
    layer = top_layer(f, 2)
    assert layer.second == (('St', Segment(H2, 0, 0)),)
    assert layer.index.rows == ((2, 2),)


def test_pieces_csupp():
    layer = top_layer(FACTORS, 1)
    assert pieces_csupp(layer.second) == (('r', 10),)
    assert pieces_csupp(layer.first) == (
        ('r', 0),
        ('r', 2),
        ('r', 4),
        ('r', 12),
    )
    assert pieces_csupp(()) == ()


# ---------------------------------------------------------------- orbit order

def test_orbit_leq_trivial_is_minimum():
    layers = jacquet_layers(FACTORS, 1)
    a, b = layers[0].index, layers[1].index
    assert orbit_leq(a, b) is OrbitCmp.LE
    assert orbit_leq(b, a) is OrbitCmp.GE
    assert orbit_leq(a, a) is OrbitCmp.EQUAL


def test_orbit_leq_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        orbit_leq(LayerIndex(((1, 0),)), LayerIndex(((0, 1),)))


def test_orbit_leq_incomparable():
    x = LayerIndex(((2, 0, 0), (0, 0, 2), (0, 2, 0)))
    y = LayerIndex(((0, 2, 0), (2, 0, 0), (0, 0, 2)))
    assert orbit_leq(x, y) is OrbitCmp.INCOMPARABLE


def test_enumeration_sound_for_orbit_order():
    # earlier layers are never strictly above later ones
    for k in (1, 2):
        layers = jacquet_layers(FACTORS, k)
        for i, j in itertools.combinations(range(len(layers)), 2):
            cmp = orbit_leq(layers[i].index, layers[j].index)
            assert cmp is not OrbitCmp.GE and cmp is not OrbitCmp.EQUAL


# ---------------------------------------------------------------- composition

def test_compose_trivial_with_trivial():
    outer = trivial_index((2, 2), (3, 1))
    inner = trivial_index((2, 1, 1), (2, 1, 1))
    assert compose_orbits(outer, inner) == trivial_index((2, 2), (2, 1, 1))


def test_compose_nontrivial_inner():
    outer = trivial_index((2, 2), (3, 1))  # rows ((2,0),(1,1))
    inner = LayerIndex(((1, 1, 0), (1, 0, 0), (0, 0, 1)))
    out = compose_orbits(outer, inner)
    assert out.rows == ((1, 1, 0), (1, 0, 1))
    assert not out.is_trivial()


def test_compose_rejects_spilled_cells():
    outer = trivial_index((2, 2), (3, 1))
    # a block-0 cell donating into block 1's sub-column
    inner = LayerIndex(((1, 0, 1), (1, 0, 0), (0, 1, 0)))
    with pytest.raises(ShapeMismatch):
        compose_orbits(outer, inner)


def test_compose_rejects_wrong_row_count():
    outer = trivial_index((2, 2), (3, 1))
    inner = LayerIndex(((2, 1, 1),))
    with pytest.raises(ShapeMismatch):
        compose_orbits(outer, inner)


def test_compose_associative_instance():
    outer = LayerIndex(((2,),))
    mid = LayerIndex(((1, 1),))
    inner = LayerIndex(((1, 0), (0, 1)))
    lhs = compose_orbits(compose_orbits(outer, mid), inner)
    rhs = compose_orbits(outer, compose_orbits(mid, inner))
    assert lhs == rhs == LayerIndex(((1, 1),))


# ---------------------------------------------------------------- Bruhat

def test_minimal_representative_identity_for_trivial():
    idx = trivial_index((3, 2), (4, 1))
    assert minimal_representative(idx) == (0, 1, 2, 3, 4)


def test_minimal_representative_nontrivial():
    assert minimal_representative(LayerIndex(((2, 1), (2, 0)))) == (
        0,
        1,
        4,
        2,
        3,
    )


def test_bruhat_identity_below_everything():
    n = 4
    ident = tuple(range(n))
    for w in itertools.permutations(range(n)):
        assert permutation_bruhat_leq(ident, w)
        if w != ident:
            assert not permutation_bruhat_leq(w, ident)


def test_orbit_order_matches_bruhat_on_representatives():
    # all 2x2 indices with row sums (2,1) and column sums (2,1)
    candidates = []
    for r00 in range(0, 3):
        r01 = 2 - r00
        r10 = 2 - r00
        r11 = 1 - r01
        if min(r01, r10, r11) < 0:
            continue
        candidates.append(LayerIndex(((r00, r01), (r10, r11))))
    for x, y in itertools.product(candidates, repeat=2):
        cmp = orbit_leq(x, y)
        u = minimal_representative(x)
        v = minimal_representative(y)
        if cmp is OrbitCmp.EQUAL:
            assert u == v
        elif cmp is OrbitCmp.LE:
            assert permutation_bruhat_leq(u, v)
        elif cmp is OrbitCmp.GE:
            assert permutation_bruhat_leq(v, u)
        else:
            assert not permutation_bruhat_leq(u, v)
            assert not permutation_bruhat_leq(v, u)
