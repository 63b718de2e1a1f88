"""Two-block restriction layers of formal products, with orbit bookkeeping.

Restricting a product of tagged segment factors along a two-block unipotent
radical filters into layers, one per way of splitting k size units off the
factors. Layers are kept formal: a layer is a pair of blocks, each a list of
(tag, piece) factors; nothing is resolved to irreducibles.

Split conventions (fixed by the behavior of the derivative functors):

* an St factor [a,b] donating u points keeps the right part [a+2u, b] in the
  first block and sends the left part [a, a+2(u-1)] to the second block;
* a Z factor donates from the right: it keeps [a, b-2u] and sends
  [b-2(u-1), b] to the second block.

Each layer carries a LayerIndex: the matrix whose row i says how factor i
distributes over the blocks, in l_abs units. Layer lists are emitted in an
order compatible with the Bruhat order on the indices (smaller first, the
trivial index leading), so prefixes of the list are closed under passing to
smaller orbits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import BadSize, ShapeMismatch, ZeroRepInput
from .reps import GenericSt, RepParam, ZSegment, ZeroRep
from .segments import Segment

__all__ = [
    'Factor',
    'LayerIndex',
    'JacquetLayer',
    'OrbitCmp',
    'trivial_index',
    'jacquet_layers',
    'top_layer',
    'orbit_leq',
    'compose_orbits',
    'factors_of',
    'pieces_csupp',
    'minimal_representative',
    'permutation_bruhat_leq',
]

Factor = tuple[str, Segment]  # tag 'St' or 'Z', then the segment

_TAGS = ('St', 'Z')


@dataclass(frozen=True)
class LayerIndex:
    """Distribution matrix: rows are product factors, columns target blocks."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ShapeMismatch('ragged layer index')
        if any(x < 0 for r in self.rows for x in r):
            raise ShapeMismatch('negative entry in layer index')

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        if not self.rows:
            return ()
        return tuple(sum(col) for col in zip(*self.rows))

    def is_trivial(self) -> bool:
        return self == trivial_index(self.row_sums(), self.col_sums())

    def corner_sums(self) -> tuple[tuple[int, ...], ...]:
        """corner[p][q] = sum of entries in rows <= p, columns <= q."""
        out: list[tuple[int, ...]] = []
        running = [0] * (len(self.rows[0]) if self.rows else 0)
        for row in self.rows:
            acc = 0
            for q, x in enumerate(row):
                acc += x
                running[q] += acc
            out.append(tuple(running))
        return tuple(out)


def trivial_index(row_sizes: Sequence[int], col_sizes: Sequence[int]) -> LayerIndex:
    """The no-interleaving index: factors fill blocks in reading order."""
    if sum(row_sizes) != sum(col_sizes):
        raise ShapeMismatch('row and column totals differ')
    r_acc = list(itertools.accumulate(row_sizes, initial=0))
    c_acc = list(itertools.accumulate(col_sizes, initial=0))
    rows = tuple(
        tuple(
            max(0, min(r_acc[i + 1], c_acc[j + 1]) - max(r_acc[i], c_acc[j]))
            for j in range(len(col_sizes))
        )
        for i in range(len(row_sizes))
    )
    return LayerIndex(rows)


@dataclass(frozen=True)
class JacquetLayer:
    first: tuple[Factor, ...]
    second: tuple[Factor, ...]
    index: LayerIndex


def _check_factors(factors: Sequence[Factor]) -> None:
    for tag, seg in factors:
        if tag not in _TAGS:
            raise ShapeMismatch(f'unknown factor tag {tag!r}')
        assert isinstance(seg, Segment)


def _split_factor(tag: str, seg: Segment, units: int) -> tuple[list[Factor], list[Factor]]:
    """Pieces of one factor donating `units` l_abs units to the second block."""
    w = seg.line.weight
    u = units // w
    np = seg.num_points()
    first: list[Factor] = []
    second: list[Factor] = []
    if tag == 'St':
        if u < np:
            first.append((tag, Segment(seg.line, seg.a + 2 * u, seg.b)))
        if u > 0:
            second.append((tag, Segment(seg.line, seg.a, seg.a + 2 * (u - 1))))
    else:
        if u < np:
            first.append((tag, Segment(seg.line, seg.a, seg.b - 2 * u)))
        if u > 0:
            second.append((tag, Segment(seg.line, seg.b - 2 * (u - 1), seg.b)))
    return first, second


def _layer_for(factors: Sequence[Factor], split: Sequence[int]) -> JacquetLayer:
    first: list[Factor] = []
    second: list[Factor] = []
    rows = []
    for (tag, seg), units in zip(factors, split):
        f, s = _split_factor(tag, seg, units)
        first.extend(f)
        second.extend(s)
        rows.append((seg.l_abs() - units, units))
    return JacquetLayer(tuple(first), tuple(second), LayerIndex(tuple(rows)))


def _split_key(split: Sequence[int]) -> tuple:
    prefixes = tuple(itertools.accumulate(split))
    return (sum(prefixes), tuple(split))


def jacquet_layers(factors: Sequence[Factor], k: int) -> list[JacquetLayer]:
    """All layers for donating k units to the second block, trivial first.

    The order sorts by total prefix mass of the donation vector, which is a
    linear extension of the orbit order: an earlier layer is never >= a
    later one, and the trivial index (whole donation from the tail of the
    factor list) comes first.
    """
    _check_factors(factors)
    total = sum(seg.l_abs() for _, seg in factors)
    if not 0 <= k <= total:
        raise BadSize(f'cannot split {k} units out of {total}')
    sizes = [seg.l_abs() for _, seg in factors]
    weights = [seg.line.weight for _, seg in factors]
    splits: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, acc: list[int]) -> None:
        if i == len(sizes):
            if remaining == 0:
                splits.append(tuple(acc))
            return
        for units in range(0, min(sizes[i], remaining) + 1, weights[i]):
            acc.append(units)
            rec(i + 1, remaining - units, acc)
            acc.pop()

    rec(0, k, [])
    splits.sort(key=_split_key)
    return [_layer_for(factors, s) for s in splits]


def top_layer(factors: Sequence[Factor], k: int) -> JacquetLayer:
    """The layer splitting only the last factor; heads the enumeration."""
    _check_factors(factors)
    if not factors:
        if k == 0:
            return JacquetLayer((), (), LayerIndex(()))
        raise BadSize('no factors to split')
    last = factors[-1][1]
    if not 0 <= k <= last.l_abs():
        raise BadSize(f'top layer needs k <= {last.l_abs()}, got {k}')
    if k % last.line.weight != 0:
        raise BadSize(f'k={k} is not a multiple of the factor weight')
    split = [0] * (len(factors) - 1) + [k]
    return _layer_for(factors, split)


class OrbitCmp(Enum):
    EQUAL = 'equal'
    LE = 'le'
    GE = 'ge'
    INCOMPARABLE = 'incomparable'


def orbit_leq(x: LayerIndex, y: LayerIndex) -> OrbitCmp:
    """Bruhat comparison of two indices with the same shape.

    Implemented by the corner-sum criterion: x <= y iff every corner sum of
    x is >= the matching corner sum of y (the trivial index has maximal
    corner sums and is the minimum). Validated against the permutation-level
    Bruhat order in the test suite.
    """
    if x.row_sums() != y.row_sums() or x.col_sums() != y.col_sums():
        raise ShapeMismatch('orbit comparison needs matching shapes')
    if x == y:
        return OrbitCmp.EQUAL
    cx = x.corner_sums()
    cy = y.corner_sums()
    le = all(a >= b for rx, ry in zip(cx, cy) for a, b in zip(rx, ry))
    ge = all(a <= b for rx, ry in zip(cx, cy) for a, b in zip(rx, ry))
    if le:
        return OrbitCmp.LE
    if ge:
        return OrbitCmp.GE
    return OrbitCmp.INCOMPARABLE


def _cell_order(outer: LayerIndex) -> list[tuple[int, int]]:
    # block-major: all factors' cells of block 0, then of block 1, ...
    n_rows = len(outer.rows)
    n_cols = len(outer.rows[0]) if outer.rows else 0
    return [(i, j) for j in range(n_cols) for i in range(n_rows)]


def compose_orbits(outer: LayerIndex, inner: LayerIndex) -> LayerIndex:
    """Refine an index by a second-stage index on its blocks.

    The inner index describes how each piece (cell of the outer index)
    distributes over sub-blocks refining the outer blocks. Its rows stand
    for the outer cells in block-major order, either all of them or only the
    nonzero ones; a row may only touch the sub-blocks of its own block. The
    result has the outer's factors as rows and the sub-blocks as columns.
    """
    cells = _cell_order(outer)
    cell_sizes = [outer.rows[i][j] for i, j in cells]
    inner_rowsums = list(inner.row_sums())
    if inner_rowsums == cell_sizes:
        used_cells = cells
    elif inner_rowsums == [c for c in cell_sizes if c != 0]:
        used_cells = [cell for cell, c in zip(cells, cell_sizes) if c != 0]
    else:
        raise ShapeMismatch('inner row sums do not match the outer cells')
    # group the inner columns into runs matching the outer column sums
    outer_cols = outer.col_sums()
    inner_cols = inner.col_sums()
    group_of_col: list[int] = []
    gi = 0
    acc = 0
    for c in inner_cols:
        while gi < len(outer_cols) and acc == outer_cols[gi]:
            gi += 1
            acc = 0
        if gi >= len(outer_cols) or acc + c > outer_cols[gi]:
            raise ShapeMismatch('inner columns do not refine the outer blocks')
        group_of_col.append(gi)
        acc += c
    while gi < len(outer_cols) and acc == outer_cols[gi]:
        gi += 1
        acc = 0
    if gi != len(outer_cols) or acc != 0:
        raise ShapeMismatch('inner columns do not exhaust the outer blocks')
    n_rows = len(outer.rows)
    composed = [[0] * len(inner_cols) for _ in range(n_rows)]
    for row, (i, j) in zip(inner.rows, used_cells):
        for t, val in enumerate(row):
            if val == 0:
                continue
            if group_of_col[t] != j:
                raise ShapeMismatch(
                    f'cell of block {j} spills into sub-block of {group_of_col[t]}'
                )
            composed[i][t] += val
    return LayerIndex(tuple(tuple(r) for r in composed))


def factors_of(pi: RepParam) -> list[Factor]:
    """Tagged factor list of a parameter, in canonical payload order."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('zero parameter has no factors')
    if isinstance(pi, GenericSt):
        return [('St', d) for d in pi.segments.items]
    return [('Z', pi.segment)]


def pieces_csupp(pieces: Iterable[Factor]) -> tuple[tuple[str, int], ...]:
    """Sorted point multiset covered by a block of tagged pieces."""
    out = [(seg.line.name, p) for _, seg in pieces for p in seg.points()]
    return tuple(sorted(out))


def minimal_representative(idx: LayerIndex) -> tuple[int, ...]:
    """The minimal-length permutation representing the index's double coset.

    Source positions are grouped by rows, target positions by columns; the
    cell (i, j) occupies consecutive source positions within row block i and
    consecutive target slots within column block j, allocated by row order.
    Entries are in l_abs units, so this is meaningful for weight-1 lines.
    """
    col_starts = list(itertools.accumulate(idx.col_sums(), initial=0))
    cursor = list(col_starts[:-1])
    w: list[int] = []
    for row in idx.rows:
        for j, units in enumerate(row):
            w.extend(range(cursor[j], cursor[j] + units))
            cursor[j] += units
    return tuple(w)


def permutation_bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat order via rank matrices: u <= v iff rank_u >= rank_v pointwise."""
    n = len(u)
    assert len(v) == n

    def rank(w: Sequence[int]) -> list[list[int]]:
        r = [[0] * n for _ in range(n)]
        for p in range(n):
            for q in range(n):
                r[p][q] = sum(1 for s in range(p + 1) if w[s] <= q)
        return r

    ru, rv = rank(u), rank(v)
    return all(ru[p][q] >= rv[p][q] for p in range(n) for q in range(n))
