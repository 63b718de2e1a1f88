"""Exhaustive property checks over a window of parameters.

A sweep enumerates all segments with endpoints inside a half-unit window on
one self-dual weight-1 line, builds every GenericSt parameter with pairwise
unlinked payload up to a size bound (plus every one-segment ZSegment), and
checks the registered operator and commutativity laws instance by instance.
Failures are collected as counterexample strings; instances whose verdict
stays Unknown where a law promises True are collected separately and never
silently dropped.

Reports are deterministic: enumeration order is canonical, parallel chunks
are merged in slice order, and the serialized report carries no timings, so
the bytes are identical across runs and parallelism settings.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .branching import _segment_pool, dualize_certificate, find_certificates
from .commutativity import Outcome, comm_dual_rdli, comm_ldri, comm_rdli
from .errors import DualVerificationFailed, OutOfRange, UnsupportedDomain
from .invariants import epsilon, eta, eta_compare, hd, level, mx
from .operators import Side, derive, derive_multi, integrate
from .parsing import print_expr
from .reps import (
    GenericSt,
    RepParam,
    ZSegment,
    ZeroRep,
    canonical_key,
    csupp,
    dual_rep,
    isomorphic,
    l_abs_rep,
    make_generic,
)
from .segments import (
    CuspidalLine,
    Multisegment,
    Segment,
    SegmentRelation,
    admissible_orders,
    intersection_of,
    is_saturated_wrt,
    relation,
    union_of,
)

__all__ = [
    'SweepConfig',
    'PropertyOutcome',
    'SweepReport',
    'PROPERTIES',
    'enumerate_segments',
    'enumerate_params',
    'run_property',
    'run_sweep',
]

_LINE = CuspidalLine('r', 'r', 1)

_BACKENDS = ('generic', 'zsegment')


@dataclass(frozen=True)
class SweepConfig:
    """Window and scope of a sweep; endpoints in half-units.

    An inverted window (lo > hi) enumerates nothing and is allowed: the
    sweep then reports zero instances and succeeds.
    """

    lo: int
    hi: int
    max_labs: int = 6
    backends: tuple[str, ...] = _BACKENDS
    properties: tuple[str, ...] = ()
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_labs < 1:
            raise OutOfRange(f'max_labs must be >= 1, got {self.max_labs}')
        if self.jobs < 1:
            raise OutOfRange(f'jobs must be >= 1, got {self.jobs}')
        for b in self.backends:
            if b not in _BACKENDS:
                raise OutOfRange(f'unknown backend {b!r}')
        for p in self.properties:
            if p not in PROPERTIES:
                raise OutOfRange(f'unknown property {p!r}')


def enumerate_segments(cfg: SweepConfig) -> tuple[Segment, ...]:
    """All segments with endpoints in [lo, hi] and at most max_labs points."""
    out = [
        Segment(_LINE, a, b)
        for a in range(cfg.lo, cfg.hi + 1)
        for b in range(a, cfg.hi + 1, 2)
        if (b - a) // 2 + 1 <= cfg.max_labs
    ]
    return tuple(sorted(out, key=Segment.sort_key))


def enumerate_params(cfg: SweepConfig) -> tuple[RepParam, ...]:
    """Every parameter of the selected backends inside the window."""
    pool = enumerate_segments(cfg)
    out: list[RepParam] = []
    if 'generic' in cfg.backends:

        def grow(start: int, picked: list[Segment], budget: int) -> None:
            out.append(make_generic(Multisegment.of(picked)))
            for i in range(start, len(pool)):
                d = pool[i]
                if d.l_abs() > budget:
                    continue
                if any(
                    relation(d, x) is SegmentRelation.LINKED for x in picked
                ):
                    continue
                grow(i, picked + [d], budget - d.l_abs())

        grow(0, [], cfg.max_labs)
    if 'zsegment' in cfg.backends:
        out.extend(ZSegment(d) for d in pool)
    return tuple(out)


@dataclass
class _Tally:
    checked: int = 0
    fails: list[str] = field(default_factory=list)
    unknowns: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class PropertyOutcome:
    checked: int
    counterexamples: tuple[str, ...]
    unknowns: tuple[str, ...]


def _pp(pi: RepParam) -> str:
    return print_expr(pi)


# each property gets (slice of parameters, all parameters, segment pool)


def _prop_operator_inverse(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """Round trips: derive after integrate is the identity on the supported
    domain, and integrate after a nonzero derive recovers the input whenever
    that integral is supported."""
    for pi in params:
        for d in segs:
            for side in (Side.L, Side.R):
                t.checked += 1
                tau = derive(pi, d, side)
                if not isinstance(tau, ZeroRep):
                    try:
                        back = integrate(tau, d, side)
                    except UnsupportedDomain:
                        back = None
                    if back is not None and not isomorphic(back, pi):
                        t.fails.append(
                            f'integrate(derive) != id: pi={_pp(pi)} d={d} '
                            f'side={side.name} got {_pp(back)}'
                        )
                try:
                    sigma = integrate(pi, d, side)
                except UnsupportedDomain:
                    continue
                again = derive(sigma, d, side)
                if isinstance(again, ZeroRep) or not isomorphic(again, pi):
                    t.fails.append(
                        f'derive(integrate) != id: pi={_pp(pi)} d={d} '
                        f'side={side.name} got {_pp(again)}'
                    )


def _prop_dual_switch(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """Taking duals swaps the side of every operator and of epsilon."""
    pairs = ((Side.L, Side.R), (Side.R, Side.L))
    for pi in params:
        dpi = dual_rep(pi)
        for d in segs:
            dd = d.dual()
            for side, mirror in pairs:
                t.checked += 1
                if epsilon(pi, d, side) != epsilon(dpi, dd, mirror):
                    t.fails.append(
                        f'eps mismatch under dual: pi={_pp(pi)} d={d} side={side.name}'
                    )
                left = derive(pi, d, side)
                right = derive(dpi, dd, mirror)
                if not isomorphic(dual_rep(left), right):
                    t.fails.append(
                        f'derive dual switch: pi={_pp(pi)} d={d} side={side.name}'
                    )
                try:
                    ileft = dual_rep(integrate(pi, d, side))
                except UnsupportedDomain:
                    ileft = None
                try:
                    iright = integrate(dpi, dd, mirror)
                except UnsupportedDomain:
                    iright = None
                if (ileft is None) != (iright is None):
                    t.fails.append(
                        f'integral support differs under dual: pi={_pp(pi)} '
                        f'd={d} side={side.name}'
                    )
                elif ileft is not None and not isomorphic(ileft, iright):
                    t.fails.append(
                        f'integrate dual switch: pi={_pp(pi)} d={d} side={side.name}'
                    )


def _prop_ordering_independence(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """derive_multi does not depend on the admissible ordering chosen.

    Checked for removal multisets of at most three segments drawn from the
    support of each parameter, on both sides; the left side runs the
    reversed orderings, mirroring the right. A multiset using a point that
    the support lacks vanishes at some step in every ordering (each step
    removes exactly its segment's points), so those instances agree
    trivially and are skipped.
    """
    for pi in params:
        if isinstance(pi, ZeroRep) or l_abs_rep(pi) == 0:
            continue
        have = Counter(csupp(pi))
        pool = _segment_pool(pi)
        for size in (1, 2, 3):
            for combo in itertools.combinations_with_replacement(pool, size):
                need = Counter(
                    (d.line.name, p) for d in combo for p in d.points()
                )
                if need - have:
                    continue
                m = Multisegment.of(combo)
                for side in (Side.R, Side.L):
                    t.checked += 1
                    keys = set()
                    for order in admissible_orders(m):
                        if side is Side.L:
                            order = tuple(reversed(order))
                        value: RepParam = pi
                        for d in order:
                            if isinstance(value, ZeroRep):
                                break
                            value = derive(value, d, side)
                        keys.add(canonical_key(value))
                    if len(keys) > 1:
                        t.fails.append(
                            f'order-dependent chain: pi={_pp(pi)} m={m} '
                            f'side={side.name}'
                        )
                    elif canonical_key(derive_multi(pi, m, side)) not in keys:
                        t.fails.append(
                            f'canonical order disagrees: pi={_pp(pi)} m={m} '
                            f'side={side.name}'
                        )


def _prop_comm_equivalence(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """The plain and dual combinatorial predicates agree wherever both are
    decisive.

    When the first segment's epsilon vanishes, both predicates return False
    from the same definitional check before anything else runs; such first
    segments are sampled once instead of crossed with every second segment.
    """
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        for d1 in segs:
            if epsilon(pi, d1, Side.R) == 0:
                d2_candidates: Sequence[Segment] = segs[:1]
            else:
                d2_candidates = segs
            for d2 in d2_candidates:
                t.checked += 1
                v1 = comm_rdli(d1, d2, pi)
                v2 = comm_dual_rdli(d1, d2, pi)
                if v1.decisive and v2.decisive and v1.outcome is not v2.outcome:
                    t.fails.append(
                        f'predicates disagree: pi={_pp(pi)} d1={d1} d2={d2} '
                        f'{v1} vs {v2}'
                    )
                elif v1.decisive != v2.decisive:
                    t.unknowns.append(
                        f'one-sided decision: pi={_pp(pi)} d1={d1} d2={d2} '
                        f'{v1} vs {v2}'
                    )


def _prop_eta_monotone(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """Left integrals never decrease any right eta vector entrywise."""
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        for d2 in segs:
            try:
                sigma = integrate(pi, d2, Side.L)
            except UnsupportedDomain:
                continue
            for d in segs:
                t.checked += 1
                before = eta(pi, d, Side.R)
                after = eta(sigma, d, Side.R)
                if not eta_compare(before, after, '<='):
                    t.fails.append(
                        f'eta dropped under integral: pi={_pp(pi)} '
                        f'integrated={d2} measured={d}'
                    )


def _prop_max_extraction(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """The maximal extraction multisegment is always removable."""
    for pi in params:
        if isinstance(pi, ZeroRep) or l_abs_rep(pi) == 0:
            continue
        for d in segs:
            t.checked += 1
            q = mx(pi, d, Side.R)
            if isinstance(derive_multi(pi, q, Side.R), ZeroRep):
                t.fails.append(f'mx not removable: pi={_pp(pi)} d={d}')


def _prop_saturation_propagation(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """A True verdict for a first segment propagates to every shorter first
    segment inside it (same right end, left end pulled in) that still has
    nonzero epsilon: the shorter segment's eta tower is a suffix of the
    original one, so tower equality is inherited.

    Only this shrinking direction is sound. Widening the first segment
    leftward extends the tower with entries the original comparison never
    constrained, and those entries can move under the integral."""
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        for d1 in segs:
            if epsilon(pi, d1, Side.R) == 0:
                continue
            narrower = [
                c
                for c in segs
                if c != d1
                and is_saturated_wrt(d1, c)
                and epsilon(pi, c, Side.R) != 0
            ]
            if not narrower:
                continue
            for d2 in segs:
                if comm_rdli(d1, d2, pi).outcome is not Outcome.TRUE:
                    continue
                for cand in narrower:
                    t.checked += 1
                    v = comm_rdli(cand, d2, pi)
                    if v.outcome is Outcome.FALSE:
                        t.fails.append(
                            f'saturation broke: pi={_pp(pi)} d1={d1} '
                            f'd2={d2} inner={cand} -> {v}'
                        )
                    elif v.outcome is Outcome.UNKNOWN:
                        t.unknowns.append(
                            f'saturation undecided: pi={_pp(pi)} d1={d1} '
                            f'd2={d2} inner={cand}'
                        )


def _prop_level_preserving(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """A left integral that preserves the level commutes with every
    removable first segment."""
    for pi in params:
        if isinstance(pi, ZeroRep) or l_abs_rep(pi) == 0:
            continue
        base_level = level(pi)
        for d2 in segs:
            try:
                sigma = integrate(pi, d2, Side.L)
            except UnsupportedDomain:
                continue
            t.checked += 1
            if level(sigma) != base_level:
                continue
            for d1 in segs:
                if epsilon(pi, d1, Side.R) == 0:
                    continue
                v = comm_rdli(d1, d2, pi)
                if v.outcome is Outcome.FALSE:
                    t.fails.append(
                        f'level-preserving integral not commuting: '
                        f'pi={_pp(pi)} d1={d1} d2={d2} -> {v}'
                    )
                elif v.outcome is Outcome.UNKNOWN:
                    t.unknowns.append(
                        f'level-preserving undecided: pi={_pp(pi)} '
                        f'd1={d1} d2={d2}'
                    )


def _prop_dual_triple(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """A decisive plain verdict forces the same truth value on the mirrored
    predicate of the dualized triple."""
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        dpi = dual_rep(pi)
        for d1 in segs:
            if epsilon(pi, d1, Side.R) == 0:
                continue
            for d2 in segs:
                v = comm_rdli(d1, d2, pi)
                if not v.decisive:
                    continue
                t.checked += 1
                w = comm_ldri(d1.dual(), d2.dual(), dpi)
                if w.decisive and w.outcome is not v.outcome:
                    t.fails.append(
                        f'dual triple flipped: pi={_pp(pi)} d1={d1} d2={d2} '
                        f'{v} vs {w}'
                    )
                elif not w.decisive:
                    t.unknowns.append(
                        f'dual triple undecided: pi={_pp(pi)} d1={d1} d2={d2} {v}'
                    )


def _prop_hd_fixed_point(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """The head multisegment of a generic parameter is its payload; for a
    one-segment degenerate parameter it is the right endpoint singleton."""
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        t.checked += 1
        got = hd(pi)
        if isinstance(pi, GenericSt):
            if not pi.segments.pairwise_unlinked():
                continue
            want = pi.segments
        else:
            d = pi.segment
            want = Multisegment.of([Segment(d.line, d.b, d.b)])
        if got != want:
            t.fails.append(f'hd mismatch: pi={_pp(pi)} got {got} want {want}')


def _prop_integral_sequence(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """Chained integrals against union/intersection re-bracketing.

    On the generic backend both double integrals are supported exactly when
    the combined payload stays unlinked, and then they insert the same
    multiset, so the isomorphism hypothesis holds by construction; the
    content checked here is that True verdicts on the premises force the
    re-bracketed triples and the derived chain identity.
    """
    overlapping = [
        (x, y)
        for x, y in itertools.combinations_with_replacement(segs, 2)
        if relation(x, y)
        in (SegmentRelation.NESTED, SegmentRelation.EQUAL)
    ]
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        for d1p, d2p in overlapping:
            try:
                step1 = integrate(pi, d1p, Side.L)
                both = integrate(step1, d2p, Side.L)
            except UnsupportedDomain:
                continue
            u = union_of(d1p, d2p)
            w = intersection_of(d1p, d2p)
            assert w is not None
            try:
                rebracketed = integrate(integrate(pi, w, Side.L), u, Side.L)
            except UnsupportedDomain:
                t.fails.append(
                    f'rebracketed integral unsupported: pi={_pp(pi)} '
                    f'd1p={d1p} d2p={d2p}'
                )
                continue
            if not isomorphic(both, rebracketed):
                t.fails.append(
                    f'integral rebracketing differs: pi={_pp(pi)} '
                    f'd1p={d1p} d2p={d2p}'
                )
                continue
            for d in segs:
                if epsilon(pi, d, Side.R) == 0:
                    continue
                if comm_rdli(d, d1p, pi).outcome is not Outcome.TRUE:
                    continue
                if comm_rdli(d, d2p, step1).outcome is not Outcome.TRUE:
                    continue
                t.checked += 1
                conclusions = (
                    ('first union', comm_rdli(d, u, pi)),
                    ('then intersection', comm_rdli(d, w, integrate(pi, u, Side.L))),
                    ('first intersection', comm_rdli(d, w, pi)),
                    ('then union', comm_rdli(d, u, integrate(pi, w, Side.L))),
                )
                for label, v in conclusions:
                    if v.outcome is Outcome.FALSE:
                        t.fails.append(
                            f'sequence conclusion false ({label}): '
                            f'pi={_pp(pi)} d={d} d1p={d1p} d2p={d2p}'
                        )
                    elif v.outcome is Outcome.UNKNOWN:
                        t.unknowns.append(
                            f'sequence conclusion undecided ({label}): '
                            f'pi={_pp(pi)} d={d} d1p={d1p} d2p={d2p}'
                        )
                tau = derive(pi, d, Side.R)
                if not isinstance(tau, ZeroRep):
                    try:
                        lhs = integrate(integrate(tau, d1p, Side.L), d2p, Side.L)
                        rhs = integrate(integrate(tau, w, Side.L), u, Side.L)
                    except UnsupportedDomain:
                        continue
                    if not isomorphic(lhs, rhs):
                        t.fails.append(
                            f'derived chain differs: pi={_pp(pi)} d={d} '
                            f'd1p={d1p} d2p={d2p}'
                        )


def _prop_certificate_duality(
    params: Sequence[RepParam],
    all_params: Sequence[RepParam],
    segs: Sequence[Segment],
    t: _Tally,
) -> None:
    """Every certificate survives transport to the dual pair and back."""
    by_size: dict[int, list[RepParam]] = {}
    for q in all_params:
        if not isinstance(q, ZeroRep):
            by_size.setdefault(l_abs_rep(q), []).append(q)
    for pi in params:
        if isinstance(pi, ZeroRep):
            continue
        size = l_abs_rep(pi)
        for pi2 in by_size.get(size - 1, ()):
            result = find_certificates(pi, pi2)
            t.checked += 1
            for cert in result.certificates:
                try:
                    flipped = dualize_certificate(cert, pi, pi2)
                    back = dualize_certificate(
                        flipped, dual_rep(pi2), dual_rep(pi)
                    )
                except DualVerificationFailed as exc:
                    t.fails.append(
                        f'certificate lost under duality: pi={_pp(pi)} '
                        f'pi2={_pp(pi2)} cert={cert.m},{cert.n}: {exc}'
                    )
                    continue
                if back.m != cert.m or back.n != cert.n:
                    t.fails.append(
                        f'duality not involutive: pi={_pp(pi)} pi2={_pp(pi2)} '
                        f'cert={cert.m},{cert.n}'
                    )
            for unk in result.unknowns:
                t.unknowns.append(
                    f'certificate candidate undecided: pi={_pp(pi)} '
                    f'pi2={_pp(pi2)} m={unk.m} n={unk.n}'
                )


PROPERTIES: dict[str, Callable[..., None]] = {
    'OperatorInverse': _prop_operator_inverse,
    'DualSwitch': _prop_dual_switch,
    'OrderingIndependence': _prop_ordering_independence,
    'CommEquivalence': _prop_comm_equivalence,
    'EtaMonotone': _prop_eta_monotone,
    'MaxExtraction': _prop_max_extraction,
    'SaturationPropagation': _prop_saturation_propagation,
    'LevelPreserving': _prop_level_preserving,
    'DualTriple': _prop_dual_triple,
    'HdFixedPoint': _prop_hd_fixed_point,
    'IntegralSequence': _prop_integral_sequence,
    'CertificateDuality': _prop_certificate_duality,
}


def run_property(
    name: str,
    params: Sequence[RepParam],
    segments: Sequence[Segment],
) -> PropertyOutcome:
    """Run one registered property over an explicit universe."""
    if name not in PROPERTIES:
        raise OutOfRange(f'unknown property {name!r}')
    t = _Tally()
    PROPERTIES[name](params, params, segments, t)
    return PropertyOutcome(t.checked, tuple(t.fails), tuple(t.unknowns))


@dataclass(frozen=True)
class SweepReport:
    window: tuple[int, int]
    max_labs: int
    backends: tuple[str, ...]
    n_params: int
    n_segments: int
    properties: dict[str, PropertyOutcome]

    @property
    def counterexample_count(self) -> int:
        return sum(len(p.counterexamples) for p in self.properties.values())

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexample_count else 0

    def to_json(self) -> str:
        body = {
            'window': list(self.window),
            'max_labs': self.max_labs,
            'backends': list(self.backends),
            'instances': {
                'params': self.n_params,
                'segments': self.n_segments,
            },
            'properties': {
                name: {
                    'checked': out.checked,
                    'counterexamples': list(out.counterexamples),
                    'unknowns': list(out.unknowns),
                }
                for name, out in self.properties.items()
            },
        }
        return json.dumps(body, sort_keys=True, indent=2)


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """Enumerate the window and check the configured properties.

    The parameter list is split into contiguous slices, one per job; slices
    are merged back in order, so the report does not depend on the job
    count. Properties quantifying over parameter pairs see the full
    parameter list regardless of slicing.
    """
    segments = enumerate_segments(cfg)
    params = enumerate_params(cfg)
    names = cfg.properties if cfg.properties else tuple(PROPERTIES)

    def work(chunk: Sequence[RepParam]) -> dict[str, _Tally]:
        tallies = {name: _Tally() for name in names}
        for name in names:
            PROPERTIES[name](chunk, params, segments, tallies[name])
        return tallies

    if cfg.jobs == 1 or len(params) <= 1:
        merged_list = [work(params)]
    else:
        step = (len(params) + cfg.jobs - 1) // cfg.jobs
        chunks = [params[i : i + step] for i in range(0, len(params), step)]
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            merged_list = list(pool.map(work, chunks))

    outcomes: dict[str, PropertyOutcome] = {}
    for name in names:
        checked = sum(part[name].checked for part in merged_list)
        fails = tuple(
            itertools.chain.from_iterable(part[name].fails for part in merged_list)
        )
        unknowns = tuple(
            itertools.chain.from_iterable(
                part[name].unknowns for part in merged_list
            )
        )
        outcomes[name] = PropertyOutcome(checked, fails, unknowns)
    return SweepReport(
        window=(cfg.lo, cfg.hi),
        max_labs=cfg.max_labs,
        backends=cfg.backends,
        n_params=len(params),
        n_segments=len(segments),
        properties=outcomes,
    )
