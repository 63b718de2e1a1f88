"""Search for commuting removal certificates between parameters of adjacent sizes.

Given parameters pi (size N+1) and pi2 (size N), a certificate is a pair of
multisegments (m, n) such that the right-derivative chain of m on the
half-twisted pi equals the left-derivative chain of n on pi2, and the two
chains commute strongly in the sense of strong_multi. find_certificates
enumerates all candidates inside a size bound and reports both the verified
certificates and the candidates whose verdict stayed Unknown (these are
never silently dropped). dualize_certificate transports a certificate to the
dual pair and re-verifies it from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .commutativity import Outcome, TripleVerdict, strong_multi
from .errors import DualVerificationFailed, OutOfRange, SizeMismatch
from .operators import Side, derive_multi
from .reps import (
    GenericSt,
    RepParam,
    ZSegment,
    ZeroRep,
    canonical_key,
    dual_rep,
    isomorphic,
    l_abs_rep,
    make_generic,
    shift_rep,
)
from .segments import EMPTY, CuspidalLine, Multisegment, Segment

__all__ = [
    'Certificate',
    'SearchResult',
    'find_certificates',
    'dualize_certificate',
    'example_suite',
]


@dataclass(frozen=True)
class Certificate:
    """A verified commuting removal pair with its common value."""

    m: Multisegment
    n: Multisegment
    common: RepParam
    verdict: TripleVerdict

    def __str__(self) -> str:
        return f'({self.m}, {self.n}) -> {self.common} [{self.verdict}]'


@dataclass(frozen=True)
class SearchResult:
    certificates: tuple[Certificate, ...]
    unknowns: tuple[Certificate, ...]


def _segment_pool(pi: RepParam) -> list[Segment]:
    """Segments whose points all lie in the cuspidal support of pi.

    Chains can only strip points that are present, so restricting candidates
    to the maximal point runs per line and parity class loses nothing.
    """
    segs = pi.segments.items if isinstance(pi, GenericSt) else (pi.segment,)
    lines: dict[str, CuspidalLine] = {}
    present: set[tuple[str, int]] = set()
    for seg in segs:
        lines[seg.line.name] = seg.line
        for p in seg.points():
            present.add((seg.line.name, p))
    pool: list[Segment] = []
    for name, p in sorted(present):
        line = lines[name]
        b = p
        while (name, b + 2) in present:
            b += 2
        pool.extend(Segment(line, p, q) for q in range(p, b + 1, 2))
    return pool


def _removables(
    pi: RepParam, side: Side, bound: int
) -> dict[tuple, list[tuple[Multisegment, RepParam]]]:
    """All multisegments with nonzero chain value on pi, grouped by value.

    Breadth-first from the empty multisegment: a multisegment is removable
    only if dropping the last element of its canonical ordering leaves a
    removable one, so extending removable states by single segments reaches
    everything. Values are always recomputed along the canonical ordering.
    """
    pool = _segment_pool(pi)
    seen: set[tuple] = set()
    out: dict[tuple, list[tuple[Multisegment, RepParam]]] = {}
    frontier: list[tuple[Multisegment, RepParam]] = [(EMPTY, pi)]
    out.setdefault(canonical_key(pi), []).append((EMPTY, pi))
    while frontier:
        next_frontier: list[tuple[Multisegment, RepParam]] = []
        for m, _ in frontier:
            for d in pool:
                if m.l_abs() + d.l_abs() > bound:
                    continue
                bigger = m.add(d)
                key = tuple(s.sort_key() for s in bigger.items)
                if key in seen:
                    continue
                seen.add(key)
                value = derive_multi(pi, bigger, side)
                if isinstance(value, ZeroRep):
                    continue
                out.setdefault(canonical_key(value), []).append((bigger, value))
                next_frontier.append((bigger, value))
        frontier = next_frontier
    return out


def find_certificates(
    pi: RepParam, pi2: RepParam, *, max_labs: Optional[int] = None
) -> SearchResult:
    """Enumerate commuting removal certificates for the pair (pi, pi2).

    pi must be exactly one size unit larger than pi2 (SizeMismatch
    otherwise). max_labs caps the total size of the removal multiset m
    (n is always one unit smaller, forced by value equality).
    """
    l1 = l_abs_rep(pi)
    l2 = l_abs_rep(pi2)
    if l1 != l2 + 1:
        raise SizeMismatch(f'sizes {l1} and {l2} do not differ by one')
    sigma = shift_rep(pi, 1)
    bound_m = l1 if max_labs is None else min(max_labs, l1)
    if bound_m < 1:
        return SearchResult((), ())
    m_map = _removables(sigma, Side.R, bound_m)
    n_map = _removables(pi2, Side.L, min(bound_m - 1, l2))
    certs: list[Certificate] = []
    unknowns: list[Certificate] = []
    for key, m_entries in m_map.items():
        if key not in n_map:
            continue
        for m, value in m_entries:
            if not m:
                continue  # m is at least one unit; the empty chain never joins
            for n, _ in n_map[key]:
                verdict = strong_multi(m, n, sigma)
                cert = Certificate(m, n, value, verdict)
                if verdict.outcome is Outcome.TRUE:
                    certs.append(cert)
                elif verdict.outcome is Outcome.UNKNOWN:
                    unknowns.append(cert)

    def cert_key(c: Certificate) -> tuple:
        return (
            tuple(d.sort_key() for d in c.m.items),
            tuple(d.sort_key() for d in c.n.items),
        )

    return SearchResult(
        tuple(sorted(certs, key=cert_key)),
        tuple(sorted(unknowns, key=cert_key)),
    )


def dualize_certificate(
    cert: Certificate, pi: RepParam, pi2: RepParam
) -> Certificate:
    """Transport a certificate of (pi, pi2) to the dual pair (pi2^, pi^).

    The transported pair is m' = shift(dual(n)), n' = shift(dual(m)), with
    the shift by one half-unit. It is re-verified from scratch: the chain
    values must be nonzero and agree, and the strong commutation check must
    not refute the transport; any of those failing is DualVerificationFailed.
    The recomputed verdict is recorded on the result; it can be Unknown when
    an intermediate value leaves the two parameter families, which refutes
    nothing. Applying the transport twice returns the original certificate.
    """
    m2 = cert.n.dual().shifted(1)
    n2 = cert.m.dual().shifted(1)
    sigma2 = shift_rep(dual_rep(pi2), 1)
    target2 = dual_rep(pi)
    val_m = derive_multi(sigma2, m2, Side.R)
    val_n = derive_multi(target2, n2, Side.L)
    if isinstance(val_m, ZeroRep) or isinstance(val_n, ZeroRep):
        raise DualVerificationFailed('transported chains vanish')
    if not isomorphic(val_m, val_n):
        raise DualVerificationFailed(
            f'transported chain values differ: {val_m} vs {val_n}'
        )
    verdict = strong_multi(m2, n2, sigma2)
    if verdict.outcome is Outcome.FALSE:
        raise DualVerificationFailed(f'transported verdict is {verdict}')
    return Certificate(m2, n2, val_m, verdict)


_R = CuspidalLine('r', 'r', 1)


def _certify(
    pi: RepParam, pi2: RepParam, m: Multisegment, n: Multisegment
) -> Certificate:
    sigma = shift_rep(pi, 1)
    value = derive_multi(sigma, m, Side.R)
    other = derive_multi(pi2, n, Side.L)
    assert not isinstance(value, ZeroRep) and isomorphic(value, other)
    verdict = strong_multi(m, n, sigma)
    assert verdict.outcome is Outcome.TRUE, f'family produced {verdict}'
    return Certificate(m, n, value, verdict)


def _suite_trivial(n: int) -> tuple[RepParam, RepParam, Certificate]:
    if n < 1:
        raise OutOfRange('trivial family needs n >= 1')
    pi = ZSegment(Segment(_R, -n, n))
    pi2 = ZSegment(Segment(_R, -(n - 1), n - 1))
    m = Multisegment.of([Segment(_R, n + 1, n + 1)])
    return pi, pi2, _certify(pi, pi2, m, EMPTY)


def _suite_rankin_selberg(
    d: Segment, d2: Segment
) -> tuple[RepParam, RepParam, Certificate]:
    if d.l_abs() != d2.l_abs() + 1:
        raise OutOfRange('sizes must differ by exactly one')
    pi = GenericSt(Multisegment.of([d]))
    pi2 = GenericSt(Multisegment.of([d2]))
    s = d.shifted(1)
    aligned = s.line == d2.line and (d2.a - s.a) % 2 == 0
    if aligned and s.a + 2 <= d2.a <= s.b:
        # the one-segment certificate fails here; subtract the overlap
        m = Multisegment.of([Segment(s.line, s.a, d2.a - 2)])
        n = (
            Multisegment.of([Segment(s.line, s.b + 2, d2.b)])
            if d2.b > s.b
            else EMPTY
        )
    else:
        m = Multisegment.of([s])
        n = Multisegment.of([d2])
    return pi, pi2, _certify(pi, pi2, m, n)


def _suite_qa(n: int, c: int) -> tuple[RepParam, RepParam, Certificate]:
    """Adjacent-pair family: parameters in half-units, c strictly above -n."""
    if n < 1:
        raise OutOfRange('family needs n >= 1')
    if not -n < c <= n:
        raise OutOfRange(f'c must satisfy -{n} < c <= {n}')
    if (c - n) % 2 != 0:
        raise OutOfRange('c must have the parity of n')
    pi = make_generic(
        Multisegment.of([Segment(_R, -n, c - 2), Segment(_R, c, n)]),
        allow_adjacent=True,
    )
    pi2 = GenericSt(Multisegment.of([Segment(_R, -(n - 1), n - 1)]))
    m = Multisegment.of([Segment(_R, c + 1, n + 1)])
    n_ms = (
        Multisegment.of([Segment(_R, c + 1, n - 1)]) if c < n else EMPTY
    )
    return pi, pi2, _certify(pi, pi2, m, n_ms)


_SUITES: dict[str, Callable[..., tuple[RepParam, RepParam, Certificate]]] = {
    'trivial': _suite_trivial,
    'rankin_selberg': _suite_rankin_selberg,
    'qa_example': _suite_qa,
}


def example_suite(name: str, *params) -> tuple[RepParam, RepParam, Certificate]:
    """Worked certificate families, by name.

    * 'trivial', n: the size n+1 and size n full segments centered at zero.
    * 'rankin_selberg', d, d2: one-segment parameters with sizes off by one.
    * 'qa_example', n, c: the adjacent-pair parameter against the full
      segment of size n (arguments in half-units).
    """
    try:
        build = _SUITES[name]
    except KeyError:
        raise OutOfRange(f'unknown example family {name!r}') from None
    return build(*params)
