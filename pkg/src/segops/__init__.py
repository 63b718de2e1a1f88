"""Symbolic calculus of derivative and integral operators on multisegments.

The package models representation parameters (generic multisegment
parameters and one-segment degenerate parameters), the one-segment
derivative/integral operators on them, the epsilon/eta/mx/hd invariants,
decidable commutativity predicates, restriction-layer enumeration, and a
search for commuting removal certificates between parameters of adjacent
sizes, with a CLI and an exhaustive property sweep on top.

All coordinates are half-units: the integer k stands for the exponent k/2,
so a whole twist step is 2. The text grammar writes halves explicitly
([1/2,5/2]@r).
"""

from .branching import (
    Certificate,
    SearchResult,
    dualize_certificate,
    example_suite,
    find_certificates,
)
from .commutativity import (
    Outcome,
    Reason,
    TripleVerdict,
    comm_dual_rdli,
    comm_ldri,
    comm_rdli,
    strong_multi,
)
from .errors import (
    BadSize,
    DualVerificationFailed,
    InvalidComparison,
    NegativeMultiplicity,
    NotASegment,
    NotPairwiseUnlinked,
    OutOfRange,
    ParseError,
    SegopsError,
    ShapeMismatch,
    SizeMismatch,
    UnsupportedDomain,
    ZeroDerivativeChain,
    ZeroRepInput,
)
from .invariants import (
    EtaVector,
    epsilon,
    epsilon_iterated,
    eta,
    eta_compare,
    eta_is_zero,
    hd,
    level,
    mx,
)
from .jacquet import (
    Factor,
    JacquetLayer,
    LayerIndex,
    OrbitCmp,
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
from .operators import (
    Side,
    chain_order,
    derive,
    derive_multi,
    integrate,
    integrate_multi,
)
from .parsing import (
    LineTable,
    evaluate_expr,
    parse_expr,
    parse_line_config,
    print_expr,
)
from .reps import (
    ZERO,
    GenericSt,
    RepParam,
    ZeroRep,
    ZSegment,
    canonical_key,
    csupp,
    dual_rep,
    isomorphic,
    l_abs_rep,
    make_generic,
    make_zsegment,
    shift_rep,
)
from .segments import (
    EMPTY,
    CuspidalLine,
    Multisegment,
    Segment,
    SegmentRelation,
    admissible_orders,
    canonical_admissible_order,
    dominates,
    intersection_of,
    is_admissible_order,
    is_saturated_wrt,
    relation,
    union_of,
)
from .sweep import (
    PROPERTIES,
    PropertyOutcome,
    SweepConfig,
    SweepReport,
    enumerate_params,
    enumerate_segments,
    run_property,
    run_sweep,
)

__version__ = '0.1.0'
