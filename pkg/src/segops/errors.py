"""Exception hierarchy for the segment operator calculus.

Every domain failure raised by this package derives from :class:`SegopsError`,
so callers can catch one base class at API boundaries (the CLI maps them to
exit codes). Each subclass marks one contract violation; none of them is ever
used for control flow that a return value could express, with the single
exception of :class:`UnsupportedDomain`, which is part of the integral
operator's contract (integrals are partial maps on the generic class).
"""

from __future__ import annotations

__all__ = [
    'SegopsError',
    'NotASegment',
    'NotPairwiseUnlinked',
    'ZeroRepInput',
    'UnsupportedDomain',
    'InvalidComparison',
    'NegativeMultiplicity',
    'ZeroDerivativeChain',
    'SizeMismatch',
    'DualVerificationFailed',
    'OutOfRange',
    'BadSize',
    'ShapeMismatch',
    'ParseError',
]


class SegopsError(Exception):
    """Base class for all errors raised by segops."""


class NotASegment(SegopsError):
    """Endpoint data does not describe a segment (order or step violation)."""


class NotPairwiseUnlinked(SegopsError):
    """A multisegment payload contains a linked pair where none is allowed."""


class ZeroRepInput(SegopsError):
    """The zero representation parameter was passed where a nonzero one is required."""


class UnsupportedDomain(SegopsError):
    """An integral operator was applied outside its supported domain."""


class InvalidComparison(SegopsError):
    """Eta vectors with different base data cannot be compared entrywise."""


class NegativeMultiplicity(SegopsError):
    """Head-multisegment extraction produced a negative multiplicity.

    This never happens for the supported parameter classes; it is a hard
    consistency guard, not a recoverable condition.
    """


class ZeroDerivativeChain(SegopsError):
    """A multi-derivative chain hit zero where the caller required nonzero prefixes."""


class SizeMismatch(SegopsError):
    """Certificate search requires total sizes differing by exactly one."""


class DualVerificationFailed(SegopsError):
    """A dualized certificate did not re-verify; indicates an internal defect."""


class OutOfRange(SegopsError):
    """A worked-example generator was called with parameters outside its family."""


class BadSize(SegopsError):
    """A restriction-layer request used a size outside the valid range."""


class ShapeMismatch(SegopsError):
    """Layer index composition was attempted with incompatible shapes."""


class ParseError(SegopsError):
    """Expression text could not be parsed.

    position: byte offset into the input where the failure was detected.
    """

    def __init__(self, message: str, position: int = 0) -> None:
        super().__init__(f'{message} (at position {position})')
        self.message = message
        self.position = position
