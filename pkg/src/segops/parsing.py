"""Text grammar for segments, multisegments, and operator expressions.

Coordinates are written in halves: ``[1/2,5/2]@r`` is the segment with
internal endpoints 1 and 5 on line r. Forms:

* segment        ``[a,b]@line``
* multisegment   ``{seg,seg,...}``
* parameters     ``St{...}``, ``Z<[a,b]@line>``, ``Zero``
* operators      ``D_R(seg, expr)``, ``I_L({...}, expr)`` and the L/R mirrors

Line declarations come from a small config header, one line each:

    line r weight 1 dual r

Undeclared names default to self-dual weight-1 lines. Operator calls are
evaluated while parsing; each application is appended to a trace so the
command layer can show its work. Syntax problems raise ParseError with a
position; domain failures from the operators (unsupported integral, zero
input) propagate unchanged.
"""

from __future__ import annotations

import re
from typing import Optional, Union

from .errors import NotASegment, NotPairwiseUnlinked, ParseError
from .operators import Side, derive, derive_multi, integrate, integrate_multi
from .reps import GenericSt, RepParam, ZSegment, ZeroRep, ZERO, make_generic, make_zsegment
from .segments import CuspidalLine, Multisegment, Segment

__all__ = [
    'LineTable',
    'parse_line_config',
    'parse_expr',
    'evaluate_expr',
    'print_expr',
]

ParseResult = Union[RepParam, Segment, Multisegment]


class LineTable:
    """Registry of cuspidal lines by name.

    Names never declared are materialized on first use as self-dual lines of
    weight 1. Declaring a line also registers its dual partner; conflicting
    redeclarations are rejected.
    """

    def __init__(self) -> None:
        self._by_name: dict[str, CuspidalLine] = {}

    def declare(self, name: str, *, weight: int = 1, dual: Optional[str] = None) -> CuspidalLine:
        dual = name if dual is None else dual
        line = CuspidalLine(name, dual, weight)
        partner = line.dual()
        for entry in (line, partner):
            old = self._by_name.get(entry.name)
            if old is not None and old != entry:
                raise ValueError(f'line {entry.name!r} already declared differently')
            self._by_name[entry.name] = entry
        return line

    def get(self, name: str) -> CuspidalLine:
        if name not in self._by_name:
            self._by_name[name] = CuspidalLine(name, name, 1)
        return self._by_name[name]


def parse_line_config(text: str) -> LineTable:
    """Parse a header block of ``line NAME [weight N] [dual NAME]`` rows.

    Blank lines and ``#`` comments are skipped.
    """
    table = LineTable()
    offset = 0
    for raw in text.splitlines(keepends=True):
        row = raw.strip()
        pos = offset
        offset += len(raw)
        if not row or row.startswith('#'):
            continue
        words = row.split()
        if words[0] != 'line' or len(words) < 2:
            raise ParseError(f'expected a line declaration, got {row!r}', pos)
        name = words[1]
        weight = 1
        dual: Optional[str] = None
        rest = words[2:]
        while rest:
            if rest[0] == 'weight' and len(rest) >= 2 and rest[1].isdigit():
                weight = int(rest[1])
            elif rest[0] == 'dual' and len(rest) >= 2:
                dual = rest[1]
            else:
                raise ParseError(f'bad line attribute {rest[0]!r}', pos)
            rest = rest[2:]
        try:
            table.declare(name, weight=weight, dual=dual)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    return table


_TOKEN = re.compile(r'\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[\[\]{}<>(),@/-]))')

_OPS = {
    'D_R': (derive, derive_multi, Side.R),
    'D_L': (derive, derive_multi, Side.L),
    'I_R': (integrate, integrate_multi, Side.R),
    'I_L': (integrate, integrate_multi, Side.L),
}


class _Parser:
    def __init__(self, text: str, lines: LineTable) -> None:
        # normalize the unicode minus so pasted text lexes
        self.text = text.replace('−', '-')
        self.lines = lines
        self.pos = 0
        self.trace: list[str] = []

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def next_token(self) -> tuple[str, str, int]:
        """Returns (kind, text, position); kind in num/name/punct/end."""
        self.skip_ws()
        if self.pos >= len(self.text):
            return ('end', '', self.pos)
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            raise self.error(f'unexpected character {self.text[self.pos]!r}')
        start = m.start(m.lastgroup)
        self.pos = m.end()
        return (m.lastgroup, m.group(m.lastgroup), start)

    def expect_punct(self, ch: str) -> None:
        kind, text, pos = self.next_token()
        if kind != 'punct' or text != ch:
            raise self.error(f'expected {ch!r}, found {text!r}', pos)

    def parse_half(self) -> int:
        """A coordinate in halves: INT, -INT, INT/2, -INT/2. Internal units."""
        kind, text, pos = self.next_token()
        sign = 1
        if kind == 'punct' and text == '-':
            sign = -1
            kind, text, pos = self.next_token()
        if kind != 'num':
            raise self.error(f'expected a number, found {text!r}', pos)
        value = sign * int(text)
        if self.peek() == '/':
            self.expect_punct('/')
            kind, text, pos = self.next_token()
            if kind != 'num' or text != '2':
                raise self.error('only halves are supported', pos)
            return value
        return 2 * value

    def parse_segment(self) -> Segment:
        start = self.pos
        self.expect_punct('[')
        a = self.parse_half()
        self.expect_punct(',')
        b = self.parse_half()
        self.expect_punct(']')
        self.expect_punct('@')
        kind, name, pos = self.next_token()
        if kind != 'name':
            raise self.error(f'expected a line name, found {name!r}', pos)
        try:
            return Segment(self.lines.get(name), a, b)
        except NotASegment as exc:
            raise self.error(str(exc), start) from None

    def parse_multisegment(self) -> Multisegment:
        self.expect_punct('{')
        items: list[Segment] = []
        if self.peek() != '}':
            items.append(self.parse_segment())
            while self.peek() == ',':
                self.expect_punct(',')
                items.append(self.parse_segment())
        self.expect_punct('}')
        return Multisegment.of(items)

    def parse_rep(self) -> RepParam:
        kind, name, pos = self.next_token()
        if kind != 'name':
            raise self.error(f'expected an expression, found {name!r}', pos)
        if name == 'Zero':
            return ZERO
        if name == 'St':
            ms = self.parse_multisegment()
            try:
                return make_generic(ms, allow_adjacent=True)
            except NotPairwiseUnlinked as exc:
                raise self.error(str(exc), pos) from None
        if name == 'Z':
            self.expect_punct('<')
            seg = self.parse_segment()
            self.expect_punct('>')
            return make_zsegment(seg)
        if name in _OPS:
            single, multi, side = _OPS[name]
            self.expect_punct('(')
            if self.peek() == '{':
                arg: Union[Segment, Multisegment] = self.parse_multisegment()
                apply = multi
            else:
                arg = self.parse_segment()
                apply = single
            self.expect_punct(',')
            inner = self.parse_rep()
            self.expect_punct(')')
            result = apply(inner, arg, side)
            self.trace.append(
                f'{name}({arg}): {print_expr(inner)} => {print_expr(result)}'
            )
            return result
        raise self.error(f'unknown form {name!r}', pos)

    def parse_top(self) -> ParseResult:
        ch = self.peek()
        if ch == '[':
            value: ParseResult = self.parse_segment()
        elif ch == '{':
            value = self.parse_multisegment()
        else:
            value = self.parse_rep()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f'trailing input {self.text[self.pos:]!r}')
        return value


def evaluate_expr(text: str, lines: Optional[LineTable] = None) -> tuple[ParseResult, tuple[str, ...]]:
    """Parse and evaluate, returning (value, operator application trace)."""
    parser = _Parser(text, lines if lines is not None else LineTable())
    value = parser.parse_top()
    return value, tuple(parser.trace)


def parse_expr(text: str, lines: Optional[LineTable] = None) -> ParseResult:
    """Parse a segment, multisegment, or parameter expression.

    Operator calls are evaluated; the result is the final value.
    """
    return evaluate_expr(text, lines)[0]


def print_expr(value: ParseResult) -> str:
    """Canonical text form; parse_expr inverts it."""
    if isinstance(value, ZeroRep):
        return 'Zero'
    if isinstance(value, GenericSt):
        return f'St{value.segments}'
    if isinstance(value, ZSegment):
        return f'Z<{value.segment}>'
    if isinstance(value, (Segment, Multisegment)):
        return str(value)
    raise TypeError(f'cannot print {value!r}')
