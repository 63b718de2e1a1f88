"""Command line interface.

Every command prints one JSON envelope with the keys
{"command", "inputs", "result", "reason", "trace"}:

* result: the command's value (verdict, certificate list, layers, report).
* reason: verdict reason, or the error message when the command failed.
* trace: operator applications performed while evaluating expressions.

Exit codes: 0 success, 1 a sweep found counterexamples, 2 parse error,
3 domain error (unsupported integral, zero input, bad sizes) on a direct
command.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .branching import Certificate, dualize_certificate, find_certificates
from .commutativity import (
    Outcome,
    TripleVerdict,
    comm_dual_rdli,
    comm_ldri,
    comm_rdli,
    strong_multi,
)
from .errors import ParseError, SegopsError
from .invariants import EtaVector, epsilon, eta, hd, level, mx
from .jacquet import JacquetLayer, factors_of, jacquet_layers
from .operators import Side, derive_multi
from .parsing import LineTable, evaluate_expr, parse_line_config, print_expr
from .reps import RepParam, ZeroRep, isomorphic, shift_rep
from .segments import Multisegment, Segment
from .sweep import SweepConfig, run_sweep

__all__ = ['main']


def _envelope(command: str, inputs: dict, result, reason, trace) -> str:
    body = {
        'command': command,
        'inputs': inputs,
        'result': result,
        'reason': reason,
        'trace': list(trace),
    }
    return json.dumps(body, sort_keys=True, indent=2)


def _side(text: str) -> Side:
    name = text.upper()
    if name not in ('L', 'R'):
        raise ParseError(f'side must be L or R, got {text!r}')
    return Side[name]


def _want_segment(value, text: str) -> Segment:
    if not isinstance(value, Segment):
        raise ParseError(f'expected a segment, got {text!r}')
    return value


def _want_multisegment(value, text: str) -> Multisegment:
    if not isinstance(value, Multisegment):
        raise ParseError(f'expected a multisegment, got {text!r}')
    return value


def _want_rep(value, text: str) -> RepParam:
    if isinstance(value, (Segment, Multisegment)):
        raise ParseError(f'expected a parameter expression, got {text!r}')
    return value


def _verdict_json(v: TripleVerdict) -> dict:
    witness = v.witness
    if isinstance(witness, tuple) and all(
        isinstance(w, EtaVector) for w in witness
    ):
        rendered = [str(w) for w in witness]
    elif isinstance(witness, (Segment, Multisegment)):
        rendered = str(witness)
    else:
        rendered = witness
    return {
        'outcome': v.outcome.value,
        'reason': v.reason.value,
        'witness': rendered,
    }


def _cert_json(cert: Certificate) -> dict:
    return {
        'm': str(cert.m),
        'n': str(cert.n),
        'common': print_expr(cert.common),
        'verdict': _verdict_json(cert.verdict),
    }


def _layer_json(layer: JacquetLayer) -> dict:
    def block(pieces) -> list[str]:
        return [f'{tag}({seg})' for tag, seg in pieces]

    return {
        'first': block(layer.first),
        'second': block(layer.second),
        'index': [list(row) for row in layer.index.rows],
    }


def _cmd_eval(args, lines: LineTable) -> tuple[dict, object, Optional[str], tuple]:
    words = list(args.words)
    what = words[0] if words else ''
    trace: tuple = ()
    if what in ('eps', 'eta', 'mx'):
        if len(words) != 4:
            raise ParseError(f'eval {what} needs: side segment expr')
        side = _side(words[1])
        seg, t1 = evaluate_expr(words[2], lines)
        seg = _want_segment(seg, words[2])
        pi, t2 = evaluate_expr(words[3], lines)
        pi = _want_rep(pi, words[3])
        trace = t1 + t2
        if what == 'eps':
            result: object = epsilon(pi, seg, side)
        elif what == 'eta':
            vec = eta(pi, seg, side)
            result = {
                'base': str(vec.base),
                'side': vec.side.name,
                'values': list(vec.values),
            }
        else:
            result = str(mx(pi, seg, side))
        inputs = {
            'what': what,
            'side': side.name,
            'segment': words[2],
            'expr': words[3],
        }
        return inputs, result, None, trace
    if what in ('hd', 'level'):
        if len(words) != 2:
            raise ParseError(f'eval {what} needs: expr')
        pi, trace = evaluate_expr(words[1], lines)
        pi = _want_rep(pi, words[1])
        result = level(pi) if what == 'level' else str(hd(pi))
        return {'what': what, 'expr': words[1]}, result, None, trace
    if len(words) != 1:
        raise ParseError('eval needs one expression or a named invariant')
    value, trace = evaluate_expr(words[0], lines)
    return {'expr': words[0]}, print_expr(value), None, trace


def _cmd_check_triple(args, lines: LineTable) -> tuple[dict, object, Optional[str], tuple]:
    d1 = _want_segment(*_evaled(args.d1, lines))
    d2 = _want_segment(*_evaled(args.d2, lines))
    pi, trace = evaluate_expr(args.pi, lines)
    pi = _want_rep(pi, args.pi)
    fn = {'rdli': comm_rdli, 'dual': comm_dual_rdli, 'ldri': comm_ldri}[args.variant]
    verdict = fn(d1, d2, pi)
    inputs = {'d1': args.d1, 'd2': args.d2, 'pi': args.pi, 'variant': args.variant}
    return inputs, _verdict_json(verdict), verdict.reason.value, trace


def _evaled(text: str, lines: LineTable):
    value, _ = evaluate_expr(text, lines)
    return value, text


def _cmd_relevant(args, lines: LineTable) -> tuple[dict, object, Optional[str], tuple]:
    pi = _want_rep(*_evaled(args.pi, lines))
    pi2 = _want_rep(*_evaled(args.pi2, lines))
    result = find_certificates(pi, pi2, max_labs=args.max_labs)
    body = {
        'certificates': [_cert_json(c) for c in result.certificates],
        'unknown': [_cert_json(c) for c in result.unknowns],
    }
    inputs = {'pi': args.pi, 'pi2': args.pi2, 'max_labs': args.max_labs}
    return inputs, body, None, ()


def _cmd_dualize(args, lines: LineTable) -> tuple[dict, object, Optional[str], tuple]:
    pi = _want_rep(*_evaled(args.pi, lines))
    pi2 = _want_rep(*_evaled(args.pi2, lines))
    m = _want_multisegment(*_evaled(args.m, lines))
    n = _want_multisegment(*_evaled(args.n, lines))
    sigma = shift_rep(pi, 1)
    value = derive_multi(sigma, m, Side.R)
    other = derive_multi(pi2, n, Side.L)
    if isinstance(value, ZeroRep) or not isomorphic(value, other):
        raise SegopsError('the given pair is not a certificate: chains differ')
    verdict = strong_multi(m, n, sigma)
    cert = Certificate(m, n, value, verdict)
    if verdict.outcome is not Outcome.TRUE:
        raise SegopsError(f'the given pair does not verify: {verdict}')
    flipped = dualize_certificate(cert, pi, pi2)
    inputs = {'pi': args.pi, 'pi2': args.pi2, 'm': args.m, 'n': args.n}
    return inputs, _cert_json(flipped), None, ()


def _cmd_jacquet(args, lines: LineTable) -> tuple[dict, object, Optional[str], tuple]:
    pi, trace = evaluate_expr(args.expr, lines)
    pi = _want_rep(pi, args.expr)
    layers = jacquet_layers(factors_of(pi), args.k)
    result = [_layer_json(layer) for layer in layers]
    return {'expr': args.expr, 'k': args.k}, result, None, trace


def _cmd_sweep(args, lines: LineTable) -> tuple[dict, object, Optional[str], tuple]:
    try:
        lo_text, hi_text = args.window.split(':')
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise ParseError(f'window must be LO:HI, got {args.window!r}') from None
    cfg = SweepConfig(
        lo=lo,
        hi=hi,
        max_labs=args.max_labs,
        backends=tuple(args.backends.split(',')) if args.backends else ('generic', 'zsegment'),
        properties=tuple(args.properties.split(',')) if args.properties else (),
        jobs=args.jobs,
    )
    report = run_sweep(cfg)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as fh:
            fh.write(report.to_json() + '\n')
    inputs = {
        'window': args.window,
        'max_labs': args.max_labs,
        'backends': args.backends,
        'properties': args.properties,
        'jobs': args.jobs,
    }
    reason = (
        f'{report.counterexample_count} counterexamples'
        if report.counterexample_count
        else None
    )
    return inputs, json.loads(report.to_json()), reason, ()


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog='segops', description=__doc__)
    top.add_argument('--lines', help='path to a line declaration file')
    top.add_argument(
        '--json',
        action='store_true',
        help='emit the JSON envelope (always on; flag kept for scripts)',
    )
    sub = top.add_subparsers(dest='command', required=True)

    p = sub.add_parser('eval', help='evaluate an expression or an invariant')
    p.add_argument('words', nargs='+')

    p = sub.add_parser('check-triple', help='commutativity verdict for a triple')
    p.add_argument('--d1', required=True)
    p.add_argument('--d2', required=True)
    p.add_argument('--pi', required=True)
    p.add_argument('--variant', choices=('rdli', 'dual', 'ldri'), default='rdli')

    p = sub.add_parser('relevant', help='search commuting removal certificates')
    p.add_argument('--pi', required=True)
    p.add_argument('--pi2', required=True)
    p.add_argument('--max-labs', type=int, default=None)

    p = sub.add_parser('dualize', help='transport a certificate to the dual pair')
    p.add_argument('--pi', required=True)
    p.add_argument('--pi2', required=True)
    p.add_argument('--m', required=True)
    p.add_argument('--n', required=True)

    p = sub.add_parser('jacquet', help='enumerate restriction layers')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('expr')

    p = sub.add_parser('sweep', help='check properties over a window')
    p.add_argument('--window', required=True, help='LO:HI in half-units')
    p.add_argument('--max-labs', type=int, default=6)
    p.add_argument('--backends', default='')
    p.add_argument('--properties', default='')
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--out', default='', help='also write the report to a file')
    return top


_COMMANDS = {
    'eval': _cmd_eval,
    'check-triple': _cmd_check_triple,
    'relevant': _cmd_relevant,
    'dualize': _cmd_dualize,
    'jacquet': _cmd_jacquet,
    'sweep': _cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    lines = LineTable()
    command = args.command
    try:
        if args.lines:
            with open(args.lines, encoding='utf-8') as fh:
                lines = parse_line_config(fh.read())
        inputs, result, reason, trace = _COMMANDS[command](args, lines)
    except ParseError as exc:
        print(_envelope(command, {}, None, str(exc), ()))
        return 2
    except SegopsError as exc:
        print(_envelope(command, {}, None, str(exc), ()))
        return 3
    print(_envelope(command, inputs, result, reason, trace))
    if command == 'sweep' and isinstance(result, dict):
        bad = sum(
            len(prop['counterexamples'])
            for prop in result.get('properties', {}).values()
        )
        if bad:
            return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
