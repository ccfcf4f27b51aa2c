"""
< Line-oriented LP text format >

    # comments and blank lines are ignored
    vars 3
    min 0 0 1/2
    1 1 1 = 1
    -1 0 0 <= 0
    0 1 0 >= 1/3

1. `vars n` must come first, `min c1 .. cn` second; both exactly once.
2. Each constraint line holds n coefficients, a sense (`=`, `<=`, `>=`) and a right-hand side.
3. Rationals are written `p/q` or `p`; decimals are rejected to keep the data exact.
4. `>=` rows are stored negated as `<=` rows. Equality and inequality rows keep their file order
   within their block; `format_lp` writes equalities first, so parse → format → parse is stable.
"""

from __future__ import annotations

from fractions import Fraction

from lpsym.exceptions import LpParseError
from lpsym.linalg import format_rat, to_rat

from .builder import LpBuilder
from .model import LinearProgram

_SENSES = ('<=', '>=', '=')


def _rat(token: str, line_no: int) -> Fraction:
    try:
        return to_rat(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise LpParseError(f'not an exact rational: {token!r}', line_no) from exc


def parse_lp(text: str) -> LinearProgram:
    builder: LpBuilder | None = None
    seen_objective = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0].lower()
        if builder is None:
            if head != 'vars' or len(tokens) != 2:
                raise LpParseError('expected header `vars n`', line_no)
            try:
                n = int(tokens[1])
            except ValueError as exc:
                raise LpParseError(f'bad variable count {tokens[1]!r}', line_no) from exc
            if n < 0:
                raise LpParseError('variable count must be non-negative', line_no)
            builder = LpBuilder(n)
            continue
        if head == 'vars':
            raise LpParseError('duplicate `vars` header', line_no)
        if head == 'min':
            if seen_objective:
                raise LpParseError('duplicate objective line', line_no)
            coeffs = tokens[1:]
            if len(coeffs) != builder.n:
                raise LpParseError(f'objective has {len(coeffs)} coefficients, expected {builder.n}', line_no)
            builder.minimize([_rat(t, line_no) for t in coeffs])
            seen_objective = True
            continue
        if not seen_objective:
            raise LpParseError('expected `min c1 .. cn` before constraints', line_no)
        sense_at = [i for i, t in enumerate(tokens) if t in _SENSES]
        if len(sense_at) != 1:
            raise LpParseError('constraint needs exactly one of =, <=, >=', line_no)
        pos = sense_at[0]
        coeffs, sense, rhs_tokens = tokens[:pos], tokens[pos], tokens[pos + 1 :]
        if len(coeffs) != builder.n or len(rhs_tokens) != 1:
            raise LpParseError(f'constraint must have {builder.n} coefficients and one right-hand side', line_no)
        row = [_rat(t, line_no) for t in coeffs]
        rhs = _rat(rhs_tokens[0], line_no)
        if sense == '=':
            builder.equal(row, rhs)
        elif sense == '<=':
            builder.at_most(row, rhs)
        else:
            builder.at_least(row, rhs)
    if builder is None:
        raise LpParseError('empty input: missing `vars n` header')
    if not seen_objective:
        raise LpParseError('missing objective line `min c1 .. cn`')
    return builder.build()


def format_lp(lp: LinearProgram) -> str:
    lines = [f'vars {lp.n}', 'min ' + ' '.join(format_rat(x) for x in lp.c)]
    for i in range(lp.A.rows):
        lines.append(' '.join(format_rat(x) for x in lp.A.row(i)) + f' = {format_rat(lp.b[i])}')
    for i in range(lp.B.rows):
        lines.append(' '.join(format_rat(x) for x in lp.B.row(i)) + f' <= {format_rat(lp.d[i])}')
    return '\n'.join(lines) + '\n'
