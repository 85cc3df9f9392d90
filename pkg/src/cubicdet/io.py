"""Bit-exact text and JSON serialization of cubic matrices.

Text format (mirrors how the vertical layers read side by side)::

    2
    4 -3
    -1 5

    -2 4
    -7 3

First non-blank line: the order n (1, 2, or 3).  Then n blocks, one per
vertical layer k, separated by blank lines; each block is n lines of n
whitespace-separated scalar literals.  A literal is an optionally signed
integer, or ``p/q`` with positive q.  Floats do not exist in this format.

JSON format::

    {"order": 2, "layers": [[[4, -3], [-1, 5]], [[-2, 4], [-7, 3]]]}

``layers[k-1][i-1][j-1]`` is the entry at (i, j, k); values are JSON
integers or ``"p/q"`` strings.  Floats are rejected outright (silent
rounding would break exactness).

Serialization is canonical for both formats (equal matrices always
produce byte-identical output) and ``parse(serialize(A)) == A`` holds
exactly.  Every parse error names a 1-based location.
"""

from __future__ import annotations

import json
import re

from .core3d import (
    NOT_CUBIC_MESSAGE,
    ORDER_TOO_HIGH_MESSAGE,
    CubicMatrix,
    Scalar,
    ScalarOverflowError,
)

__all__ = ["ParseError", "parse_text", "serialize_text", "parse_json", "serialize_json"]


class ParseError(ValueError):
    """Malformed matrix input; the message carries a 1-based location."""


_LITERAL = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def _parse_literal(token: str, where: str) -> Scalar:
    match = _LITERAL.match(token)
    if match is None:
        raise ParseError(f"{where}: bad scalar {token!r} (expected an integer or p/q)")
    num = int(match.group(1))
    den = 1
    if match.group(2) is not None:
        den = int(match.group(2))
        if den == 0:
            raise ParseError(f"{where}: zero denominator in {token!r}")
    try:
        return Scalar(num, den)
    except ScalarOverflowError as err:
        raise ParseError(f"{where}: {err}") from None


def _parse_order_token(token: str, where: str) -> int:
    try:
        order = int(token)
    except ValueError:
        raise ParseError(f"{where}: order must be an integer, got {token!r}") from None
    if order > 3:
        raise ParseError(f"{where}: order {order} not supported: {ORDER_TOO_HIGH_MESSAGE}")
    if order < 1:
        raise ParseError(f"{where}: order must be at least 1, got {order}")
    return order


def parse_text(text: str) -> CubicMatrix:
    """Parse the text format.  Accepts LF or CRLF; blank lines between
    blocks may repeat; leading/trailing blank lines are ignored."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    rows = [(number, line.rstrip("\r")) for number, line in enumerate(lines, start=1)]

    pos = 0
    while pos < len(rows) and rows[pos][1].strip() == "":
        pos += 1
    if pos == len(rows):
        raise ParseError("line 1: empty input, expected an order line")
    lineno, line = rows[pos]
    tokens = line.split()
    if len(tokens) != 1:
        raise ParseError(f"line {lineno}: expected a single order token, got {len(tokens)}")
    order = _parse_order_token(tokens[0], f"line {lineno}")
    pos += 1

    layers = []
    for k in range(1, order + 1):
        while pos < len(rows) and rows[pos][1].strip() == "":
            pos += 1
        block = []
        for i in range(1, order + 1):
            if pos >= len(rows) or rows[pos][1].strip() == "":
                where = f"line {rows[pos][0]}" if pos < len(rows) else f"line {len(rows) + 1}"
                raise ParseError(
                    f"{where}: vertical layer {k} is missing row {i} of {order}: {NOT_CUBIC_MESSAGE}"
                )
            lineno, line = rows[pos]
            tokens = line.split()
            if len(tokens) != order:
                raise ParseError(
                    f"line {lineno}: vertical layer {k} row {i} has {len(tokens)} entries, "
                    f"expected {order}: {NOT_CUBIC_MESSAGE}"
                )
            block.append(
                [
                    _parse_literal(tok, f"line {lineno}: vertical layer {k} row {i} column {j}")
                    for j, tok in enumerate(tokens, start=1)
                ]
            )
            pos += 1
        layers.append(block)

    while pos < len(rows) and rows[pos][1].strip() == "":
        pos += 1
    if pos < len(rows):
        raise ParseError(
            f"line {rows[pos][0]}: expected {order} vertical layers but found more content: "
            f"{NOT_CUBIC_MESSAGE}"
        )
    return CubicMatrix(order, layers)


def _literal(value: Scalar) -> str:
    return str(value.num) if value.den == 1 else f"{value.num}/{value.den}"


def serialize_text(A: CubicMatrix) -> str:
    """Canonical text form: single spaces, one blank line between
    blocks, reduced p/q literals, LF endings, one trailing newline."""
    blocks = [
        "\n".join(" ".join(_literal(v) for v in row) for row in block)
        for block in A.layers()
    ]
    return f"{A.order}\n" + "\n\n".join(blocks) + "\n"


class _Float(str):
    # Marker for floating-point literals met during JSON parsing; kept
    # as text so the rejection error can point at the exact entry.
    pass


def parse_json(text: str) -> CubicMatrix:
    """Parse the JSON format; floats are rejected wherever they appear."""
    try:
        doc = json.loads(text, parse_float=_Float, parse_constant=_Float)
    except json.JSONDecodeError as err:
        raise ParseError(f"line {err.lineno} column {err.colno}: {err.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"line 1: expected a JSON object, got {type(doc).__name__}")
    if "order" not in doc:
        raise ParseError('line 1: missing "order"')
    if "layers" not in doc:
        raise ParseError('line 1: missing "layers"')
    raw_order = doc["order"]
    if isinstance(raw_order, _Float):
        raise ParseError(f'"order": float literal not permitted, got {str.__str__(raw_order)!r}')
    if isinstance(raw_order, bool) or not isinstance(raw_order, int):
        raise ParseError(f'"order": expected an integer, got {raw_order!r}')
    order = _parse_order_token(str(raw_order), '"order"')

    raw_layers = doc["layers"]
    if not isinstance(raw_layers, list):
        raise ParseError('"layers": expected a list of vertical layers')
    if len(raw_layers) != order:
        raise ParseError(
            f'"layers": got {len(raw_layers)} vertical layers, expected {order}: {NOT_CUBIC_MESSAGE}'
        )
    layers = []
    for k, raw_block in enumerate(raw_layers, start=1):
        if not isinstance(raw_block, list) or len(raw_block) != order:
            got = len(raw_block) if isinstance(raw_block, list) else type(raw_block).__name__
            raise ParseError(
                f"vertical layer {k}: got {got} rows, expected {order}: {NOT_CUBIC_MESSAGE}"
            )
        block = []
        for i, raw_row in enumerate(raw_block, start=1):
            if not isinstance(raw_row, list) or len(raw_row) != order:
                got = len(raw_row) if isinstance(raw_row, list) else type(raw_row).__name__
                raise ParseError(
                    f"vertical layer {k} row {i}: got {got} entries, expected {order}: "
                    f"{NOT_CUBIC_MESSAGE}"
                )
            row = []
            for j, raw in enumerate(raw_row, start=1):
                where = f"vertical layer {k} row {i} column {j}"
                if isinstance(raw, _Float):
                    raise ParseError(f"{where}: float literal not permitted, got {str.__str__(raw)!r}")
                if isinstance(raw, bool):
                    raise ParseError(f"{where}: expected an integer or 'p/q' string, got {raw!r}")
                if isinstance(raw, int):
                    try:
                        row.append(Scalar(raw))
                    except ScalarOverflowError as err:
                        raise ParseError(f"{where}: {err}") from None
                elif isinstance(raw, str):
                    row.append(_parse_literal(raw, where))
                else:
                    raise ParseError(f"{where}: expected an integer or 'p/q' string, got {raw!r}")
            block.append(row)
        layers.append(block)
    return CubicMatrix(order, layers)


def serialize_json(A: CubicMatrix) -> str:
    """Canonical JSON form: {"order": n, "layers": [...]} on one line,
    integer entries as JSON integers, others as "p/q" strings."""
    layers = [
        [[v.num if v.den == 1 else _literal(v) for v in row] for row in block]
        for block in A.layers()
    ]
    return json.dumps({"order": A.order, "layers": layers})
