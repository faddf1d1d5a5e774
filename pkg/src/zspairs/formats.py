"""Text and JSON grammars for multisets, pairs, derivation plans, and chains.

Text multiset: space-separated `value^count` runs, `^1` optional, e.g.
`7^3 1^2`.  Text pair: `A | B`.  JSON pair: {"A": [[7,3],[1,2]], "B": ...}.
Plan: semicolon-separated `a,b^count` triples, e.g. `7,6^2;7,5`.  Chain:
`a,b;a,b` applied left to right.

Emission is always canonical (values descending, merged runs, `^1`
elided), so emit(parse(s)) == s for canonical s and parse(emit(x)) == x
always.  Parsers accept runs in any order and normalize.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .core import Multiset, Pair, normalize, pair_canonical


class FormatError(ValueError):
    """Unparseable input; `position` is the 0-based character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"at column {position}: {message}")
        self.position = position


_RUN_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")
_STEP_RE = re.compile(r"^(\d+),(\d+)(?:\^(\d+))?$")


def _tokens(text: str, offset: int = 0) -> list[tuple[int, str]]:
    out = []
    i = 0
    for tok in text.split(" "):
        if tok:
            out.append((offset + i, tok))
        i += len(tok) + 1
    return out


def parse_multiset(text: str, offset: int = 0) -> Multiset:
    """Parse `v^c v^c ...`; offset shifts reported error positions."""
    toks = _tokens(text, offset)
    if not toks:
        raise FormatError("expected a multiset, got nothing", offset)
    raw = []
    for pos, tok in toks:
        m = _RUN_RE.match(tok)
        if not m:
            raise FormatError(f"expected value^count, got {tok!r}", pos)
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if value <= 0:
            raise FormatError(f"value must be positive, got {value}", pos)
        if count <= 0:
            raise FormatError(f"count must be positive, got {count}", pos)
        raw.append((value, count))
    return normalize(raw)


def parse_pair(text: str) -> Pair:
    """Parse `A | B` into a canonical Pair."""
    if "|" not in text:
        raise FormatError("missing '|' between the two multisets", len(text))
    left, _, right = text.partition("|")
    a = parse_multiset(left.rstrip())
    b = parse_multiset(right.lstrip(), offset=len(left) + 1 + _lead_ws(right))
    return pair_canonical(a, b)


def _lead_ws(s: str) -> int:
    return len(s) - len(s.lstrip())


def format_multiset(ms: Multiset) -> str:
    return " ".join(f"{v}^{c}" if c > 1 else str(v) for v, c in ms.runs)


def format_pair(p: Pair) -> str:
    return f"{format_multiset(p.a)} | {format_multiset(p.b)}"


def pair_to_obj(p: Pair) -> dict[str, list[list[int]]]:
    return {"A": [[v, c] for v, c in p.a.runs], "B": [[v, c] for v, c in p.b.runs]}


def pair_to_json(p: Pair) -> str:
    return json.dumps(pair_to_obj(p), separators=(",", ":"))


def pair_from_obj(obj: Any) -> Pair:
    if not isinstance(obj, dict) or set(obj) != {"A", "B"}:
        raise FormatError('expected an object with exactly the keys "A" and "B"')
    sides = []
    for key in ("A", "B"):
        runs = obj[key]
        if not isinstance(runs, list) or not all(
            isinstance(r, list) and len(r) == 2 and all(isinstance(x, int) for x in r)
            for r in runs
        ):
            raise FormatError(f'key "{key}" must be a list of [value, count] pairs')
        sides.append(normalize((v, c) for v, c in runs))
    return pair_canonical(sides[0], sides[1])


def pair_from_json(text: str) -> Pair:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", e.pos) from e
    return pair_from_obj(obj)


def parse_plan(text: str) -> list[tuple[int, int, int]]:
    """Parse `a,b^c;a,b;...` into (a, b, count) steps, count defaulting to 1."""
    steps = []
    pos = 0
    for piece in text.split(";"):
        tok = piece.strip()
        if not tok:
            raise FormatError("empty plan step", pos)
        m = _STEP_RE.match(tok)
        if not m:
            raise FormatError(f"expected a,b or a,b^count, got {tok!r}", pos)
        a, b = int(m.group(1)), int(m.group(2))
        count = int(m.group(3)) if m.group(3) else 1
        if a <= 0 or b <= 0:
            raise FormatError("plan values must be positive", pos)
        if count <= 0:
            raise FormatError(f"count must be positive, got {count}", pos)
        steps.append((a, b, count))
        pos += len(piece) + 1
    return steps


def parse_chain(text: str) -> list[tuple[int, int]]:
    """Parse `a,b;a,b;...` into ordered (a, b) steps; `^count` is not allowed."""
    chain = []
    pos = 0
    for piece in text.split(";"):
        tok = piece.strip()
        if not tok:
            raise FormatError("empty chain step", pos)
        m = _STEP_RE.match(tok)
        if not m or m.group(3):
            raise FormatError(f"expected a,b, got {tok!r}", pos)
        a, b = int(m.group(1)), int(m.group(2))
        if a <= 0 or b <= 0:
            raise FormatError("chain values must be positive", pos)
        chain.append((a, b))
        pos += len(piece) + 1
    return chain
