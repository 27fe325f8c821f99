"""Text syntax for arc regions.

::

    region := term { "|" term }
    term   := "arcs" "{" [arc {"," arc}] "}"
            | "box" "(" range "," range ["," "diag" range] ")"
            | "lower" "(" INT ")" | "upper" "(" INT ")"
            | "leftray" "(" INT "," INT ")" | "rightray" "(" INT "," INT ")"
            | "all" | "empty" | "shift" "(" INT "," region ")"
            | "not" "(" region ")" | "(" region ")"
    range  := ("[" | "(") (INT | "-inf") "," (INT | "+inf") ("]" | ")")

Whitespace is insignificant.  ``format_region`` emits this syntax, preferring
the sugar forms, and ``parse_region(format_region(r)) == r`` always holds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arcs import Arc
from .errors import InvalidArc
from .intervals import INF, IntInterval
from .region import (
    FULL,
    ArcRegion,
    Trapezoid,
    box,
    leftray,
    lower,
    rightray,
    upper,
)


class DslError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class DslSyntaxError(DslError):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.expected = frozenset(expected)
        if expected:
            message = f"{message}; expected one of {', '.join(sorted(self.expected))}"
        super().__init__(message, line, col)


class DslSemanticError(DslError):
    pass


@dataclass
class _Tok:
    kind: str  # "int", "word", "inf", "sym", "eof"
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"(?P<ws>\s+)|(?P<inf>[+-]inf\b)|(?P<int>-?\d+)|(?P<word>[A-Za-z_]+)|(?P<sym>[{}()\[\],|])")


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "ws":
            for i, ch in enumerate(chunk):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            toks.append(_Tok(kind, chunk, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "<end of input>", line, pos - line_start + 1))
    return toks


@dataclass
class _Parser:
    toks: list
    pos: int = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.pos]

    def fail(self, expected) -> None:
        t = self.tok
        raise DslSyntaxError(f"unexpected {t.text!r}", t.line, t.col, expected)

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind in ("sym", "word"):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> _Tok:
        t = self.tok
        if not self.accept(text):
            self.fail({repr(text)})
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            self.fail({"INT"})
        self.pos += 1
        return int(t.text)

    def region(self) -> ArcRegion:
        out = self.term()
        while self.accept("|"):
            out = out | self.term()
        return out

    def term(self) -> ArcRegion:
        t = self.tok
        if t.kind == "word" and t.text in _TERMS:
            self.pos += 1
            return _TERMS[t.text](self, t)
        if self.accept("("):
            inner = self.region()
            self.expect(")")
            return inner
        self.fail({"'('"} | {repr(k) for k in _TERMS})

    def arc(self) -> Arc:
        start = self.expect("(")
        m = self.integer()
        self.expect(",")
        n = self.integer()
        self.expect(")")
        try:
            return Arc(m, n)
        except InvalidArc as exc:
            raise DslSemanticError(str(exc), start.line, start.col) from None

    def range_(self) -> IntInterval:
        start = self.tok
        if not (self.accept("[") or self.accept("(")):
            self.fail({"'['", "'('"})
        lo_open = start.text == "("
        t = self.tok
        if t.kind == "inf" and t.text == "-inf":
            self.pos += 1
            lo = -INF
        elif t.kind == "int":
            lo = self.integer() + (1 if lo_open else 0)
        else:
            self.fail({"INT", "'-inf'"})
        self.expect(",")
        t = self.tok
        if (t.kind == "inf" and t.text == "+inf") or (t.kind == "word" and t.text == "inf"):
            self.pos += 1
            hi = INF
            hi_open = None
        elif t.kind == "int":
            hi = self.integer()
            hi_open = True
        else:
            self.fail({"INT", "'+inf'"})
        close = self.tok
        if not (self.accept("]") or self.accept(")")):
            self.fail({"']'", "')'"})
        if hi_open is not None and close.text == ")":
            hi -= 1
        iv = IntInterval.make(lo, hi)
        if iv is None:
            raise DslSemanticError(f"inverted or empty range {lo}..{hi}", start.line, start.col)
        return iv


def _t_arcs(p: _Parser, t: _Tok) -> ArcRegion:
    p.expect("{")
    arcs = []
    if not p.accept("}"):
        arcs.append(p.arc())
        while p.accept(","):
            arcs.append(p.arc())
        p.expect("}")
    return ArcRegion.from_arcs(arcs)


def _t_box(p: _Parser, t: _Tok) -> ArcRegion:
    p.expect("(")
    mi = p.range_()
    p.expect(",")
    ni = p.range_()
    diag = None
    if p.accept(","):
        p.expect("diag")
        diag = p.range_()
    p.expect(")")
    return box(mi, ni, diag)


def _one_int(fn):
    def parse(p: _Parser, t: _Tok) -> ArcRegion:
        p.expect("(")
        x = p.integer()
        p.expect(")")
        return fn(x)

    return parse


def _two_ints(fn):
    def parse(p: _Parser, t: _Tok) -> ArcRegion:
        p.expect("(")
        x = p.integer()
        p.expect(",")
        y = p.integer()
        p.expect(")")
        return fn(x, y)

    return parse


def _t_shift(p: _Parser, t: _Tok) -> ArcRegion:
    p.expect("(")
    k = p.integer()
    p.expect(",")
    inner = p.region()
    p.expect(")")
    return inner.shift(k)


def _t_not(p: _Parser, t: _Tok) -> ArcRegion:
    p.expect("(")
    inner = p.region()
    p.expect(")")
    return ~inner


_TERMS = {
    "arcs": _t_arcs,
    "box": _t_box,
    "lower": _one_int(lower),
    "upper": _one_int(upper),
    "leftray": _two_ints(leftray),
    "rightray": _two_ints(rightray),
    "all": lambda p, t: ArcRegion.all(),
    "empty": lambda p, t: ArcRegion.empty(),
    "shift": _t_shift,
    "not": _t_not,
}


def parse_region(text: str) -> ArcRegion:
    p = _Parser(_tokenize(text))
    out = p.region()
    if p.tok.kind != "eof":
        p.fail({"'|'", "<end of input>"})
    return out


# printing


def _same(t: Trapezoid, candidate: Trapezoid) -> bool:
    return candidate.tight() == t


def format_trapezoid(t: Trapezoid) -> str:
    """DSL text for one tight, nonempty trapezoid, using sugar when it matches."""
    mi, ni = t.mi, t.ni
    if mi.lo == mi.hi and ni.lo == ni.hi:
        return f"arcs{{({mi.lo},{ni.lo})}}"
    if ni.hi != INF and _same(t, Trapezoid(FULL, IntInterval(-INF, ni.hi))):
        return f"lower({ni.hi})"
    if mi.lo != -INF and _same(t, Trapezoid(IntInterval(mi.lo, INF), FULL)):
        return f"upper({mi.lo})"
    if ni.lo == ni.hi and mi.lo == -INF and mi.hi != INF:
        if _same(t, Trapezoid(IntInterval(-INF, mi.hi), ni)):
            return f"leftray({ni.lo},{mi.hi})"
    if mi.lo == mi.hi and ni.hi == INF and ni.lo != -INF:
        if _same(t, Trapezoid(mi, IntInterval(ni.lo, INF))):
            return f"rightray({mi.lo},{ni.lo})"
    if _same(t, Trapezoid(mi, ni)):
        return f"box({mi},{ni})"
    return f"box({mi},{ni},diag{IntInterval(t.dlo, t.dhi)})"


# finite parts with at most this many arcs are printed as explicit arcs
SMALL_PART = 4


def format_region(r: ArcRegion) -> str:
    parts = r.parts
    if not parts:
        return "empty"
    if len(parts) == 1 and parts[0] == Trapezoid().tight():
        return "all"
    singles = []
    terms = []
    for t in parts:
        if t.is_finite() and t.mi.hi - t.mi.lo < 4 and t.ni.hi - t.ni.lo < 4 and len(list(t.arcs())) <= SMALL_PART:
            singles.extend(t.arcs())
        else:
            terms.append(format_trapezoid(t))
    if singles:
        terms.insert(0, format_arcs(singles))
    return " | ".join(terms)


def format_arcs(arcs) -> str:
    return "arcs{" + ",".join(str(a) for a in sorted(arcs)) + "}"
