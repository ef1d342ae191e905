"""Text format for link and tangle diagrams.

Whitespace-separated terms::

    X(a,b,c,d)                  crossing, positive integer arcs
    L0(n)                       n crossing-free loops
    T{nw=a,ne=b,se=c,sw=d}[ ]   tangle wrapping X/L0 terms
    # ...                       comment to end of line
"""

from __future__ import annotations

import re

from .diagram import CORNERS, DiagramError, LinkDiagram, TangleDiagram


class PDSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.pos = pos
        self.line = line
        self.column = col


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<cross>X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))
  | (?P<loops>L0\(\s*(\d+)\s*\))
  | (?P<topen>T\{(?P<tb>[^}]*)\}\[)
  | (?P<tclose>\])
""", re.VERBOSE)


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            snippet = text[pos:pos + 12].split("\n")[0]
            raise PDSyntaxError(f"unexpected input {snippet!r}", text, pos)
        kind = m.lastgroup
        if kind == "cross":
            yield "X", tuple(int(g) for g in m.groups()[3:7]), pos
        elif kind == "loops":
            yield "L", int(m.group(9)), pos
        elif kind == "topen":
            yield "T", _boundary(m.group("tb"), text, pos), pos
        elif kind == "tclose":
            yield "]", None, pos
        pos = m.end()


def _boundary(body: str, text: str, pos: int) -> dict[str, int]:
    out = {}
    for part in body.split(","):
        key, eq, val = part.partition("=")
        key = key.strip().upper()
        if not eq or key not in CORNERS or not val.strip().isdigit():
            raise PDSyntaxError(f"bad tangle boundary entry {part.strip()!r}", text, pos)
        if key in out:
            raise PDSyntaxError(f"boundary label {key} repeated", text, pos)
        out[key] = int(val)
    if set(out) != set(CORNERS):
        raise PDSyntaxError("tangle boundary needs nw, ne, se and sw", text, pos)
    return out


def _parse(text: str):
    crossings, loops = [], 0
    tangle = None
    for kind, val, pos in _tokens(text):
        if kind == "X":
            if any(v <= 0 for v in val):
                raise PDSyntaxError("arc labels must be positive", text, pos)
            crossings.append(val)
        elif kind == "L":
            loops += val
        elif kind == "T":
            if tangle is not None or crossings or loops:
                raise PDSyntaxError("a tangle must be the only top-level term", text, pos)
            tangle = {"boundary": val, "open": pos}
        elif kind == "]":
            if tangle is None or "close" in tangle:
                raise PDSyntaxError("unmatched ']'", text, pos)
            tangle["close"] = pos
    if tangle is not None and "close" not in tangle:
        raise PDSyntaxError("unterminated tangle", text, tangle["open"])
    return crossings, loops, tangle


def parse_pd(text: str) -> LinkDiagram:
    crossings, loops, tangle = _parse(text)
    if tangle is not None:
        raise PDSyntaxError("expected a link diagram, found a tangle", text, tangle["open"])
    if not crossings and not loops:
        raise PDSyntaxError("empty diagram", text, 0)
    return LinkDiagram.from_arcs(crossings, loops)


def parse_tangle(text: str) -> TangleDiagram:
    crossings, loops, tangle = _parse(text)
    if tangle is None:
        raise PDSyntaxError("expected T{...}[...]", text, 0)
    from .diagram import Crossing
    return TangleDiagram(tuple(Crossing(c) for c in crossings), tangle["boundary"], loops)


def parse(text: str) -> LinkDiagram | TangleDiagram:
    crossings, loops, tangle = _parse(text)
    if tangle is not None:
        return parse_tangle(text)
    return parse_pd(text)


def _terms(crossings, loops) -> list[str]:
    out = ["X({},{},{},{})".format(*c.arcs) for c in crossings]
    if loops:
        out.append(f"L0({loops})")
    return out


def serialize(d: LinkDiagram | TangleDiagram) -> str:
    if isinstance(d, TangleDiagram):
        b = ",".join(f"{k.lower()}={d.boundary[k]}" for k in CORNERS)
        inner = " ".join(_terms(d.crossings, d.free_loops))
        return f"T{{{b}}}[{inner}]"
    return " ".join(_terms(d.crossings, d.free_loops))


__all__ = ["PDSyntaxError", "DiagramError", "parse", "parse_pd", "parse_tangle", "serialize"]
