"""Generators for the diagram families used by the checks and the CLI."""

from __future__ import annotations

import math
from collections import deque
from functools import reduce as fold
from itertools import count

from .diagram import (
    CORNERS, DiagramError, LinkDiagram, TangleDiagram, arc_ends, assemble, cable_and_clasp,
    connected_sum, crossing_from_rotation, make_tangle, mirror_tangle, numerator_closure,
    tangle_product, tangle_sum,
)
from .jones import state_sum_cap


def crossing_tangle(positive: bool = True) -> TangleDiagram:
    """One crossing in a box.

    The positive tangle has its under-strand running NW to SE; it starts
    under at NW, over at NE, under at SE and over at SW.  Sums and products
    of positive tangles stay alternating.
    """
    quad = ("nw", "sw", "se", "ne") if positive else ("sw", "se", "ne", "nw")
    return make_tangle([quad], {k: k.lower() for k in CORNERS})


def vertical_twist(n: int, positive: bool = True) -> TangleDiagram:
    if n < 1:
        raise ValueError("a twist needs at least one crossing")
    c = crossing_tangle(positive)
    return fold(tangle_product, [c] * n)


def horizontal_twist(n: int, positive: bool = True) -> TangleDiagram:
    if n < 1:
        raise ValueError("a twist needs at least one crossing")
    c = crossing_tangle(positive)
    return fold(tangle_sum, [c] * n)


# ---------------------------------------------------------------------------
# the octahedral tangle: an octahedron projection with one vertex opened up
# into the tangle box

_OCTA_EDGES = [
    ("P1", "P2"), ("P2", "P3"), ("P3", "P1"),
    ("Q4", "Q5"), ("Q5", "Q6"), ("Q6", "Q4"),
    ("Q4", "P2"), ("Q4", "P3"), ("Q5", "P3"), ("Q5", "P1"), ("Q6", "P1"), ("Q6", "P2"),
]
_OCTA_POS = {
    "P1": (0.0, 10.0), "P2": (-8.66, -5.0), "P3": (8.66, -5.0),
    "Q4": (0.0, -4.0), "Q5": (3.46, 2.0), "Q6": (-3.46, 2.0),
}
_OCTA_BOX = "P1"


def _rotations():
    """Counterclockwise edge order at each vertex of the straight-line drawing."""
    rot = {}
    for v, (x, y) in _OCTA_POS.items():
        inc = []
        for i, (a, b) in enumerate(_OCTA_EDGES):
            if v in (a, b):
                w = b if a == v else a
                wx, wy = _OCTA_POS[w]
                inc.append((math.atan2(wy - y, wx - x), i))
        rot[v] = [("e", i) for _, i in sorted(inc)]
    return rot


def _alternating_parities(rot, verts):
    """Under-slot parity per vertex so that every edge runs over then under."""
    slots: dict = {}
    for v in verts:
        for s, lab in enumerate(rot[v]):
            slots.setdefault(lab, []).append((v, s))
    par = {verts[0]: 0}
    todo = deque([verts[0]])
    while todo:
        v = todo.popleft()
        for s, lab in enumerate(rot[v]):
            for w, t in slots[lab]:
                if (w, t) == (v, s):
                    continue
                under_here = s % 2 == par[v]
                # slot t must be the opposite kind
                want = (t + 1) % 2 if under_here else t % 2
                if w not in par:
                    par[w] = want
                    todo.append(w)
                elif par[w] != want:
                    raise DiagramError("skeleton cannot be made alternating")
    return par


def _octahedral_quads():
    rot = _rotations()
    verts = [v for v in _OCTA_POS if v != _OCTA_BOX]
    par = _alternating_parities(rot, verts)
    quads = [crossing_from_rotation(rot[v], par[v]) for v in verts]
    ends = rot[_OCTA_BOX]
    return quads, ends


def _substitute(quads, index: int, t: TangleDiagram, tag):
    """Replace crossing ``quads[index]`` by a positive-pattern tangle.

    The crossing's slots 0..3 (counterclockwise, slot 0 under) take the
    tangle corners NW, SW, SE, NE.
    """
    q = quads[index]
    outer = dict(zip(("NW", "SW", "SE", "NE"), q))
    ren = {}
    for corner, lab in t.boundary.items():
        ren[lab] = outer[corner]
    new = [tuple(ren.get(x, (tag, x)) for x in c.arcs) for c in t.crossings]
    return quads[:index] + new + quads[index + 1:]


def octahedral_tangle(twists=(1, 1, 1, 1, 1)) -> TangleDiagram:
    """Alternating tangle with five twist regions, none of them closable.

    ``twists`` gives the crossing count placed at each of the five vertices.
    """
    twists = list(twists)
    if len(twists) != 5 or any(n < 1 for n in twists):
        raise ValueError("the octahedral skeleton takes five positive twist counts")
    quads, ends = _octahedral_quads()
    base = list(quads)
    out = []
    for i, n in enumerate(twists):
        part = [base[i]] if n == 1 else _substitute([base[i]], 0, vertical_twist(n), ("v", i))
        out.extend(part)
    quads = out
    # box corners follow the counterclockwise order of the removed vertex;
    # shift so the NW end starts under
    for shift in range(4):
        corners = dict(zip(("NW", "NE", "SE", "SW"), ends[shift:] + ends[:shift]))
        t = make_tangle(quads, corners)
        if _starts_under(t, "NW") and not _starts_under(t, "NE"):
            return t
    raise DiagramError("no corner labelling gives the positive pattern")


def _starts_under(t: TangleDiagram, corner: str) -> bool:
    lab = t.boundary[corner]
    for c in t.crossings:
        for s, x in enumerate(c.arcs):
            if x == lab:
                return s % 2 == 0
    raise DiagramError(f"corner {corner} meets no crossing")


def figure6_tangle() -> TangleDiagram:
    return octahedral_tangle((1, 1, 1, 1, 1))


def gen_twist_tangle(twists, skeleton: str = "pretzel") -> TangleDiagram:
    """Alternating tangle with one twist region per entry of ``twists``.

    ``pretzel`` places vertical twists side by side; ``octahedral`` needs
    exactly five entries and gives a strongly alternating tangle.  All signs
    must agree; negative twists give the mirror image.
    """
    twists = list(twists)
    if not twists:
        raise ValueError("twist list is empty")
    if any(t == 0 for t in twists):
        raise ValueError("each twist needs at least one crossing")
    signs = {t > 0 for t in twists}
    if len(signs) != 1:
        raise ValueError("mixed twist signs do not give an alternating tangle")
    sizes = [abs(t) for t in twists]
    if skeleton == "pretzel":
        t = fold(tangle_sum, [vertical_twist(n) for n in sizes])
    elif skeleton == "octahedral":
        t = octahedral_tangle(sizes)
    else:
        raise ValueError(f"unknown skeleton {skeleton!r}")
    return t if signs == {True} else mirror_tangle(t)


# ---------------------------------------------------------------------------
# closed families


def braid_closure(n_strands: int, word) -> LinkDiagram:
    """Closure of a braid word; ``i`` is the generator s_i, ``-i`` its inverse."""
    if n_strands < 1:
        raise ValueError("need at least one strand")
    fresh = count(1)
    cur = [("b", j) for j in range(n_strands)]
    quads = []
    for g in word:
        i = abs(g) - 1
        if g == 0 or i + 1 >= n_strands:
            raise ValueError(f"bad generator {g} for {n_strands} strands")
        sw, se = cur[i], cur[i + 1]
        nw, ne = next(fresh), next(fresh)
        if g > 0:
            # under strand SE -> NW, over strand SW -> NE
            quads.append((se, ne, nw, sw))
        else:
            quads.append((sw, se, ne, nw))
        cur[i], cur[i + 1] = nw, ne
    close = {cur[j]: ("b", j) for j in range(n_strands)}
    quads = [tuple(close.get(x, x) for x in qd) for qd in quads]
    untouched = sum(1 for j in range(n_strands) if cur[j] == ("b", j))
    return assemble(quads, untouched)


def gen_braid_torus(p: int, q: int, cap: int | None = None) -> LinkDiagram:
    """Closure of the positive braid (s_1 ... s_{p-1})^q."""
    if p < 2 or q < 1:
        raise ValueError("need p >= 2 strands and q >= 1")
    cap = state_sum_cap() if cap is None else cap
    n = (p - 1) * q
    if n > cap:
        raise ValueError(f"T({p},{q}) needs {n} crossings, above the cap of {cap}")
    return braid_closure(p, list(range(1, p)) * q)


def rational_tangle(terms) -> TangleDiagram:
    """Alternating rational tangle built so the last term is a horizontal twist.

    Terms are added from the first to the last, alternating between stacking
    a vertical twist below and adding a horizontal twist on the right.
    """
    terms = list(terms)
    if not terms or any(a < 1 for a in terms):
        raise ValueError("terms must be positive")
    n = len(terms)
    horizontal_first = n % 2 == 1
    t = horizontal_twist(terms[0]) if horizontal_first else vertical_twist(terms[0])
    for i, a in enumerate(terms[1:], start=1):
        if (n - 1 - i) % 2 == 0:
            t = tangle_sum(t, horizontal_twist(a))
        else:
            t = tangle_product(t, vertical_twist(a))
    return t


def two_bridge(terms) -> LinkDiagram:
    return numerator_closure(rational_tangle(terms))


def pretzel(columns) -> LinkDiagram:
    """Numerator closure of vertical twists side by side; negative entries are
    mirrored columns."""
    parts = [vertical_twist(abs(a), a > 0) for a in columns]
    return numerator_closure(fold(tangle_sum, parts))


def right_trefoil() -> LinkDiagram:
    return gen_braid_torus(2, 3)


def _under_entry_arc(d: LinkDiagram) -> int:
    """An arc whose head enters an under-pass."""
    for lab, (_tail, head) in sorted(arc_ends(d).items()):
        if head[1] == 0:
            return lab
    raise DiagramError("diagram has no under-pass")


def trefoil_connect_sum(m: int) -> LinkDiagram:
    """Alternating diagram of the connected sum of m right-handed trefoils."""
    if m < 1:
        raise ValueError("m must be at least 1")
    t = right_trefoil()
    k = t
    for _ in range(m - 1):
        k = connected_sum(k, _under_entry_arc(k), t, _under_entry_arc(t))
    return k


def whitehead_double_negative(d: LinkDiagram, clasp_arc: int | None = None) -> LinkDiagram:
    """Negative Whitehead double with blackboard framing."""
    if d.crossings and clasp_arc is None:
        clasp_arc = d.arc_labels[0]
    return cable_and_clasp(d, clasp_arc, negative=True)


def gen_whitehead_trefoils(m: int, clasp_arc: int | None = None) -> LinkDiagram:
    return whitehead_double_negative(trefoil_connect_sum(m), clasp_arc)
