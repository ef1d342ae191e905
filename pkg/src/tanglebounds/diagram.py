"""Planar diagrams of links and tangles.

A crossing lists its four arc labels counterclockwise starting at the incoming
under-strand, so the under-strand runs ``arcs[0] -> arcs[2]`` and the
over-strand joins ``arcs[1]`` and ``arcs[3]``.  The A-smoothing joins
``(arcs[0], arcs[1])`` and ``(arcs[2], arcs[3])``; the B-smoothing joins
``(arcs[0], arcs[3])`` and ``(arcs[1], arcs[2])``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from ._uf import UnionFind

CORNERS = ("NW", "NE", "SE", "SW")

# Counterclockwise order of the tangle corners as seen from the outside of the
# box, i.e. the rotation of the point at infinity.
_BOX_ROTATION = ("NW", "NE", "SE", "SW")


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams."""


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    tangle_id: int | None = None

    def __post_init__(self):
        if len(self.arcs) != 4:
            raise DiagramError(f"crossing needs 4 arcs, got {self.arcs}")

    @property
    def under(self) -> tuple[int, int]:
        return self.arcs[0], self.arcs[2]

    @property
    def over(self) -> tuple[int, int]:
        return self.arcs[1], self.arcs[3]

    def rotated(self, k: int) -> "Crossing":
        k %= 4
        a = self.arcs
        return Crossing(a[k:] + a[:k], self.tangle_id)

    def relabeled(self, m: Mapping[int, int]) -> "Crossing":
        return Crossing(tuple(m.get(x, x) for x in self.arcs), self.tangle_id)

    def tagged(self, tangle_id: int | None) -> "Crossing":
        return Crossing(self.arcs, tangle_id)


# ---------------------------------------------------------------------------
# low-level traversal on crossing tuples

Slot = tuple[int, int]


def _occurrences(arcs: Sequence[Sequence[int]]) -> dict[int, list[Slot]]:
    occ: dict[int, list[Slot]] = {}
    for ci, quad in enumerate(arcs):
        for s, lab in enumerate(quad):
            occ.setdefault(lab, []).append((ci, s))
    return occ


def _partner(occ, arcs, slot: Slot) -> Slot | None:
    lab = arcs[slot[0]][slot[1]]
    for o in occ[lab]:
        if o != slot:
            return o
    return None


def _trace_strands(arcs: Sequence[Sequence[int]], open_labels=frozenset()):
    """Split the strand passes into components.

    Returns a list of ``(passes, closed)`` where ``passes`` is an ordered list
    of ``(crossing, entry_slot)``.  Open strands (tangles) start at a boundary
    label.  Traversal direction is tentative: it starts at the lowest
    unvisited under-pass entering at slot 0 when one exists.
    """
    occ = _occurrences(arcs)
    seen: set[tuple[int, int]] = set()  # (crossing, strand parity)
    comps = []

    def walk(start: Slot):
        passes = []
        cur = start
        while True:
            ci, s = cur
            if (ci, s % 2) in seen:
                return passes, True
            seen.add((ci, s % 2))
            passes.append(cur)
            out = (ci, (s + 2) % 4)
            nxt = _partner(occ, arcs, out)
            if nxt is None:
                return passes, False
            cur = nxt

    # open strands first, from their boundary ends
    for lab in sorted(open_labels):
        for ci, s in occ.get(lab, []):
            if (ci, s % 2) not in seen:
                comps.append(walk((ci, s)))
    for parity_first in (0, 1):
        for ci in range(len(arcs)):
            if (ci, parity_first) not in seen:
                comps.append(walk((ci, parity_first)))
    return comps


def _normalize(arcs: Sequence[Sequence[int]], open_labels=frozenset()) -> list[tuple[int, ...]]:
    """Rotate crossings so every under-strand is entered at slot 0.

    Each component keeps the direction shared by most of its under-passes, so
    an already consistent diagram is returned unchanged.
    """
    arcs = [tuple(q) for q in arcs]
    flip: set[int] = set()
    for passes, _closed in _trace_strands(arcs, open_labels):
        under = [(ci, s) for ci, s in passes if s % 2 == 0]
        forward = sum(1 for _, s in under if s == 0)
        keep = forward >= len(under) - forward
        for ci, s in under:
            if (s == 0) != keep:
                flip.add(ci)
    return [q[2:] + q[:2] if ci in flip else q for ci, q in enumerate(arcs)]


def _compact(crossings: Sequence[Crossing], extra: Iterable[int] = ()) -> tuple[list[Crossing], dict]:
    m: dict = {}
    for c in crossings:
        for x in c.arcs:
            if x not in m:
                m[x] = len(m) + 1
    for x in extra:
        if x not in m:
            m[x] = len(m) + 1
    return [Crossing(tuple(m[x] for x in c.arcs), c.tangle_id) for c in crossings], m


def _face_orbits(arcs: Sequence[Sequence[int]], extra_vertex: Sequence[int] | None = None):
    """Faces of the combinatorial map given by the crossing rotations.

    Darts are ``(crossing, slot)``; a face is the orbit of
    ``dart -> rotate(partner(dart))``.  ``extra_vertex`` adds one more vertex
    (index ``len(arcs)``) with the given labels in counterclockwise order.
    """
    verts = [tuple(q) for q in arcs]
    if extra_vertex is not None:
        verts.append(tuple(extra_vertex))
    occ = _occurrences(verts)
    for lab, o in occ.items():
        if len(o) != 2:
            raise DiagramError(f"arc {lab} has {len(o)} ends in the face map")
    seen: set[Slot] = set()
    faces = []
    for vi, quad in enumerate(verts):
        deg = len(quad)
        for s in range(deg):
            if (vi, s) in seen:
                continue
            orbit = []
            d = (vi, s)
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                p = _partner(occ, verts, d)
                d = (p[0], (p[1] + 1) % len(verts[p[0]]))
            faces.append(tuple(orbit))
    return faces


def _pieces(arcs: Sequence[Sequence[int]]) -> list[list[int]]:
    uf = UnionFind(range(len(arcs)))
    occ = _occurrences(arcs)
    for o in occ.values():
        for (a, _), (b, _) in zip(o, o[1:]):
            uf.union(a, b)
    return sorted((sorted(c) for c in uf.classes()), key=lambda c: c[0])


# ---------------------------------------------------------------------------
# link diagrams


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(
            c if isinstance(c, Crossing) else Crossing(tuple(c)) for c in self.crossings))
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        _validate_link(self)

    @classmethod
    def from_arcs(cls, quads: Iterable[Sequence[int]], free_loops: int = 0,
                  tangle_ids: Sequence[int | None] | None = None) -> "LinkDiagram":
        quads = [tuple(q) for q in quads]
        ids = tangle_ids or [None] * len(quads)
        return cls(tuple(Crossing(q, t) for q, t in zip(quads, ids)), free_loops)

    @property
    def arcs(self) -> list[tuple[int, int, int, int]]:
        return [c.arcs for c in self.crossings]

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def arc_labels(self) -> list[int]:
        return sorted({x for c in self.crossings for x in c.arcs})

    def same_arcs(self, other: "LinkDiagram") -> bool:
        return self.arcs == other.arcs and self.free_loops == other.free_loops

    def __str__(self) -> str:
        from .pd import serialize
        return serialize(self)


def _validate_link(d: LinkDiagram) -> None:
    arcs = d.arcs
    counts = Counter(x for q in arcs for x in q)
    for lab, n in counts.items():
        if not isinstance(lab, int) or lab <= 0:
            raise DiagramError(f"arc labels must be positive integers, got {lab!r}")
        if n == 1:
            raise DiagramError(f"dangling arc {lab}: appears once")
        if n != 2:
            raise DiagramError(f"arc {lab} appears {n} times (expected 2)")
    for passes, _ in _trace_strands(arcs):
        under = [s for _, s in passes if s % 2 == 0]
        if under and len(set(under)) != 1:
            raise DiagramError("under-strand orientations are inconsistent along a component")
    faces = _face_orbits(arcs)
    pieces = _pieces(arcs)
    if len(faces) != sum(len(p) + 2 for p in pieces):
        raise DiagramError("crossing rotations are not planar (Euler characteristic != 2)")


@dataclass(frozen=True)
class Orientation:
    """Directions of every strand pass, one entry per component.

    ``passes[k]`` lists ``(crossing, entry_slot)`` along component ``k`` in the
    direction of travel.
    """

    passes: tuple[tuple[Slot, ...], ...]
    n_crossings: int

    def reversed_components(self, which: Iterable[int]) -> "Orientation":
        which = set(which)
        out = []
        for k, ps in enumerate(self.passes):
            if k in which:
                ps = tuple((ci, (s + 2) % 4) for ci, s in reversed(ps))
            out.append(ps)
        return Orientation(tuple(out), self.n_crossings)

    def entries(self) -> dict[Slot, int]:
        return {p: k for k, ps in enumerate(self.passes) for p in ps}

    def signs(self) -> list[int]:
        under = [0] * self.n_crossings
        over = [0] * self.n_crossings
        for ps in self.passes:
            for ci, s in ps:
                if s % 2 == 0:
                    under[ci] = 1 if s == 0 else -1
                else:
                    over[ci] = 1 if s == 3 else -1
        if 0 in under or 0 in over:
            raise DiagramError("orientation does not cover every crossing")
        return [u * o for u, o in zip(under, over)]


def default_orientation(d: LinkDiagram) -> Orientation:
    """Orientation following the PD under-strand convention.

    Components with no under-pass get the traversal direction from their
    lowest-indexed crossing.
    """
    comps = _trace_strands(d.arcs)
    return Orientation(tuple(tuple(p) for p, _ in comps), len(d.crossings))


def component_arcs(d: LinkDiagram) -> list[list[int]]:
    """Arc labels of each crossing-bearing component in traversal order."""
    arcs = d.arcs
    return [[arcs[ci][(s + 2) % 4] for ci, s in ps] for ps, _ in _trace_strands(arcs)]


def count_components(d: LinkDiagram) -> int:
    return len(_trace_strands(d.arcs)) + d.free_loops


def writhe(d: LinkDiagram, o: Orientation | None = None) -> int:
    if o is None:
        o = default_orientation(d)
    if o.n_crossings != len(d.crossings):
        raise DiagramError("orientation belongs to a different diagram")
    return sum(o.signs())


def crossing_signs(d: LinkDiagram, o: Orientation | None = None) -> list[int]:
    return (o or default_orientation(d)).signs()


def is_alternating(d: LinkDiagram) -> bool:
    for passes, closed in _trace_strands(d.arcs):
        kinds = [s % 2 for _, s in passes]
        pairs = zip(kinds, kinds[1:] + kinds[:1]) if closed else zip(kinds, kinds[1:])
        if any(a == b for a, b in pairs):
            return False
    return True


def relabel_compact(d: LinkDiagram) -> LinkDiagram:
    cs, _ = _compact(d.crossings)
    return LinkDiagram(tuple(cs), d.free_loops)


def _rebuild(quads, tangle_ids, free_loops, open_labels=frozenset()) -> list[Crossing]:
    quads = _normalize(quads, open_labels)
    return [Crossing(tuple(q), t) for q, t in zip(quads, tangle_ids)]


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing."""
    o = default_orientation(d)
    over_in = {}
    for ps in o.passes:
        for ci, s in ps:
            if s % 2 == 1:
                over_in[ci] = s
    out = []
    for ci, c in enumerate(d.crossings):
        out.append(c.rotated(over_in[ci]))
    return LinkDiagram(tuple(out), d.free_loops)


def arc_ends(d: LinkDiagram) -> dict[int, tuple[Slot, Slot]]:
    """Map arc label -> (tail slot, head slot) under the default orientation."""
    arcs = d.arcs
    occ = _occurrences(arcs)
    out = {}
    for ps in default_orientation(d).passes:
        for ci, s in ps:
            lab = arcs[ci][s]
            head = (ci, s)
            tail = next(x for x in occ[lab] if x != head)
            out[lab] = (tail, head)
    return out


def connected_sum(d1: LinkDiagram, a1: int | None, d2: LinkDiagram, a2: int | None) -> LinkDiagram:
    """Splice arc ``a1`` of ``d1`` with arc ``a2`` of ``d2``.

    A crossing-free summand must contribute one of its free loops and its arc
    argument is ignored.
    """
    if not d1.crossings or not d2.crossings:
        if not d1.crossings and d1.free_loops == 0 or not d2.crossings and d2.free_loops == 0:
            raise DiagramError("crossing-free summand has no loop to splice")
        big, other = (d2, d1) if not d1.crossings else (d1, d2)
        if big.crossings:
            arc = a2 if big is d2 else a1
            if arc not in big.arc_labels:
                raise DiagramError(f"arc {arc} not present")
        return LinkDiagram(big.crossings, d1.free_loops + d2.free_loops - 1)
    if a1 not in d1.arc_labels:
        raise DiagramError(f"arc {a1} not present in first diagram")
    if a2 not in d2.arc_labels:
        raise DiagramError(f"arc {a2} not present in second diagram")
    off = max(d1.arc_labels)
    q1 = [list(q) for q in d1.arcs]
    q2 = [[x + off for x in q] for q in d2.arcs]
    b2 = a2 + off
    (_t1, h1) = arc_ends(d1)[a1]
    (_t2, h2) = arc_ends(d2)[a2]
    q1[h1[0]][h1[1]] = b2
    q2[h2[0]][h2[1]] = a1
    quads = q1 + q2
    ids = [c.tangle_id for c in d1.crossings] + [c.tangle_id for c in d2.crossings]
    cs, _ = _compact(_rebuild(quads, ids, 0))
    return LinkDiagram(tuple(cs), d1.free_loops + d2.free_loops)


# ---------------------------------------------------------------------------
# raw geometric crossings


def crossing_from_rotation(labels: Sequence[Hashable], under_parity: int) -> tuple:
    """Crossing tuple from counterclockwise labels and which slot pair is under.

    The direction of the under-strand is fixed later by normalization.
    """
    u = under_parity % 2
    labels = tuple(labels)
    return labels[u:] + labels[:u]


def assemble(quads: Sequence[Sequence[Hashable]], free_loops: int = 0,
             tangle_ids: Sequence[int | None] | None = None) -> LinkDiagram:
    """Normalize orientations, relabel to 1..2c and build a LinkDiagram."""
    ids = list(tangle_ids) if tangle_ids is not None else [None] * len(quads)
    cs = _rebuild([tuple(q) for q in quads], ids, free_loops)
    cs, _ = _compact(cs)
    return LinkDiagram(tuple(cs), free_loops)


def cable_and_clasp(d: LinkDiagram, clasp_arc: int | None, negative: bool = True) -> LinkDiagram:
    """Blackboard 2-cable of a knot diagram, joined through a two-crossing clasp.

    Each crossing becomes a 2x2 block of crossings; the two copies of
    ``clasp_arc`` are cut and reconnected by a cap (tail side) hooked through
    a cup (head side).
    """
    if count_components(d) != 1:
        raise DiagramError("Whitehead doubling needs a knot diagram")
    quads: list[tuple] = []
    s1, s3 = ("clasp", "in", "L"), ("clasp", "in", "R")
    s4, s6 = ("clasp", "out", "L"), ("clasp", "out", "R")
    if not d.crossings:
        s4, s6 = s1, s3
    else:
        if clasp_arc not in d.arc_labels:
            raise DiagramError(f"arc {clasp_arc} not present")
        tail, head = arc_ends(d)[clasp_arc]
        over_east = {}
        for ps in default_orientation(d).passes:
            for ci, s in ps:
                if s % 2 == 1:
                    over_east[ci] = s == 3

        def ext(i, slot, side):
            if (i, slot) == head:
                return ("clasp", "out", side)
            if (i, slot) == tail:
                return ("clasp", "in", side)
            return (d.crossings[i].arcs[slot], side)

        for i in range(len(d.crossings)):
            east = over_east[i]
            for x in (-1, 1):
                for y in (-1, 1):
                    vside = "L" if x < 0 else "R"
                    hside = ("L" if y > 0 else "R") if east else ("R" if y > 0 else "L")
                    south = ext(i, 0, vside) if y < 0 else ("v", i, x)
                    north = ext(i, 2, vside) if y > 0 else ("v", i, x)
                    eastl = ext(i, 1, hside) if x > 0 else ("h", i, y)
                    westl = ext(i, 3, hside) if x < 0 else ("h", i, y)
                    quads.append((south, eastl, north, westl))
    s2, s5 = ("clasp", "top"), ("clasp", "cup")
    # counterclockwise from east; negative clasp puts the cap under the left
    # cup leg and over the right one
    p_under, q_under = (0, 1) if negative else (1, 0)
    quads.append(crossing_from_rotation((s2, s4, s1, s5), p_under))
    quads.append(crossing_from_rotation((s3, s6, s2, s5), q_under))
    return assemble(quads)


# ---------------------------------------------------------------------------
# tangles


@dataclass(frozen=True)
class TangleDiagram:
    """Crossings inside a box with four boundary arcs.

    ``boundary`` maps each corner to an arc label.  A label used at one corner
    appears once among the crossings; a label used at two corners is a
    crossing-free strand between them.
    """

    crossings: tuple[Crossing, ...]
    boundary: Mapping[str, int]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(
            c if isinstance(c, Crossing) else Crossing(tuple(c)) for c in self.crossings))
        b = dict(self.boundary)
        if set(b) != set(CORNERS):
            raise DiagramError(f"tangle boundary needs corners {CORNERS}, got {sorted(b)}")
        object.__setattr__(self, "boundary", b)
        _validate_tangle(self)

    @property
    def arcs(self):
        return [c.arcs for c in self.crossings]

    def __len__(self):
        return len(self.crossings)

    def box_labels(self) -> tuple[int, ...]:
        return tuple(self.boundary[k] for k in _BOX_ROTATION)


def _validate_tangle(t: TangleDiagram) -> None:
    counts = Counter(x for q in t.arcs for x in q)
    bcount = Counter(t.boundary.values())
    for lab in set(counts) | set(bcount):
        n = counts.get(lab, 0) + bcount.get(lab, 0)
        if n != 2:
            raise DiagramError(f"arc {lab} has {n} ends in the tangle (expected 2)")
        if bcount.get(lab, 0) == 1 and counts.get(lab, 0) != 1:
            raise DiagramError(f"boundary arc {lab} must meet exactly one crossing slot")
    open_labels = frozenset(bcount)
    for passes, _ in _trace_strands(t.arcs, open_labels):
        under = [s for _, s in passes if s % 2 == 0]
        if under and len(set(under)) != 1:
            raise DiagramError("under-strand orientations are inconsistent along a strand")
    faces = _face_orbits(t.arcs, t.box_labels())
    v = len(t.crossings) + 1
    if v - (4 * len(t.crossings) + 4) // 2 + len(faces) != 2 or len(_pieces(t.arcs + [t.box_labels()])) != 1:
        raise DiagramError("tangle is not a connected planar diagram in its box")


def make_tangle(quads: Sequence[Sequence[Hashable]], boundary: Mapping[str, Hashable],
                free_loops: int = 0, tangle_ids: Sequence[int | None] | None = None) -> TangleDiagram:
    """Normalize strand directions, relabel to integers and build a tangle."""
    ids = list(tangle_ids) if tangle_ids is not None else [None] * len(quads)
    open_labels = frozenset(boundary.values())
    cs = _rebuild([tuple(q) for q in quads], ids, 0, open_labels)
    cs, m = _compact(cs, [boundary[k] for k in CORNERS])
    return TangleDiagram(tuple(cs), {k: m[boundary[k]] for k in CORNERS}, free_loops)


def _glue(parts: Sequence[TangleDiagram], joins, tag: bool):
    """Relabel parts apart and identify boundary labels along ``joins``.

    ``joins`` is a list of ``((part, corner), (part, corner))``.  Returns the
    merged quads, tangle ids, a label finder and the loop count created by
    crossing-free classes.
    """
    quads, ids = [], []
    uf = UnionFind()
    for pi, t in enumerate(parts):
        for c in t.crossings:
            quads.append(tuple((pi, x) for x in c.arcs))
            ids.append(pi + 1 if tag else c.tangle_id)
        for x in t.boundary.values():
            uf.add((pi, x))
    for (p1, c1), (p2, c2) in joins:
        uf.union((p1, parts[p1].boundary[c1]), (p2, parts[p2].boundary[c2]))
    quads = [tuple(uf.find(x) for x in q) for q in quads]
    return quads, ids, uf


def _closed_loops(quads, uf, labels) -> int:
    used = {x for q in quads for x in q}
    roots = {uf.find(x) for x in labels}
    return sum(1 for r in roots if r not in used)


def _close(t: TangleDiagram, pairs) -> LinkDiagram:
    joins = [((0, a), (0, b)) for a, b in pairs]
    quads, ids, uf = _glue([t], joins, tag=False)
    loops = _closed_loops(quads, uf, [(0, x) for x in t.boundary.values()])
    return assemble(quads, t.free_loops + loops, ids)


def numerator_closure(t: TangleDiagram) -> LinkDiagram:
    return _close(t, [("NW", "NE"), ("SW", "SE")])


def denominator_closure(t: TangleDiagram) -> LinkDiagram:
    return _close(t, [("NW", "SW"), ("NE", "SE")])


def conway_sum(tangles: Sequence[TangleDiagram]) -> LinkDiagram:
    """Glue east ends of each tangle to west ends of the next, cyclically.

    Crossings are tagged with the 1-based index of their summand.
    """
    n = len(tangles)
    if n < 2:
        raise DiagramError("a Conway sum needs at least two tangles")
    joins = []
    for i in range(n):
        j = (i + 1) % n
        joins.append(((i, "NE"), (j, "NW")))
        joins.append(((i, "SE"), (j, "SW")))
    quads, ids, uf = _glue(tangles, joins, tag=True)
    labels = [(i, x) for i, t in enumerate(tangles) for x in t.boundary.values()]
    loops = _closed_loops(quads, uf, labels) + sum(t.free_loops for t in tangles)
    return assemble(quads, loops, ids)


def _combine(s: TangleDiagram, t: TangleDiagram, joins, corners) -> TangleDiagram:
    quads, ids, uf = _glue([s, t], joins, tag=False)
    labels = [(i, x) for i, p in enumerate((s, t)) for x in p.boundary.values()]
    boundary = {k: uf.find((pi, (s, t)[pi].boundary[src])) for k, (pi, src) in corners.items()}
    outer = set(boundary.values())
    used = {x for q in quads for x in q}
    loops = sum(1 for r in {uf.find(x) for x in labels} if r not in used and r not in outer)
    return make_tangle(quads, boundary, s.free_loops + t.free_loops + loops, ids)


def tangle_sum(s: TangleDiagram, t: TangleDiagram) -> TangleDiagram:
    """Horizontal sum: s on the west, t on the east."""
    return _combine(s, t, [((0, "NE"), (1, "NW")), ((0, "SE"), (1, "SW"))],
                    {"NW": (0, "NW"), "SW": (0, "SW"), "NE": (1, "NE"), "SE": (1, "SE")})


def tangle_product(s: TangleDiagram, t: TangleDiagram) -> TangleDiagram:
    """Vertical stack: s on top of t."""
    return _combine(s, t, [((0, "SW"), (1, "NW")), ((0, "SE"), (1, "NE"))],
                    {"NW": (0, "NW"), "NE": (0, "NE"), "SW": (1, "SW"), "SE": (1, "SE")})


def rotate_tangle(t: TangleDiagram) -> TangleDiagram:
    """Quarter turn counterclockwise: the NE end moves to NW, and so on."""
    b = t.boundary
    return TangleDiagram(t.crossings, {"NW": b["NE"], "SW": b["NW"], "SE": b["SW"], "NE": b["SE"]},
                         t.free_loops)


def mirror_tangle(t: TangleDiagram) -> TangleDiagram:
    quads = [c.arcs[1:] + c.arcs[:1] for c in t.crossings]
    ids = [c.tangle_id for c in t.crossings]
    return make_tangle(quads, t.boundary, t.free_loops, ids)
