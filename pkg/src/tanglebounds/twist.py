"""Faces, bigons and twist regions of link and tangle diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from ._uf import UnionFind
from .diagram import (
    LinkDiagram, TangleDiagram, _face_orbits, _pieces, denominator_closure, is_alternating,
    numerator_closure,
)


@dataclass(frozen=True)
class Face:
    """A face as the cyclic list of darts ``(vertex, slot)`` leaving it.

    ``arcs`` are the labels crossed while walking once around the face.
    """

    darts: tuple[tuple[int, int], ...]
    arcs: tuple[int, ...]

    @property
    def corners(self) -> list[int]:
        return [v for v, _ in self.darts]


def _faces_of(arcs, box=None) -> list[Face]:
    verts = list(arcs) + ([box] if box is not None else [])
    out = []
    for orbit in _face_orbits(arcs, box):
        out.append(Face(tuple(orbit), tuple(verts[v][s] for v, s in orbit)))
    return out


def faces(d: LinkDiagram) -> list[Face]:
    """Faces of every planar piece; each free loop contributes two empty faces."""
    return _faces_of(d.arcs) + [Face((), ())] * (2 * d.free_loops)


def sphere_count(d: LinkDiagram) -> int:
    return len(_pieces(d.arcs)) + d.free_loops


def _chaining_bigons(arcs, box=None):
    """Pairs of crossings joined by a twist bigon.

    A bigon chains its two crossings when each of its arcs runs over at one
    end and under at the other.  Bigons touching the tangle box, and faces
    meeting a single crossing twice, never chain.
    """
    n = len(arcs)
    for f in _faces_of(arcs, box):
        if len(f.darts) != 2:
            continue
        (v1, s1), (v2, s2) = f.darts
        if v1 == v2 or v1 >= n or v2 >= n:
            continue
        # dart (v, s) leaves along slot s; the face corner at v is between
        # slots s-1 and s, so the arc leaving v1 at s1 enters v2 at s2-1
        ok = (s1 % 2) != ((s2 - 1) % 2) and ((s1 - 1) % 2) != (s2 % 2)
        if ok:
            yield v1, v2


def _regions(arcs, box=None) -> list[list[int]]:
    n = len(arcs)
    uf = UnionFind(range(n))
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for u, v in _chaining_bigons(arcs, box):
        uf.union(u, v)
        adj[u].add(v)
        adj[v].add(u)
    regions = []
    for cls in uf.classes():
        members = set(cls)
        ends = sorted(x for x in members if len(adj[x]) <= 1)
        cur = ends[0] if ends else min(members)
        order, prev = [cur], None
        while len(order) < len(members):
            nxt = sorted(x for x in adj[cur] if x not in order)
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        order += sorted(members - set(order))
        regions.append(order)
    return sorted(regions, key=lambda r: min(r))


def twist_regions(d: LinkDiagram) -> list[list[int]]:
    return _regions(d.arcs)


def twist_number(d: LinkDiagram) -> int:
    return len(twist_regions(d))


def tangle_twist_regions(t: TangleDiagram) -> list[list[int]]:
    return _regions(t.arcs, t.box_labels())


def tangle_twist_number(t: TangleDiagram) -> int:
    return len(tangle_twist_regions(t))


def nugatory_crossings(d: LinkDiagram) -> list[int]:
    """Crossings met twice by a single face."""
    out = set()
    for f in faces(d):
        seen = set()
        for v in f.corners:
            if v in seen:
                out.add(v)
            seen.add(v)
    return sorted(out)


def is_reduced(d: LinkDiagram) -> bool:
    return not nugatory_crossings(d)


def is_diagrammatically_prime(d: LinkDiagram) -> bool:
    """No two distinct faces share two or more arcs.

    Only meaningful for connected, reduced diagrams.
    """
    sides: dict[int, list[int]] = {}
    for i, f in enumerate(faces(d)):
        for lab in f.arcs:
            sides.setdefault(lab, []).append(i)
    shared: dict[tuple[int, int], int] = {}
    for lab, fs in sides.items():
        if len(fs) == 2 and fs[0] != fs[1]:
            key = tuple(sorted(fs))
            shared[key] = shared.get(key, 0) + 1
    return all(n < 2 for n in shared.values())


def is_strongly_alternating(t: TangleDiagram) -> bool:
    """Both closures are connected, alternating, reduced and diagrammatically prime."""
    for closure in (numerator_closure(t), denominator_closure(t)):
        if closure.free_loops or len(_pieces(closure.arcs)) != 1:
            return False
        if not (is_alternating(closure) and is_reduced(closure) and is_diagrammatically_prime(closure)):
            return False
    return True
