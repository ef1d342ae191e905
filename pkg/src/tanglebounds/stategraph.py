"""All-A / all-B states, their state graphs and reduced graphs."""

from __future__ import annotations

from dataclasses import dataclass

from ._uf import UnionFind
from .diagram import LinkDiagram
from .jones import _smoothing_pairs


class StateGraphError(ValueError):
    pass


def _check_side(r: str) -> bool:
    if r not in ("A", "B"):
        raise ValueError(f"resolution must be 'A' or 'B', got {r!r}")
    return r == "A"


@dataclass(frozen=True)
class KauffmanState:
    resolution: tuple[str, ...]
    circles: tuple[frozenset, ...]
    free_loops: int = 0

    @property
    def n_circles(self) -> int:
        return len(self.circles) + self.free_loops

    def circle_of(self, label) -> int:
        for i, c in enumerate(self.circles):
            if label in c:
                return i
        raise KeyError(label)


def all_state(d: LinkDiagram, r: str) -> KauffmanState:
    use_a = _check_side(r)
    uf = UnionFind()
    for q in d.arcs:
        for x, y in _smoothing_pairs(q, use_a):
            uf.union(x, y)
    circles = sorted((frozenset(c) for c in uf.classes()), key=min)
    return KauffmanState(tuple(r * len(d.crossings)), tuple(circles), d.free_loops)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    crossing: int
    tangle_id: int | None

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class StateGraph:
    n_vertices: int
    edges: tuple[Edge, ...]
    resolution: str

    def dump(self) -> str:
        lines = [str(self.n_vertices)]
        for e in self.edges:
            tid = "-" if e.tangle_id is None else e.tangle_id
            lines.append(f"{e.u} {e.v} {e.crossing} {tid}")
        return "\n".join(lines)


def state_graph(d: LinkDiagram, r: str) -> StateGraph:
    """Vertices are the circles of the all-r state, one edge per crossing.

    The circles on either side of a smoothed crossing are the ones through
    arcs ``a`` and ``c``; a crossing whose two sides lie on one circle gives a
    loop edge.  Free loops are isolated vertices numbered after the others.
    """
    s = all_state(d, r)
    index = {}
    for i, c in enumerate(s.circles):
        for lab in c:
            index[lab] = i
    edges = []
    for ci, c in enumerate(d.crossings):
        a, _, cc, _ = c.arcs
        u, v = sorted((index[a], index[cc]))
        edges.append(Edge(u, v, ci, c.tangle_id))
    return StateGraph(s.n_circles, tuple(edges), r)


@dataclass(frozen=True)
class ReducedStateGraph:
    n_vertices: int
    classes: tuple[tuple[Edge, ...], ...]
    resolution: str

    @property
    def e_prime(self) -> int:
        return len(self.classes)

    @property
    def v_prime(self) -> int:
        return self.n_vertices

    def components(self) -> int:
        uf = UnionFind(range(self.n_vertices))
        for cls in self.classes:
            uf.union(cls[0].u, cls[0].v)
        return uf.count()


def reduce(g: StateGraph) -> ReducedStateGraph:
    """Collapse each set of parallel edges to one edge; loops stay single edges."""
    classes: dict[tuple[int, int], list[Edge]] = {}
    for e in g.edges:
        classes.setdefault((e.u, e.v), []).append(e)
    ordered = tuple(tuple(classes[k]) for k in sorted(classes))
    return ReducedStateGraph(g.n_vertices, ordered, g.resolution)


def is_adequate(d: LinkDiagram, r: str) -> bool:
    return not any(e.is_loop for e in state_graph(d, r).edges)


def first_betti(g: ReducedStateGraph) -> int:
    comps = g.components()
    if comps != 1:
        raise StateGraphError(f"reduced state graph is disconnected ({comps} components)")
    return g.e_prime - g.v_prime + 1


def beta_prime_stoimenow(d: LinkDiagram) -> int:
    """``|beta'|`` of a B-adequate diagram from its reduced all-B graph."""
    if not is_adequate(d, "B"):
        raise StateGraphError("diagram is not B-adequate")
    return first_betti(reduce(state_graph(d, "B")))


@dataclass(frozen=True)
class EdgeLossSplit:
    l_in: int
    l_ext: int

    @property
    def total(self) -> int:
        return self.l_in + self.l_ext


def _class_loss(cls) -> tuple[int, int]:
    per_tangle: dict[int, int] = {}
    for e in cls:
        per_tangle[e.tangle_id] = per_tangle.get(e.tangle_id, 0) + 1
    return sum(n - 1 for n in per_tangle.values()), len(per_tangle) - 1


def edge_loss_split(d: LinkDiagram) -> EdgeLossSplit:
    """Split the edges lost in reducing both state graphs by summand.

    Inside one parallel class, edges from the same tangle merge first
    (internal loss); the surviving one-per-tangle edges then merge across
    tangles (external loss).
    """
    if any(c.tangle_id is None for c in d.crossings):
        raise StateGraphError("every crossing needs a tangle_id")
    l_in = l_ext = 0
    for r in ("A", "B"):
        for cls in reduce(state_graph(d, r)).classes:
            i, x = _class_loss(cls)
            l_in += i
            l_ext += x
    return EdgeLossSplit(l_in, l_ext)
