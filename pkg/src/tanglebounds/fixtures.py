"""The built-in fixture corpus.

Fixtures are built by the generators in :mod:`tanglebounds.families` and
archived as PD text in ``data/fixtures.json``; the archive is what the checks
load.  Run ``python -m tanglebounds.fixtures`` to rewrite it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path

from . import bounds as B
from .diagram import (
    LinkDiagram, TangleDiagram, connected_sum, conway_sum, count_components, is_alternating, make_tangle,
)
from .families import (
    braid_closure, figure6_tangle, gen_braid_torus, gen_twist_tangle, horizontal_twist, pretzel,
    crossing_tangle, rational_tangle, right_trefoil, two_bridge, vertical_twist,
    whitehead_double_negative,
)
from .pd import parse_pd, parse_tangle, serialize
from .twist import _pieces, is_diagrammatically_prime, is_reduced, is_strongly_alternating

CORPUS_FILE = "fixtures.json"


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # "link", "tangle" or "conway_sum"
    pd: str
    summands: tuple[str, ...] = ()
    hypotheses: frozenset = frozenset()
    tags: frozenset = frozenset()
    known_C: int | None = None

    @cached_property
    def diagram(self) -> LinkDiagram:
        if self.kind == "tangle":
            raise TypeError(f"{self.name} is a tangle")
        if self.kind == "conway_sum":
            return conway_sum(self.tangles)
        return parse_pd(self.pd)

    @cached_property
    def tangle(self) -> TangleDiagram:
        if self.kind != "tangle":
            raise TypeError(f"{self.name} is not a tangle")
        return parse_tangle(self.pd)

    @cached_property
    def tangles(self) -> list[TangleDiagram]:
        return [parse_tangle(s) for s in self.summands]

    def as_dict(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "pd": self.pd}
        if self.summands:
            out["summands"] = list(self.summands)
        if self.hypotheses:
            out["hypotheses"] = sorted(self.hypotheses)
        if self.tags:
            out["tags"] = sorted(self.tags)
        if self.known_C is not None:
            out["known_C"] = self.known_C
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Fixture":
        return cls(d["name"], d["kind"], d["pd"], tuple(d.get("summands", ())),
                   frozenset(d.get("hypotheses", ())), frozenset(d.get("tags", ())), d.get("known_C"))


def _diagram_flags(d: LinkDiagram) -> set[str]:
    """Hypotheses that can be read off the diagram itself."""
    flags = set()
    if is_alternating(d):
        flags.add(B.ALTERNATING)
    if d.crossings and len(_pieces(d.arcs)) == 1 and d.free_loops == 0:
        flags.add(B.NON_SPLIT)
        if is_reduced(d) and is_diagrammatically_prime(d):
            flags.add(B.PRIME)
    return flags


def _link(name, d: LinkDiagram, twist_reduced=False, torus_2p=False, known_C=None, tags=()):
    flags = _diagram_flags(d)
    tags = set(tags)
    if twist_reduced:
        flags.add(B.TWIST_REDUCED)
    if not torus_2p:
        flags.add(B.NOT_2P_TORUS)
    if count_components(d) == 1:
        tags.add("knot")
    if {B.ALTERNATING, B.PRIME, B.TWIST_REDUCED} <= flags:
        tags.add("reduced_alternating")
    return Fixture(name, "link", serialize(d), (), frozenset(flags), frozenset(tags), known_C)


def _tangle(name, t: TangleDiagram, tags=()):
    tags = set(tags)
    if is_strongly_alternating(t):
        tags.add("strongly_alternating")
    return Fixture(name, "tangle", serialize(t), tags=frozenset(tags))


def _sum(name, parts):
    d = conway_sum(parts)
    flags = {B.TWIST_REDUCED, B.NOT_2P_TORUS} | _diagram_flags(d)
    if all(is_strongly_alternating(t) for t in parts):
        flags.add(B.STRONG_SUMMANDS)
    tags = {"knot"} if count_components(d) == 1 else set()
    if {B.ALTERNATING, B.PRIME} <= flags:
        tags.add("reduced_alternating")
    return Fixture(name, "conway_sum", serialize(d), tuple(serialize(t) for t in parts),
                   frozenset(flags), frozenset(tags))


def _oct(*twists):
    return gen_twist_tangle(twists, skeleton="octahedral")


def build_corpus() -> list[Fixture]:
    left = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    right = right_trefoil()
    kink = parse_pd("X(1,2,2,1)")
    fig6 = figure6_tangle()
    fig6m = _oct(-1, -1, -1, -1, -1)
    zero = make_tangle([], {"NW": 1, "NE": 1, "SW": 2, "SE": 2})
    infinity = make_tangle([], {"NW": 1, "SW": 1, "NE": 2, "SE": 2})

    links = [
        _link("unknot", LinkDiagram((), 1), torus_2p=True),
        _link("unlink_2", LinkDiagram((), 2), torus_2p=True),
        _link("hopf", parse_pd("X(1,3,2,4) X(3,1,4,2)"), twist_reduced=True, torus_2p=True),
        _link("trefoil_left", left, twist_reduced=True, torus_2p=True, known_C=1, tags={"torus"}),
        _link("trefoil_right", right, twist_reduced=True, torus_2p=True, known_C=1, tags={"torus"}),
        _link("figure_eight", parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"), twist_reduced=True),
        _link("trefoil_kinked", connected_sum(right, 1, kink, 1)),
        _link("torus_2_5", gen_braid_torus(2, 5), twist_reduced=True, torus_2p=True, known_C=1, tags={"torus"}),
        _link("torus_2_7", gen_braid_torus(2, 7), twist_reduced=True, torus_2p=True, known_C=1, tags={"torus"}),
        _link("torus_2_9", gen_braid_torus(2, 9), twist_reduced=True, torus_2p=True, known_C=1, tags={"torus"}),
        _link("torus_4_3", gen_braid_torus(3, 4), known_C=2, tags={"torus"}),
        _link("torus_5_3", gen_braid_torus(3, 5), known_C=2, tags={"torus"}),
        _link("torus_8_3", gen_braid_torus(3, 8), known_C=2, tags={"torus", "family_a"}),
        _link("two_bridge_3_2", two_bridge([3, 2]), twist_reduced=True),
        _link("two_bridge_4_2", two_bridge([4, 2]), twist_reduced=True),
        _link("two_bridge_2_1_2", two_bridge([2, 1, 2]), twist_reduced=True),
        _link("two_bridge_3_1_2", two_bridge([3, 1, 2]), twist_reduced=True),
        _link("two_bridge_2_1_1_2", two_bridge([2, 1, 1, 2]), twist_reduced=True),
        _link("two_bridge_3_1_1_3", two_bridge([3, 1, 1, 3]), twist_reduced=True),
        _link("pretzel_3_3_3", pretzel([3, 3, 3]), twist_reduced=True),
        _link("pretzel_2_3_3", pretzel([2, 3, 3]), twist_reduced=True),
        _link("pretzel_3_5_7", pretzel([3, 5, 7]), twist_reduced=True),
        _link("pretzel_3_3_m2", pretzel([3, 3, -2])),
        _link("pretzel_m3_3_3", pretzel([-3, 3, 3])),
        _link("borromean", braid_closure(3, [1, -2] * 3), twist_reduced=True),
        _link("braid_3_nonalternating", braid_closure(3, [1, 1, 2, 2, -1, 2])),
        _link("whitehead_unknot", whitehead_double_negative(LinkDiagram((), 1)), tags={"whitehead"}),
        _link("whitehead_trefoil", whitehead_double_negative(right), tags={"whitehead"}),
    ]

    tangles = [
        _tangle("tangle_zero", zero),
        _tangle("tangle_infinity", infinity),
        _tangle("crossing_positive", crossing_tangle(True)),
        _tangle("crossing_negative", crossing_tangle(False)),
        _tangle("vertical_3", vertical_twist(3)),
        _tangle("horizontal_2", horizontal_twist(2)),
        _tangle("pretzel_2_2", gen_twist_tangle([2, 2])),
        _tangle("pretzel_2_3_2", gen_twist_tangle([2, 3, 2])),
        _tangle("rational_2_1_2", rational_tangle([2, 1, 2])),
        _tangle("figure6", fig6, tags={"figure6"}),
        _tangle("figure6_mirror", fig6m),
        _tangle("octahedral_2_1_1_1_1", _oct(2, 1, 1, 1, 1)),
        _tangle("octahedral_1_2_1_2_1_mirror", _oct(-1, -2, -1, -2, -1)),
        _tangle("octahedral_2_2_2_2_2", _oct(2, 2, 2, 2, 2)),
    ]

    sums = [
        _sum("sum_f6_f6", [fig6, fig6]),
        _sum("sum_f6_f6m", [fig6, fig6m]),
        _sum("sum_o21111_f6", [_oct(2, 1, 1, 1, 1), fig6]),
        _sum("sum_o12121_f6m", [_oct(1, 2, 1, 2, 1), fig6m]),
        _sum("sum_o21111_o11211", [_oct(2, 1, 1, 1, 1), _oct(1, 1, 2, 1, 1)]),
        _sum("sum_o11113_o31111m", [_oct(1, 1, 1, 1, 3), _oct(-3, -1, -1, -1, -1)]),
        _sum("sum_f6_f6_f6", [fig6, fig6, fig6]),
        _sum("sum_f6_f6m_f6", [fig6, fig6m, fig6]),
        _sum("sum_o22222_f6", [_oct(2, 2, 2, 2, 2), fig6]),
        _sum("sum_f6x4", [fig6] * 4),
        _sum("sum_f6_f6m_x2", [fig6, fig6m, fig6, fig6m]),
        _sum("sum_o22111_o11221_f6", [_oct(2, 2, 1, 1, 1), _oct(1, 1, 2, 2, 1), fig6]),
        _sum("sum_o33333_f6", [_oct(3, 3, 3, 3, 3), fig6]),
        _sum("sum_f6x5", [fig6] * 5),
    ]
    return links + tangles + sums


def dump_corpus(fixtures) -> str:
    return json.dumps([f.as_dict() for f in fixtures], indent=1) + "\n"


def load_corpus(path: str | Path | None = None) -> list[Fixture]:
    if path is None:
        text = resources.files("tanglebounds").joinpath("data").joinpath(CORPUS_FILE).read_text()
    else:
        text = Path(path).read_text()
    return [Fixture.from_dict(d) for d in json.loads(text)]


def main() -> None:
    out = Path(__file__).parent / "data" / CORPUS_FILE
    out.parent.mkdir(exist_ok=True)
    out.write_text(dump_corpus(build_corpus()))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
