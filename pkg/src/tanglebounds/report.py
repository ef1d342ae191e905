"""Row builders and CSV/JSON writers shared by the CLI."""

from __future__ import annotations

import csv
import json
from typing import IO, Iterable

from .diagram import LinkDiagram, count_components, writhe
from .jones import CapExceeded, coefficient_summary, jones_polynomial
from .stategraph import StateGraphError, first_betti, is_adequate, reduce, state_graph
from .twist import twist_number

TORUS_COLUMNS = ["q", "k", "p", "C", "T_L", "alpha", "beta", "beta_prime", "alpha_prime"]
GRAPH_COLUMNS = ["e_prime", "v_prime", "betti", "adequate_A", "adequate_B", "tw", "k", "T_L"]
WHITEHEAD_COLUMNS = ["m", "crossings"] + GRAPH_COLUMNS
INVARIANT_COLUMNS = ["name", "crossings", "writhe", "jones", "alpha", "beta", "beta_prime", "alpha_prime"] + GRAPH_COLUMNS


def _betti(g) -> int | None:
    try:
        return first_betti(g)
    except StateGraphError:
        return None


def invariants_row(d: LinkDiagram, name: str = "", cap: int | None = None) -> dict:
    """Everything the CLI reports for one diagram.

    Graph counts are for the reduced all-B graph; Jones fields are ``None``
    when the diagram is over the state-sum cap.
    """
    g = reduce(state_graph(d, "B"))
    row = {
        "name": name, "crossings": len(d.crossings), "writhe": writhe(d) if d.crossings else 0,
        "k": count_components(d), "tw": twist_number(d),
        "adequate_A": is_adequate(d, "A"), "adequate_B": is_adequate(d, "B"),
        "e_prime": g.e_prime, "v_prime": g.v_prime, "betti": _betti(g),
    }
    try:
        v = jones_polynomial(d, cap=cap)
    except CapExceeded:
        row.update(jones=None, alpha=None, beta=None, beta_prime=None, alpha_prime=None, T_L=None)
        return row
    s = coefficient_summary(v)
    row.update(jones=str(v), alpha=s.alpha, beta=s.beta, beta_prime=s.beta_prime,
               alpha_prime=s.alpha_prime, T_L=s.T_L)
    return row


def _cell(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return x


def write_csv(rows: Iterable[dict], columns: list[str], out: IO[str]) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
