"""Diagrammatic knot invariants and crosscap-number bounds for Conway sums of tangles."""

from .diagram import LinkDiagram, TangleDiagram, conway_sum
from .jones import coefficient_summary, jones_polynomial, kauffman_bracket
from .pd import parse, parse_pd, parse_tangle, serialize

__version__ = "0.1.0"
