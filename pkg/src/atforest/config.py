"""Enumeration size caps.

Caps are configuration rather than constants so tests and the CLI can
tighten or relax them per call.  Defaults are sized so that every
acceptance check finishes in seconds.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    parity_arcs: int = 24       # eulerian sub-digraph counting
    oracle_arcs: int = 20       # brute-force parity oracle
    coefficient_edges: int = 40  # graph polynomial coefficient extraction
    orientation_edges: int = 20  # exhaustive orientation search


DEFAULT_CAPS = Caps()
