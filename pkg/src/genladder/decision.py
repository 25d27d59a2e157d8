"""Planarity and outerplanarity decisions from quadrant flags."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .ladder import (
    CrossEdge,
    GeneralizedLadder,
    QuadrantFlags,
    all_quadrant_flags,
    build_quadrant_index,
    quadrant_flags_naive,
)

__all__ = [
    "DecisionReport",
    "is_planar",
    "is_outerplanar",
    "planarity_report",
    "is_planar_naive",
    "is_outerplanar_naive",
]

UD, UU, DU, DD = range(4)


@dataclass(frozen=True)
class DecisionReport:
    """Verdict plus the evidence that produced it.

    For a failed planarity test ``witness_edge`` is the smallest edge with all
    four quadrants occupied.  For a failed outerplanarity test
    ``clause_witnesses`` maps ``"i"`` and ``"ii"`` to the smallest edge
    violating each clause, and ``witness_edge`` repeats the clause (i) one.
    """

    kind: str  # "planar" or "outerplanar"
    verdict: bool
    witness_edge: Optional[CrossEdge] = None
    outerplanar_condition: Optional[str] = None
    clause_witnesses: dict[str, CrossEdge] = field(default_factory=dict)
    per_edge_flags: Optional[dict[CrossEdge, QuadrantFlags]] = None

    def describe(self) -> str:
        if self.kind == "planar":
            if self.verdict:
                return "planar"
            return f"not planar (edge {self.witness_edge} has all four quadrants occupied)"
        if self.verdict:
            return f"outerplanar (condition {self.outerplanar_condition})"
        parts = ", ".join(f"clause {c} fails at {e}" for c, e in sorted(self.clause_witnesses.items()))
        return f"not outerplanar ({parts})"


def _first(mask: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(mask)
    return int(hits[0]) if len(hits) else None


def is_planar(g: GeneralizedLadder) -> DecisionReport:
    flags = all_quadrant_flags(g, build_quadrant_index(g))
    bad = _first(flags.all(axis=1))
    if bad is None:
        return DecisionReport("planar", True)
    return DecisionReport("planar", False, witness_edge=g.cross[bad])


def planarity_report(g: GeneralizedLadder) -> DecisionReport:
    flags = all_quadrant_flags(g, build_quadrant_index(g))
    per_edge = {e: QuadrantFlags(*map(bool, row)) for e, row in zip(g.cross, flags)}
    bad = _first(flags.all(axis=1))
    return DecisionReport(
        "planar",
        bad is None,
        witness_edge=None if bad is None else g.cross[bad],
        per_edge_flags=per_edge,
    )


def _outer_from_flags(g: GeneralizedLadder, flags: np.ndarray) -> DecisionReport:
    viol_i = _first(flags[:, UU] | flags[:, DD])
    viol_ii = _first(flags[:, UD] | flags[:, DU])
    if viol_i is None:
        return DecisionReport("outerplanar", True, outerplanar_condition="i")
    if viol_ii is None:
        return DecisionReport("outerplanar", True, outerplanar_condition="ii")
    witnesses = {"i": g.cross[viol_i], "ii": g.cross[viol_ii]}
    return DecisionReport("outerplanar", False, witness_edge=witnesses["i"], clause_witnesses=witnesses)


def is_outerplanar(g: GeneralizedLadder) -> DecisionReport:
    return _outer_from_flags(g, all_quadrant_flags(g, build_quadrant_index(g)))


def _naive_flags(g: GeneralizedLadder) -> np.ndarray:
    rows = [quadrant_flags_naive(g, e) for e in g.cross]
    return np.array(rows, dtype=bool).reshape(len(rows), 4)


def is_planar_naive(g: GeneralizedLadder) -> DecisionReport:
    """Quadratic-time planarity decision; baseline for benchmarks and tests."""
    flags = _naive_flags(g)
    bad = _first(flags.all(axis=1))
    return DecisionReport("planar", bad is None, witness_edge=None if bad is None else g.cross[bad])


def is_outerplanar_naive(g: GeneralizedLadder) -> DecisionReport:
    return _outer_from_flags(g, _naive_flags(g))
