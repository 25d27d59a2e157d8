"""Planarity and outerplanarity of generalized ladder graphs."""

from .decision import DecisionReport, is_outerplanar, is_planar, planarity_report
from .embedding import (
    Embedding,
    classify_edges,
    outerplanar_embedding,
    planar_embedding,
    verify_embedding,
)
from .formats import parse_instance, random_instance, serialize_instance
from .ladder import (
    CrossEdge,
    GeneralizedLadder,
    QuadrantFlags,
    VertexRef,
    apply_symmetry,
    build_quadrant_index,
    from_functigraph,
    new_ladder,
    quadrant_flags,
    quadrant_flags_naive,
)
from .oracle import oracle_is_outerplanar, oracle_is_planar, to_simple_graph
from .witness import (
    SubdivisionCertificate,
    extract_k33_witness,
    extract_outerplanar_witness,
    verify_certificate,
)

__version__ = "0.1.0"
