"""Biflats, conormal and unmixed complexes of matroids.

Thin wrapper around the C++ core: matroids given by their flats, the three
order-theoretic complexes attached to a matroid and its dual, certified
elementary-collapse sequences between them, reduced GF(2) Betti numbers and a
budgeted non-pure shellability search.
"""

from ._lagrangian import (
    Complex,
    LagrangianError,
    Matroid,
    apply_sequence,
    bergman_complex,
    betti,
    biflats,
    biflats_complex,
    conormal_complex,
    is_shellable,
    join_of_bergman_complexes,
    matroid_text,
    minimal_bichains,
    parse_complex,
    parse_graph_matroid,
    parse_input,
    parse_matroid,
    reduced_euler,
    theorem1_sequence,
    theorem2_sequence,
    uniform_matroid,
    unmixed_complex,
    unmixed_join_vertex_map,
    verify_shelling,
)

__all__ = [
    "Complex",
    "LagrangianError",
    "Matroid",
    "apply_sequence",
    "bergman_complex",
    "betti",
    "biflats",
    "biflats_complex",
    "conormal_complex",
    "is_shellable",
    "join_of_bergman_complexes",
    "matroid_text",
    "minimal_bichains",
    "parse_complex",
    "parse_graph_matroid",
    "parse_input",
    "parse_matroid",
    "reduced_euler",
    "theorem1_sequence",
    "theorem2_sequence",
    "uniform_matroid",
    "unmixed_complex",
    "unmixed_join_vertex_map",
    "verify_shelling",
]
