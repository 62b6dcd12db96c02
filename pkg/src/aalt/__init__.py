"""aalt: analysis of almost alternating link diagrams.

A combinatorial-map toolkit for link diagrams on the sphere: alternation
classification and reducing moves deciding splittability, an exact Kauffman
bracket oracle auditing every rewrite, and a discharging laboratory for
4-regular plane graphs.
"""

from .bracket import LaurentPolynomial, LinkingMatrix, kauffman_bracket, linking_matrix, writhe
from .classify import (
    AlternationReport,
    alternation_report,
    connected_sum,
    connected_sum_factors,
    hopf_degeneracy_check,
    is_alternating,
    is_prime,
    is_reduced,
)
from .codec import emit_gauss, emit_json, emit_pd, emit_svg, parse_gauss, parse_json, parse_pd
from .diagram import (
    Crossing,
    Diagram,
    Face,
    build_diagram,
    canonical_diagram,
    canonical_key,
    crossing_change,
    faces,
    is_isomorphic,
    link_components,
    mirror,
    shadow_components,
)
from .rewrite import (
    MoveTrace,
    SplitVerdict,
    decide_splittable,
    decide_trivial_multicomponent,
    reducing_move_I,
    reducing_move_II,
)
from .rules import ReducednessVerdict, RuleMatch, RuleSet

__version__ = "0.1.0"

__all__ = [
    "AlternationReport",
    "Crossing",
    "Diagram",
    "Face",
    "LaurentPolynomial",
    "LinkingMatrix",
    "MoveTrace",
    "ReducednessVerdict",
    "RuleMatch",
    "RuleSet",
    "SplitVerdict",
    "alternation_report",
    "build_diagram",
    "canonical_diagram",
    "canonical_key",
    "connected_sum",
    "connected_sum_factors",
    "crossing_change",
    "decide_splittable",
    "decide_trivial_multicomponent",
    "emit_gauss",
    "emit_json",
    "emit_pd",
    "emit_svg",
    "faces",
    "hopf_degeneracy_check",
    "is_alternating",
    "is_isomorphic",
    "is_prime",
    "is_reduced",
    "kauffman_bracket",
    "link_components",
    "linking_matrix",
    "mirror",
    "parse_gauss",
    "parse_json",
    "parse_pd",
    "reducing_move_I",
    "reducing_move_II",
    "shadow_components",
    "writhe",
]
