"""Symbolic and interval models of a tree-encoding subshift and its
embedding into a triangular map of the square.
"""
from .errors import (BranchCheckFailed, CertificationFailed, IndexBeyondCertainty, NotInLanguage, NotInX,
                     OutOfDomain, ParseFailure, ResourceLimit, SalimitError, SurjectivityViolation)
from .intervals import (CylinderCover, Enclosure, Lap, Verdict, base_f, cantor_code, dist_to_follower,
                        embed_e, follower_cover, in_B_certified, lap_index)
from .languages import FullShift, GoldenMean, Language, SubshiftX
from .orbits import (OrbitSegment, backward_segments, convergence_check, enumerate_backward, natext_metric,
                     salpha_prefix_approx, verify_structure, witness_orbit)
from .square import (EmbeddedMap, PhiValue, SquarePoint, apply_F, distance_to_B, embed_E, figure_rectangles,
                     general_embed, phi, preimage_point, verify_phi_properties)
from .subshift import (OMEGA0, ConstraintSet, StructureParse, member_language, member_point, omega,
                       parse_structure, predecessor_symbols, shift_exponent, shift_point, successor_symbols)
from .trees import (BranchWitness, ExplicitTree, FamilyTree, PredicateTree, builtin_pairs, check_branch,
                    is_tree, named_branch, tree_code_bit, tree_code_prefix)
from .words import SymbolicPoint, enum_word, word_metric, word_rank

__version__ = "0.1.0"

__all__ = [
    "BranchCheckFailed",
    "BranchWitness",
    "CertificationFailed",
    "ConstraintSet",
    "CylinderCover",
    "EmbeddedMap",
    "Enclosure",
    "ExplicitTree",
    "FamilyTree",
    "FullShift",
    "GoldenMean",
    "IndexBeyondCertainty",
    "Language",
    "Lap",
    "NotInLanguage",
    "NotInX",
    "OMEGA0",
    "OrbitSegment",
    "OutOfDomain",
    "ParseFailure",
    "PhiValue",
    "PredicateTree",
    "ResourceLimit",
    "SalimitError",
    "SquarePoint",
    "StructureParse",
    "SubshiftX",
    "SurjectivityViolation",
    "SymbolicPoint",
    "Verdict",
    "apply_F",
    "backward_segments",
    "base_f",
    "builtin_pairs",
    "cantor_code",
    "check_branch",
    "convergence_check",
    "dist_to_follower",
    "distance_to_B",
    "embed_E",
    "embed_e",
    "enum_word",
    "enumerate_backward",
    "figure_rectangles",
    "follower_cover",
    "general_embed",
    "in_B_certified",
    "is_tree",
    "lap_index",
    "member_language",
    "member_point",
    "named_branch",
    "natext_metric",
    "omega",
    "parse_structure",
    "phi",
    "predecessor_symbols",
    "preimage_point",
    "salpha_prefix_approx",
    "shift_exponent",
    "shift_point",
    "successor_symbols",
    "tree_code_bit",
    "tree_code_prefix",
    "verify_phi_properties",
    "verify_structure",
    "witness_orbit",
    "word_metric",
    "word_rank",
    "__version__",
]
