"""The matching algorithms and the dispatcher that picks among them."""

from .dispatch import ALGORITHMS, choose, dispatch, run
from .nfa_product import counting_dfa, match_nfa_product
from .tables import GapTables
from .tree_matmul import (PartialEmbeddingsMatrix, bound, build_B, compute_Ak, mask,
                          match_tree_matmul)
from .tuple_enum import match_tuple_enum
from .vsn_dp import boundaries, match_vsn_dp

__all__ = [
    "ALGORITHMS", "GapTables", "PartialEmbeddingsMatrix", "bound", "boundaries", "build_B",
    "choose", "compute_Ak", "counting_dfa", "dispatch", "mask", "match_nfa_product",
    "match_tree_matmul", "match_tuple_enum", "match_vsn_dp", "run",
]
