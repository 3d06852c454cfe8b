"""Subsequence matching under gap constraints."""

from .automata import Dfa, FactorTable, build_factor_table, dfa_accepts, factor_query
from .core import (Alphabet, ConstraintSet, GapConstraint, Instance, MatchResult, check_embedding,
                   gap, greedy_embedding, oracle_match)
from .errors import (BudgetExhausted, GapMatchError, InvalidArgument, TooLarge,
                     UnsupportedConstraint, UnsupportedStructure, ValidationError)
from .matchers import (dispatch, match_nfa_product, match_tree_matmul, match_tuple_enum,
                       match_vsn_dp)
from .semilinear import LinearSet, MembershipTable, SemilinearSet, build_table, contains, table_query

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "BudgetExhausted", "ConstraintSet", "Dfa", "FactorTable", "GapConstraint",
    "GapMatchError", "Instance", "InvalidArgument", "LinearSet", "MatchResult", "MembershipTable",
    "SemilinearSet", "TooLarge", "UnsupportedConstraint", "UnsupportedStructure", "ValidationError",
    "build_factor_table", "build_table", "check_embedding", "contains", "dfa_accepts", "dispatch",
    "factor_query", "gap", "greedy_embedding", "match_nfa_product", "match_tree_matmul",
    "match_tuple_enum", "match_vsn_dp", "oracle_match", "table_query",
]
