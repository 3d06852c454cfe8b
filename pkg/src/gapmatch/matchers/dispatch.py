"""Algorithm selection by constraint shape."""

from __future__ import annotations

from ..core import DEFAULT_ORACLE_STEPS, Instance, MatchResult, oracle_match
from ..errors import BudgetExhausted
from ..structure import build_graph, is_non_intersecting, vsn_report
from .nfa_product import DEFAULT_STATE_BUDGET, match_nfa_product
from .tree_matmul import match_tree_matmul
from .tuple_enum import DEFAULT_K_LIMIT, match_tuple_enum
from .vsn_dp import match_vsn_dp

DEFAULT_VSN_LIMIT = 4

ALGORITHMS = ("oracle", "tuple-enum", "nfa-product", "vsn-dp", "tree-matmul")


def product_size(inst: Instance) -> int:
    """Upper bound on configurations: counter values times active DFA state vectors."""
    worst = 1
    for i in range(1, inst.m):
        size = 1
        for c in inst.constraints:
            if c.i <= i < c.j:
                size *= c.language.state_count if c.is_regular else inst.n + 2
        worst = max(worst, size)
    return worst * inst.m


def choose(inst: Instance, vsn_limit: int = DEFAULT_VSN_LIMIT, state_budget: int = DEFAULT_STATE_BUDGET):
    """Return ``(name, reason, ordering)`` for the preferred algorithm."""
    cs = inst.constraints
    if is_non_intersecting(cs):
        return "tree-matmul", "non-intersecting", None
    report = vsn_report(build_graph(inst.m, cs))
    if report.vsn <= vsn_limit:
        return "vsn-dp", f"vsn {report.vsn} <= {vsn_limit}", report.ordering
    if cs.all_regular and product_size(inst) <= state_budget:
        return "nfa-product", "all constraints regular", None
    if cs.all_semilinear and cs.K <= DEFAULT_K_LIMIT:
        return "tuple-enum", f"semilinear with K = {cs.K}", None
    return "oracle", "no structural algorithm applies", None


def run(inst: Instance, algorithm: str, *, oracle_steps=DEFAULT_ORACLE_STEPS,
        state_budget=DEFAULT_STATE_BUDGET, ordering=None) -> MatchResult:
    if algorithm == "oracle":
        return oracle_match(inst, oracle_steps)
    if algorithm == "tuple-enum":
        return match_tuple_enum(inst)
    if algorithm == "nfa-product":
        return match_nfa_product(inst, state_budget)
    if algorithm == "vsn-dp":
        return match_vsn_dp(inst, ordering)
    if algorithm == "tree-matmul":
        return match_tree_matmul(inst)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def dispatch(inst: Instance, *, vsn_limit=DEFAULT_VSN_LIMIT, oracle_steps=DEFAULT_ORACLE_STEPS,
             state_budget=DEFAULT_STATE_BUDGET) -> MatchResult:
    name, reason, ordering = choose(inst, vsn_limit, state_budget)
    if name == "nfa-product":
        try:
            result = match_nfa_product(inst, state_budget)
        except BudgetExhausted:
            name, reason = "oracle", "product budget exceeded"
            result = oracle_match(inst, oracle_steps)
    else:
        result = run(inst, name, oracle_steps=oracle_steps, state_budget=state_budget,
                     ordering=ordering)
    result.stats["dispatch"] = {"algorithm": name, "reason": reason}
    return result
