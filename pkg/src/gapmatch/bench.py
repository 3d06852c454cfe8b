"""Benchmark families and the timing loop behind ``gapmatch bench``."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor

from .core import GapConstraint, Instance
from .errors import BudgetExhausted, GapMatchError
from .generators import gen_ov3, random_ov
from .matchers import run
from .semilinear import SemilinearSet

SUITES = ("ov3", "nested")
OV_DIMENSION = 4


def nested_instance(n: int, K: int = 32) -> Instance:
    """Negative instance over a unary text that backtracking cannot refute quickly.

    A chain of nested constraints forces odd inner gaps while the outermost
    constraint demands an even one; the two adjacent end constraints make the
    parities collide.  The outer constraint is only checked once the whole
    pattern is placed.
    """
    if K < 4:
        raise ValueError("the nested family needs K >= 4")
    m = 2 * K
    odd, even = SemilinearSet.linear(1, 2), SemilinearSet.linear(0, 2)
    cs = [GapConstraint(1, m, even), GapConstraint(1, 2, SemilinearSet.linear(0)),
          GapConstraint(m - 1, m, SemilinearSet.linear(0))]
    cs += [GapConstraint(i, m + 1 - i, odd) for i in range(2, K - 1)]
    return Instance.from_strings("a" * n, "a" * m, cs, metadata={"source": "nested", "n": n, "K": K})


def ov_instance(n: int, seed=0) -> Instance:
    """3-OV instance whose text length is close to ``n``."""
    per_block = 4 * OV_DIMENSION + 2
    vectors = max(1, round((n / 2 + per_block * 2 - 2) / (3 * per_block)))
    return gen_ov3(random_ov(vectors, OV_DIMENSION, seed=seed))


def suite_instance(suite: str, n: int, seed=0) -> Instance:
    if suite == "nested":
        return nested_instance(n)
    if suite == "ov3":
        return ov_instance(n, seed)
    raise ValueError(f"unknown suite {suite!r}")


def _time_one(args):
    suite, n, algorithm, seed, oracle_steps = args
    inst = suite_instance(suite, n, seed)
    started = time.perf_counter()
    try:
        result = run(inst, algorithm, oracle_steps=oracle_steps)
        verdict = "match" if result.matched else "no-match"
        mults = result.stats.get("multiplications", "")
    except BudgetExhausted:
        verdict, mults = "budget-exhausted", ""
    except GapMatchError as exc:
        verdict, mults = f"error:{type(exc).__name__}", ""
    millis = (time.perf_counter() - started) * 1000
    return {"n": inst.n, "K": inst.constraints.K, "algorithm": algorithm,
            "millis": round(millis, 3), "multiplications": mults, "verdict": verdict}


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("GAPMATCH_THREADS", "1")))
    except ValueError:
        return 1


def run_bench(suite, sizes, algorithms=("tree-matmul",), seed=0, oracle_steps=10**6):
    jobs = [(suite, n, a, seed, oracle_steps) for n in sizes for a in algorithms]
    workers = worker_count()
    if workers == 1 or len(jobs) == 1:
        return [_time_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_time_one, jobs))
