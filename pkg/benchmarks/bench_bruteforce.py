#!/usr/bin/env python3
"""Time the exhaustive ballot search: compiled core vs pure Python.

The workload is a five-candidate election where the coalition can never
promote its candidate, so both backends must sweep the entire space of
24^n coalition ballot assignments (n coalition voters).
"""

import argparse
import math
import time

from votemanip import ManipulationInstance, ScoringVector, WeightedVote, brute_force

try:
    from votemanip import _bruteforce  # noqa: F401

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def hopeless_instance(n_coalition: int) -> ManipulationInstance:
    # one overwhelming fixed voter keeps candidate 2 out of reach
    alpha = ScoringVector((2, 2, 1, 0, 0))
    blocker = WeightedVote(10**6, (2, 3, 4, 5, 1))
    return ManipulationInstance(alpha, (blocker,), (1,) * n_coalition, p=1)


def run(inst: ManipulationInstance, backend: str, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        answer = brute_force(inst, backend=backend)
        best = min(best, time.perf_counter() - start)
        assert not answer.decision
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--coalition", type=int, default=4, help="coalition voters (leaves = 24^n)"
    )
    parser.add_argument("--repeats", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    inst = hopeless_instance(args.coalition)
    leaves = 24**args.coalition
    print(f"workload: m=5, {args.coalition} coalition voters, {leaves:,} leaves")

    t_py = run(inst, "python", args.repeats)
    print(f"python   : {t_py:8.3f}s  {leaves / t_py:12,.0f} leaves/s")

    if not HAVE_COMPILED:
        print("compiled : not built, skipping")
        return
    t_c = run(inst, "compiled", args.repeats)
    print(f"compiled : {t_c:8.3f}s  {leaves / t_c:12,.0f} leaves/s")
    print(f"speedup  : {t_py / t_c:.1f}x")


if __name__ == "__main__":
    main()
