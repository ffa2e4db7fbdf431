"""Shared generators for the test suite.

Everything here is deterministic given a seed so failures reproduce.
"""

import itertools
import random

from votemanip import ManipulationInstance, ScoringVector, WeightedVote


def random_order(rng, m):
    order = list(range(1, m + 1))
    rng.shuffle(order)
    return tuple(order)


def random_profile(rng, m, n_voters, max_weight=50):
    return tuple(
        WeightedVote(rng.randint(1, max_weight), random_order(rng, m))
        for _ in range(n_voters)
    )


def random_nonincreasing(rng, m, lo=-5, hi=9):
    entries = sorted((rng.randint(lo, hi) for _ in range(m)), reverse=True)
    return ScoringVector(tuple(entries))


def random_plurality_like(rng, max_m=4):
    # top entry strictly above a flat tail
    m = rng.randint(2, max_m)
    tail = rng.randint(0, 3)
    top = tail + rng.randint(1, 5)
    return ScoringVector((top,) + (tail,) * (m - 1))


def random_instance(rng, alpha, max_voters=4, max_coalition=3, max_weight=20):
    m = alpha.m
    s_voters = random_profile(rng, m, rng.randint(0, max_voters), max_weight)
    t_weights = tuple(
        rng.randint(1, max_weight) for _ in range(rng.randint(1, max_coalition))
    )
    p = rng.randint(1, m)
    return ManipulationInstance(alpha, s_voters, t_weights, p)


def all_orders(m):
    return [tuple(perm) for perm in itertools.permutations(range(1, m + 1))]


def small_instance_grid():
    """Exhaustive grid of tiny instances for cross-checking solvers.

    Covers every rule class, empty and single-voter S, empty and
    multi-member T, and every choice of p.
    """
    vectors = [
        ScoringVector((2,)),
        ScoringVector((1, 0)),
        ScoringVector((3, 3)),
        ScoringVector((1, 0, 0)),
        ScoringVector((1, 1, 0)),
        ScoringVector((2, 1, 0)),
        ScoringVector((3, 3, 3)),
    ]
    coalitions = [(), (1,), (3,), (1, 1), (1, 3), (3, 3)]
    for alpha in vectors:
        m = alpha.m
        s_choices = [()]
        for w in (2, 5):
            s_choices.extend(((WeightedVote(w, o),) for o in all_orders(m)))
        for s_voters, t_weights, p in itertools.product(
            s_choices, coalitions, range(1, m + 1)
        ):
            yield ManipulationInstance(alpha, s_voters, tuple(t_weights), p)


def even_multisets(values, max_len):
    """All multisets over `values` up to max_len whose sum is even."""
    for n in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(values, n):
            if sum(combo) % 2 == 0:
                yield combo


def exhaustive_partition(ks):
    """Reference subset-sum: every 1-based index subset hitting half the total."""
    total = sum(ks)
    if total % 2:
        return None
    target = total // 2
    hits = []
    for mask in range(1 << len(ks)):
        subset = frozenset(i + 1 for i in range(len(ks)) if mask >> i & 1)
        if sum(ks[i - 1] for i in subset) == target:
            hits.append(subset)
    return hits
