"""Coalition-manipulation solvers and the class-based dispatcher.

All-equal and plurality-like vectors admit direct polynomial solvers; hard
vectors go through an exhaustive, deterministic scan of coalition ballot
assignments with a leaf-evaluation budget.  Every "yes" answer carries a
witness (one ballot per coalition voter) and is re-evaluated before being
returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterable

from .core import (
    CandidateOutOfRange,
    ElectionError,
    ManipulationInstance,
    Order,
    ScoringVector,
    WeightedVote,
    require_valid,
    tally,
    unique_winner,
    winners,
)
from .dichotomy import RuleClass, classify, family_vector

try:
    from . import _bruteforce as _fast
except ImportError:  # extension not built; pure fallback only
    _fast = None
from . import _bruteforce_py as _pure

DEFAULT_NODE_CAP = 10**7

MODE_ALL_EQUAL = "all-equal"
MODE_PLURALITY_LIKE = "plurality-like"
MODE_BRUTE_FORCE = "brute-force"

# Compiled-core guard: the largest score magnitude any leaf can reach must
# stay below this for the 64-bit backend to be safe.
_INT64_GUARD = 2**62


class WrongClass(ElectionError):
    """A class-specific solver was handed a vector of another class."""


class CapExhausted(ElectionError):
    """Answering would need more leaf evaluations than the budget allows."""

    def __init__(self, node_cap: int, search_space: int):
        self.node_cap = node_cap
        self.search_space = search_space
        super().__init__(
            f"enumeration needs more than {node_cap} leaf evaluations "
            f"(search space has {search_space})"
        )


@dataclass(frozen=True)
class ManipulationAnswer:
    """Decision plus, on yes, one witness ballot per coalition voter."""

    decision: bool
    witness: tuple[Order, ...] | None
    mode: str


def instance_vector(inst: ManipulationInstance) -> ScoringVector:
    """The instance's scoring vector, generated from its family if needed.

    Family-based instances take their candidate count from the fixed
    ballots; with no fixed voters there is nothing to infer from, which
    raises UnsupportedM.
    """
    if isinstance(inst.alpha, ScoringVector):
        return inst.alpha
    if not inst.s_voters:
        from .dichotomy import UnsupportedM

        raise UnsupportedM("family-based instance with no fixed voters: candidate count unknown")
    return family_vector(inst.alpha, len(inst.s_voters[0].order))


def normalize_p_first(orders: Iterable[Order], p: int) -> tuple[Order, ...]:
    """Hoist ``p`` to the top of every ballot, keeping the others' relative order.

    Under any nonincreasing vector this never lowers p's score and never
    raises anyone else's, so profiles where p wins stay winning.
    """
    return tuple((p,) + tuple(c for c in order if c != p) for order in orders)


def _canonical_ballot(m: int, p: int) -> Order:
    return (p,) + tuple(c for c in range(1, m + 1) if c != p)


def _coalition_votes(inst: ManipulationInstance, orders: Iterable[Order]) -> tuple[WeightedVote, ...]:
    orders = tuple(orders)
    if len(orders) != len(inst.t_weights):
        raise ElectionError(
            f"need {len(inst.t_weights)} coalition ballots, got {len(orders)}"
        )
    return tuple(WeightedVote(w, o) for w, o in zip(inst.t_weights, orders))


def _confirmed_yes(
    inst: ManipulationInstance,
    vec: ScoringVector,
    witness: tuple[Order, ...],
    unique: bool,
    mode: str,
) -> ManipulationAnswer:
    # Soundness check on every yes: the witness must actually make p win.
    table = tally(inst.s_voters + _coalition_votes(inst, witness), vec)
    won = unique_winner(table) == inst.p if unique else inst.p in winners(table)
    if not won:
        raise ElectionError("internal error: witness failed re-evaluation")
    return ManipulationAnswer(True, witness, mode)


def solve_all_equal(inst: ManipulationInstance, unique: bool = False) -> ManipulationAnswer:
    """Decide manipulation when every ballot position scores the same.

    Scores cannot depend on how anyone votes: all candidates always tie.
    Making p *a* winner is therefore trivially possible, and making p the
    *unique* winner is possible only in a one-candidate election.
    """
    vec = instance_vector(inst)
    if classify(vec).tag is not RuleClass.ALL_EQUAL:
        raise WrongClass("solver requires an all-equal scoring vector")
    if unique and vec.m > 1:
        return ManipulationAnswer(False, None, MODE_ALL_EQUAL)
    witness = tuple(_canonical_ballot(vec.m, inst.p) for _ in inst.t_weights)
    return _confirmed_yes(inst, vec, witness, unique, MODE_ALL_EQUAL)


def solve_plurality_like(inst: ManipulationInstance, unique: bool = False) -> ManipulationAnswer:
    """Decide manipulation for a top-weighted vector with a flat tail.

    Every coalition ballot ranking p first is optimal, because positions
    below the top are interchangeable.  So p can be made a (unique)
    winner exactly when the all-p-first profile does it.
    """
    vec = instance_vector(inst)
    if classify(vec).tag is not RuleClass.PLURALITY_LIKE:
        raise WrongClass("solver requires a plurality-like scoring vector")
    witness = tuple(_canonical_ballot(vec.m, inst.p) for _ in inst.t_weights)
    table = tally(inst.s_voters + _coalition_votes(inst, witness), vec)
    won = unique_winner(table) == inst.p if unique else inst.p in winners(table)
    if not won:
        return ManipulationAnswer(False, None, MODE_PLURALITY_LIKE)
    return ManipulationAnswer(True, witness, MODE_PLURALITY_LIKE)


def _pfirst_ballots(m: int, p: int) -> list[Order]:
    others = [c for c in range(1, m + 1) if c != p]
    return [(p,) + rest for rest in itertools.permutations(others)]


def _all_ballots(m: int) -> list[Order]:
    return list(itertools.permutations(range(1, m + 1)))


def _ballot_row(ballot: Order, entries: tuple[int, ...]) -> list[int]:
    row = [0] * len(ballot)
    for position, candidate in enumerate(ballot):
        row[candidate - 1] = entries[position]
    return row


def _fits_int64(weights, base, entries) -> bool:
    top = max((abs(e) for e in entries), default=0)
    reach = max((abs(b) for b in base), default=0) + sum(w * top for w in weights)
    return reach < _INT64_GUARD


def _pick_backend(backend: str, weights, base, entries):
    if backend == "python":
        return _pure
    fits = _fits_int64(weights, base, entries)
    if backend == "compiled":
        if _fast is None:
            raise ElectionError("compiled search core is not available")
        if not fits:
            raise ElectionError("scores would overflow the compiled search core")
        return _fast
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")
    return _fast if (_fast is not None and fits) else _pure


def brute_force(
    inst: ManipulationInstance,
    unique: bool = False,
    node_cap: int = DEFAULT_NODE_CAP,
    *,
    restrict_p_first: bool = True,
    backend: str = "auto",
) -> ManipulationAnswer:
    """Exhaustive scan over coalition ballot assignments.

    Ballots are enumerated per voter in lexicographic order (with the
    preferred candidate pinned first unless ``restrict_p_first`` is off),
    voters left to right, and the first satisfying assignment wins, so
    answers and witnesses are reproducible.  Raises CapExhausted once
    answering would need more than ``node_cap`` leaf evaluations; any
    decision reached within the budget is exact.

    ``backend`` picks the enumeration core: "auto" uses the compiled
    extension when it is importable and every reachable score provably
    fits in a signed 64-bit integer, and the pure-Python core otherwise;
    "python" / "compiled" force one side.
    """
    vec = instance_vector(inst)
    m = vec.m
    if not 1 <= inst.p <= m:
        raise CandidateOutOfRange(f"preferred candidate {inst.p} outside 1..{m}")
    base_table = tally(inst.s_voters, vec)
    base = [base_table[c] for c in range(1, m + 1)]
    ballots = _pfirst_ballots(m, inst.p) if restrict_p_first else _all_ballots(m)
    ballot_scores = [_ballot_row(b, vec.entries) for b in ballots]
    weights = list(inst.t_weights)
    core = _pick_backend(backend, weights, base, vec.entries)
    cap = max(0, min(node_cap, _INT64_GUARD))
    status, picks, _leaves = core.search_ballots(
        weights, ballot_scores, base, inst.p - 1, bool(unique), cap
    )
    if status == _pure.STATUS_CAP:
        raise CapExhausted(node_cap, len(ballots) ** len(weights))
    if status == _pure.STATUS_YES:
        witness = tuple(ballots[i] for i in picks)
        return _confirmed_yes(inst, vec, witness, unique, MODE_BRUTE_FORCE)
    return ManipulationAnswer(False, None, MODE_BRUTE_FORCE)


def solve(
    inst: ManipulationInstance,
    unique: bool = False,
    node_cap: int = DEFAULT_NODE_CAP,
) -> ManipulationAnswer:
    """Validate, classify, and route to the matching solver.

    All-equal and plurality-like instances are answered in polynomial
    time; hard instances fall through to :func:`brute_force` with the
    given ``node_cap``.
    """
    vec = instance_vector(inst)
    if not isinstance(inst.alpha, ScoringVector):
        inst = replace(inst, alpha=vec)
    require_valid(inst)
    tag = classify(vec).tag
    if tag is RuleClass.ALL_EQUAL:
        return solve_all_equal(inst, unique)
    if tag is RuleClass.PLURALITY_LIKE:
        return solve_plurality_like(inst, unique)
    return brute_force(inst, unique, node_cap)
