"""Pure-Python exhaustive search over coalition ballot assignments.

Reference backend: arbitrary-precision integer scores, no dependencies.
The compiled twin (``_bruteforce.pyx``) must visit leaves in exactly the
same order and return identical results; keep the two in sync.
"""

from __future__ import annotations

STATUS_NO = 0
STATUS_YES = 1
STATUS_CAP = 2


def search_ballots(weights, ballot_scores, base, p, unique, node_cap):
    """Depth-first product scan over per-voter ballot choices.

    weights: coalition voters' weights, leftmost voter varying slowest.
    ballot_scores: for each candidate ballot, the per-candidate (0-based)
        score row it contributes at weight 1; the same rows apply to every
        voter.  Ballot index order defines the enumeration order.
    base: per-candidate scores contributed by the fixed voters.
    p: 0-based index of the candidate that must win.
    unique: require a strict win instead of a tie for first place.
    node_cap: leaf-evaluation budget; STATUS_CAP is returned as soon as
        one more leaf than the budget allows would be needed, so an
        answer returned within the budget is always exact.

    Returns ``(status, picks, leaves)`` where picks is the per-voter
    ballot index of the first satisfying assignment (None otherwise)
    and leaves counts evaluated assignments.
    """
    n = len(weights)
    nb = len(ballot_scores)
    m = len(base)
    contrib = [[[w * x for x in row] for row in ballot_scores] for w in weights]
    choice = [0] * n
    rows = [list(base)] + [[0] * m for _ in range(n)]
    leaves = 0
    level = 0
    while True:
        while level < n:
            choice[level] = 0
            _add(rows[level], contrib[level][0], rows[level + 1])
            level += 1
        if leaves == node_cap:
            return STATUS_CAP, None, leaves
        leaves += 1
        if _wins(rows[n], p, unique):
            return STATUS_YES, list(choice), leaves
        level = n - 1
        while level >= 0 and choice[level] == nb - 1:
            level -= 1
        if level < 0:
            return STATUS_NO, None, leaves
        choice[level] += 1
        _add(rows[level], contrib[level][choice[level]], rows[level + 1])
        level += 1


def _add(src, extra, dst):
    for i, v in enumerate(src):
        dst[i] = v + extra[i]


def _wins(scores, p, unique):
    sp = scores[p]
    for c, v in enumerate(scores):
        if c == p:
            continue
        if v > sp or (unique and v == sp):
            return False
    return True
