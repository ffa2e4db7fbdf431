# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled exhaustive search over coalition ballot assignments.

64-bit twin of ``_bruteforce_py.search_ballots``.  Callers must guarantee
that every reachable score fits in a signed 64-bit integer; the selector
in ``votemanip.manipulation`` checks an exact worst-case bound before
routing here.  Leaf order and results match the pure backend exactly.
"""

from libc.stdlib cimport free, malloc

STATUS_NO = 0
STATUS_YES = 1
STATUS_CAP = 2


def search_ballots(weights, ballot_scores, base, Py_ssize_t p, bint unique,
                   long long node_cap):
    """See ``_bruteforce_py.search_ballots``; identical contract."""
    cdef Py_ssize_t n = len(weights)
    cdef Py_ssize_t nb = len(ballot_scores)
    cdef Py_ssize_t m = len(base)
    cdef Py_ssize_t i, j, c, lvl
    cdef long long w
    cdef long long leaves = 0
    cdef long long sp
    cdef int status = STATUS_NO
    cdef bint win
    cdef object row

    cdef long long *contrib = <long long *> malloc(sizeof(long long) * max(n * nb * m, 1))
    cdef long long *rows = <long long *> malloc(sizeof(long long) * (n + 1) * m)
    cdef Py_ssize_t *choice = <Py_ssize_t *> malloc(sizeof(Py_ssize_t) * max(n, 1))
    if contrib == NULL or rows == NULL or choice == NULL:
        free(contrib)
        free(rows)
        free(choice)
        raise MemoryError()

    try:
        for i in range(n):
            w = weights[i]
            for j in range(nb):
                row = ballot_scores[j]
                for c in range(m):
                    contrib[(i * nb + j) * m + c] = w * <long long> row[c]
        for c in range(m):
            rows[c] = base[c]

        with nogil:
            lvl = 0
            while True:
                while lvl < n:
                    choice[lvl] = 0
                    for c in range(m):
                        rows[(lvl + 1) * m + c] = rows[lvl * m + c] + contrib[(lvl * nb) * m + c]
                    lvl += 1
                if leaves == node_cap:
                    status = 2
                    break
                leaves += 1
                sp = rows[n * m + p]
                win = True
                for c in range(m):
                    if c == p:
                        continue
                    if rows[n * m + c] > sp or (unique and rows[n * m + c] == sp):
                        win = False
                        break
                if win:
                    status = 1
                    break
                lvl = n - 1
                while lvl >= 0 and choice[lvl] == nb - 1:
                    lvl -= 1
                if lvl < 0:
                    status = 0
                    break
                choice[lvl] += 1
                for c in range(m):
                    rows[(lvl + 1) * m + c] = rows[lvl * m + c] + contrib[(lvl * nb + choice[lvl]) * m + c]
                lvl += 1

        if status == 1:
            picks = [choice[i] for i in range(n)]
        else:
            picks = None
        return status, picks, leaves
    finally:
        free(contrib)
        free(rows)
        free(choice)
