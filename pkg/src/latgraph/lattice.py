"""Joins and lattice laws on finite bounded meet-semilattices.

A finite meet-semilattice with a top element is a lattice: the join of
``x`` and ``y`` is the meet of their (nonempty) set of common upper bounds.
"""

from __future__ import annotations

import numpy as np

from .semilattice import MeetTable, dual_atoms

__all__ = [
    "join_table",
    "join",
    "is_modular",
    "is_distributive",
    "is_dually_atomic",
]


def join_table(S: MeetTable) -> np.ndarray:
    leq = S.leq
    up_size = leq.sum(axis=1)
    n = S.n
    out = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            common = np.flatnonzero(leq[x] & leq[y])
            # the least common upper bound has the largest up-set
            j = common[np.argmax(up_size[common])]
            out[x, y] = out[y, x] = j
    out.setflags(write=False)
    return out


def join(S: MeetTable, x: int, y: int) -> int:
    return int(S.join_table[x, y])


def is_modular(S: MeetTable) -> tuple[bool, tuple[int, int, int] | None]:
    """Check ``c <= b  =>  (c + a) b == c + a b`` over all triples.

    Returns ``(True, None)`` or ``(False, (a, b, c))`` for the first failing
    triple in lexicographic order.
    """
    m, j, leq = S.meet, S.join_table, S.leq
    n = S.n
    for a in range(n):
        # lhs[b, c] = meet(join(c, a), b); rhs[b, c] = join(c, meet(a, b))
        lhs = m[np.arange(n)[:, None], j[:, a][None, :]]
        rhs = j[m[a][:, None], np.arange(n)[None, :]]
        bad = leq.T & (lhs != rhs)
        if bad.any():
            b, c = np.argwhere(bad)[0]
            return False, (a, int(b), int(c))
    return True, None


def is_distributive(S: MeetTable) -> tuple[bool, tuple[int, int, int] | None]:
    """Check ``x (y + z) == x y + x z`` over all triples, with a witness."""
    m, j = S.meet, S.join_table
    n = S.n
    for x in range(n):
        lhs = m[x][j]  # lhs[y, z] = meet(x, join(y, z))
        rhs = j[m[x][:, None], m[x][None, :]]
        bad = lhs != rhs
        if bad.any():
            y, z = np.argwhere(bad)[0]
            return False, (x, int(y), int(z))
    return True, None


def is_dually_atomic(S: MeetTable) -> bool:
    """Every element other than top lies below some dual atom."""
    coatoms = sorted(dual_atoms(S))
    # false only for the 2-element lattice, which has no dual atoms at all
    return all(S.leq[x, coatoms].any() for x in range(S.n) if x != S.top)
