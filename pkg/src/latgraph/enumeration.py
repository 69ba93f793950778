"""Isomorph-free generation of small finite lattices.

Every finite bounded meet-semilattice is a lattice (joins are meets of
common upper bounds), so enumerating ``n``-element lattices up to
isomorphism enumerates the bounded semilattices as well.

Generation works by adding a new atom.  Deleting an atom ``a`` from a
finite lattice with at least three elements leaves a lattice, because ``a``
is never the join of two other elements.  Conversely each ``(n+1)``-element
lattice arises from an ``n``-element one by inserting an atom below some
up-set ``U`` that contains the top.  Candidates are kept when they are still
lattices and deduplicated by canonical form.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from .products import ChainProductSpec
from .semilattice import MeetTable, SemilatticeError, chain, from_order

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "CapExceeded",
    "canonical_form",
    "canonical_table",
    "enumerate_lattices",
    "enumerate_universe",
    "enumerate_chain_product_specs",
]

DEFAULT_ENUMERATION_CAP = 8


class CapExceeded(SemilatticeError):
    pass


def _invariant_classes(leq: np.ndarray) -> list[list[int]]:
    """Partition elements into isomorphism-invariant classes, in a canonical order.

    Starts from (rank, down-set size, up-set size, lower/upper cover counts)
    and refines by the multiset of cover-neighbour colours until stable.
    """
    n = leq.shape[0]
    lt = leq & ~np.eye(n, dtype=bool)
    lt_i = lt.astype(np.int64)
    cover = lt & ((lt_i @ lt_i) == 0)
    rank = np.zeros(n, dtype=np.int64)
    for y in np.argsort(leq.sum(axis=0), kind="stable"):
        below = np.flatnonzero(cover[:, y])
        if below.size:
            rank[y] = rank[below].max() + 1

    sig = [
        (int(rank[x]), int(leq[:, x].sum()), int(leq[x].sum()), int(cover[:, x].sum()), int(cover[x].sum()))
        for x in range(n)
    ]
    colour = _rerank(sig)
    while True:
        sig = [
            (
                colour[x],
                tuple(sorted(colour[y] for y in np.flatnonzero(cover[:, x]))),
                tuple(sorted(colour[y] for y in np.flatnonzero(cover[x]))),
            )
            for x in range(n)
        ]
        refined = _rerank(sig)
        if len(set(refined)) == len(set(colour)):
            break
        colour = refined
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(colour[x], []).append(x)
    return [classes[c] for c in sorted(classes)]


def _rerank(sig: list) -> list[int]:
    values = sorted(set(sig))
    pos = {v: i for i, v in enumerate(values)}
    return [pos[s] for s in sig]


def _canonical_order(leq: np.ndarray) -> tuple[bytes, list[int]]:
    classes = _invariant_classes(leq)
    best_key, best_order = None, None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [x for part in parts for x in part]
        key = np.packbits(leq[np.ix_(order, order)]).tobytes()
        if best_key is None or key < best_key:
            best_key, best_order = key, order
    return bytes([leq.shape[0]]) + best_key, best_order


def canonical_form(S: MeetTable) -> bytes:
    """Isomorphism-invariant key: the order relation under its minimal relabeling."""
    return _canonical_order(np.asarray(S.leq))[0]


def canonical_table(S: MeetTable) -> MeetTable:
    """The relabeled copy of ``S`` whose ids follow the canonical order."""
    _, order = _canonical_order(np.asarray(S.leq))
    perm = np.empty(S.n, dtype=np.int64)
    perm[order] = np.arange(S.n)
    return S.relabel(perm)


def _add_atom(S: MeetTable) -> Iterator[MeetTable]:
    n = S.n
    leq = S.leq
    inner = S.interior()
    for r in range(len(inner) + 1):
        for chosen in itertools.combinations(inner, r):
            up = np.zeros(n, dtype=bool)
            up[list(chosen)] = True
            up[S.top] = True
            # U must be an up-set
            if (leq[up].any(axis=0) & ~up).any():
                continue
            new = np.zeros((n + 1, n + 1), dtype=bool)
            new[:n, :n] = leq
            new[n, n] = True
            new[S.bottom, n] = True
            new[n, :n] = up
            try:
                yield from_order(new)
            except SemilatticeError:
                continue


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[MeetTable, ...]:
    if n == 2:
        return (chain(2),)
    if n == 3:
        return (chain(3),)
    found: dict[bytes, MeetTable] = {}
    for S in _level(n - 1):
        for T in _add_atom(S):
            key, order = _canonical_order(np.asarray(T.leq))
            if key not in found:
                perm = np.empty(T.n, dtype=np.int64)
                perm[order] = np.arange(T.n)
                found[key] = T.relabel(perm)
    return tuple(found[k] for k in sorted(found))


def enumerate_lattices(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[MeetTable]:
    """Yield one canonical representative per isomorphism class of ``n``-element lattices.

    Representatives are emitted in sorted canonical-form order, with the
    bottom at id 0 and the top at id ``n - 1``.
    """
    if n < 2:
        raise SemilatticeError("bounded semilattices have at least two elements")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")
    yield from _level(n)


def enumerate_universe(max_n: int, min_n: int = 2, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[MeetTable]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_lattices(n, cap=cap)


def enumerate_chain_product_specs(max_size: int, min_factors: int = 1) -> Iterator[ChainProductSpec]:
    """All nondecreasing chain-length tuples with ``prod(l_i + 1) <= max_size``.

    Ordered by number of factors, then lexicographically.
    """
    if max_size < 2:
        raise SemilatticeError("max_size must be at least 2")

    def extend(prefix, lo, budget, k):
        if k == 0:
            yield prefix
            return
        l = lo
        while (l + 1) ** k <= budget:
            yield from extend(prefix + (l,), l, budget // (l + 1), k - 1)
            l += 1

    k = max(1, min_factors)
    while 2**k <= max_size:
        for lengths in extend((), 1, max_size, k):
            yield ChainProductSpec(lengths)
        k += 1
