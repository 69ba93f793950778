"""Finite bounded meet-semilattices stored as materialized meet tables.

Elements are the dense ids ``0..n-1``.  The bottom and top elements are
stored explicitly, so imported tables may label them arbitrarily.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "MeetTable",
    "OrderView",
    "Violation",
    "SemilatticeError",
    "MalformedTable",
    "InvalidMeetTable",
    "check_axioms",
    "validate",
    "induced_order",
    "atoms",
    "dual_atoms",
    "zero_divisors",
    "is_artinian",
    "chain",
    "from_order",
    "from_json",
    "to_json",
    "loads",
    "dumps",
]

AXIOMS = (
    "NotIdempotent",
    "NotCommutative",
    "NotAssociative",
    "BottomNotAbsorbing",
    "TopNotNeutral",
    "BottomEqualsTop",
)


class SemilatticeError(ValueError):
    pass


class MalformedTable(SemilatticeError):
    """The candidate is not a square table of in-range element ids."""


@dataclass(frozen=True)
class Violation:
    """One failed axiom together with the elements that witness it."""

    axiom: str
    witness: tuple[int, ...]

    def __str__(self):
        return f"{self.axiom} at {self.witness}"


class InvalidMeetTable(SemilatticeError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        head = ", ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            head += f", ... ({more} more)"
        super().__init__(f"{len(self.violations)} axiom violation(s): {head}")


def _as_array(meet) -> np.ndarray:
    try:
        arr = np.array(meet, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"meet table is not an integer matrix: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise MalformedTable(f"meet table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise MalformedTable("meet table is empty")
    if arr.min() < 0 or arr.max() >= n:
        raise MalformedTable(f"meet table entries must lie in [0, {n})")
    return arr


def check_axioms(meet, bottom: int, top: int) -> list[Violation]:
    """Return every axiom violation of a candidate table (empty if valid).

    Commutativity witnesses are reported once per unordered pair ``x < y``.
    """
    m = _as_array(meet)
    n = m.shape[0]
    for name, e in (("bottom", bottom), ("top", top)):
        if not 0 <= int(e) < n:
            raise MalformedTable(f"{name} id {e} out of range [0, {n})")

    out: list[Violation] = []
    idx = np.arange(n)
    for x in np.flatnonzero(m[idx, idx] != idx):
        out.append(Violation("NotIdempotent", (int(x),)))
    xs, ys = np.nonzero(np.triu(m != m.T, k=1))
    out.extend(Violation("NotCommutative", (int(x), int(y))) for x, y in zip(xs, ys))
    # (x y) z versus x (y z), one x-slab at a time to bound memory
    for x in range(n):
        left = m[m[x]]  # left[y, z] = meet(meet(x, y), z)
        right = m[x][m]  # right[y, z] = meet(x, meet(y, z))
        ys, zs = np.nonzero(left != right)
        out.extend(Violation("NotAssociative", (x, int(y), int(z))) for y, z in zip(ys, zs))
    for x in np.flatnonzero(m[:, bottom] != bottom):
        out.append(Violation("BottomNotAbsorbing", (int(x),)))
    for x in np.flatnonzero(m[:, top] != idx):
        out.append(Violation("TopNotNeutral", (int(x),)))
    if bottom == top:
        out.append(Violation("BottomEqualsTop", (int(bottom),)))
    return out


def validate(meet, bottom: int, top: int, labels: Sequence[str] | None = None) -> "MeetTable":
    """Build a `MeetTable`, raising `InvalidMeetTable` listing all violations."""
    violations = check_axioms(meet, bottom, top)
    if violations:
        raise InvalidMeetTable(violations)
    return MeetTable._trusted(_as_array(meet), int(bottom), int(top), labels)


@dataclass(frozen=True)
class OrderView:
    """Induced order ``x <= y iff meet(x, y) == x`` with its Hasse diagram."""

    leq: np.ndarray
    covers: tuple[tuple[int, int], ...]
    length: int


@dataclass(frozen=True, eq=False)
class MeetTable:
    """A validated finite bounded meet-semilattice.

    Construct through `validate`, `from_json` or the product/enumeration
    helpers; the raw constructor also validates.
    """

    meet: np.ndarray
    bottom: int
    top: int
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        m = _as_array(self.meet)
        violations = check_axioms(m, self.bottom, self.top)
        if violations:
            raise InvalidMeetTable(violations)
        self._freeze(m)

    def _freeze(self, m):
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "meet", m)
        object.__setattr__(self, "bottom", int(self.bottom))
        object.__setattr__(self, "top", int(self.top))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != m.shape[0]:
                raise MalformedTable(f"expected {m.shape[0]} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def _trusted(cls, m, bottom, top, labels=None) -> "MeetTable":
        obj = object.__new__(cls)
        object.__setattr__(obj, "meet", m)
        object.__setattr__(obj, "bottom", bottom)
        object.__setattr__(obj, "top", top)
        object.__setattr__(obj, "labels", labels)
        obj._freeze(m)
        return obj

    @property
    def n(self) -> int:
        return self.meet.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, MeetTable):
            return NotImplemented
        return (
            self.bottom == other.bottom
            and self.top == other.top
            and np.array_equal(self.meet, other.meet)
        )

    def __hash__(self):
        return hash((self.bottom, self.top, self.meet.tobytes()))

    def __repr__(self):
        return f"MeetTable(n={self.n}, bottom={self.bottom}, top={self.top})"

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def interior(self) -> list[int]:
        return [x for x in range(self.n) if x != self.bottom and x != self.top]

    @cached_property
    def leq(self) -> np.ndarray:
        leq = self.meet == np.arange(self.n)[:, None]
        leq.setflags(write=False)
        return leq

    @cached_property
    def order(self) -> OrderView:
        return induced_order(self)

    @cached_property
    def join_table(self) -> np.ndarray:
        from .lattice import join_table

        return join_table(self)

    def relabel(self, perm: Sequence[int]) -> "MeetTable":
        """Isomorphic copy in which old element ``x`` gets the id ``perm[x]``."""
        perm = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        m = perm[self.meet[np.ix_(inv, inv)]]
        labels = None
        if self.labels is not None:
            labels = [self.labels[i] for i in inv]
        return MeetTable._trusted(m, int(perm[self.bottom]), int(perm[self.top]), labels)


def induced_order(S: MeetTable) -> OrderView:
    leq = S.leq
    lt = leq & ~np.eye(S.n, dtype=bool)
    lt_i = lt.astype(np.int64)
    cover = lt & ((lt_i @ lt_i) == 0)
    covers = tuple((int(x), int(y)) for x, y in zip(*np.nonzero(cover)))

    # longest path in the cover DAG; elements sorted by down-set size are a
    # linear extension
    height = np.zeros(S.n, dtype=np.int64)
    for y in np.argsort(leq.sum(axis=0), kind="stable"):
        below = np.flatnonzero(cover[:, y])
        if below.size:
            height[y] = height[below].max() + 1
    return OrderView(leq=leq, covers=covers, length=int(height[S.top]))


def atoms(S: MeetTable) -> set[int]:
    """Minimal elements of ``S - {0, 1}``."""
    inner = S.interior()
    return {a for a in inner if not any(S.leq[y, a] for y in inner if y != a)}


def dual_atoms(S: MeetTable) -> set[int]:
    """Maximal elements of ``S - {0, 1}``."""
    inner = S.interior()
    return {d for d in inner if not any(S.leq[d, y] for y in inner if y != d)}


def zero_divisors(S: MeetTable) -> set[int]:
    nonzero = np.arange(S.n) != S.bottom
    hits = (S.meet == S.bottom) & nonzero[None, :]
    return {int(s) for s in np.flatnonzero(hits.any(axis=1) & nonzero)}


def is_artinian(S: MeetTable) -> bool:
    # strictly decreasing chains in a finite poset have at most n terms
    return True


def chain(n: int) -> MeetTable:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    if n < 2:
        raise SemilatticeError("a bounded chain needs at least two elements")
    idx = np.arange(n)
    return MeetTable._trusted(np.minimum.outer(idx, idx), 0, n - 1)


def to_json(S: MeetTable) -> dict:
    doc = {"n": S.n, "bottom": S.bottom, "top": S.top, "meet": S.meet.tolist()}
    if S.labels is not None:
        doc["labels"] = list(S.labels)
    return doc


def from_json(doc: dict) -> MeetTable:
    """Parse the shared instance format and validate it."""
    if not isinstance(doc, dict):
        raise MalformedTable("instance must be a JSON object")
    missing = [k for k in ("n", "bottom", "top", "meet") if k not in doc]
    if missing:
        raise MalformedTable(f"instance is missing keys: {', '.join(missing)}")
    m = _as_array(doc["meet"])
    if m.shape[0] != doc["n"]:
        raise MalformedTable(f"n={doc['n']} but meet table has {m.shape[0]} rows")
    return validate(m, doc["bottom"], doc["top"], doc.get("labels"))


def dumps(S: MeetTable) -> str:
    return json.dumps(to_json(S), separators=(",", ":"))


def loads(text: str) -> MeetTable:
    return from_json(json.loads(text))


def from_order(leq: np.ndarray | Iterable[Iterable[bool]]) -> MeetTable:
    """Build the meet table of a finite lattice given its order relation.

    Raises `SemilatticeError` when some pair has no greatest lower bound or
    the order lacks a bottom or top.
    """
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        raise SemilatticeError("order has no unique bottom and top")
    down_size = leq.sum(axis=0)
    m = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            common = np.flatnonzero(leq[:, x] & leq[:, y])
            g = common[np.argmax(down_size[common])]
            if not leq[common, g].all():
                raise SemilatticeError(f"elements {x} and {y} have no meet")
            m[x, y] = m[y, x] = g
    return MeetTable._trusted(m, int(bottoms[0]), int(tops[0]))
