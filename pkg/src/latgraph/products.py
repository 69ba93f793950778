"""Direct products of finite chains with the componentwise-min meet."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .semilattice import MeetTable, SemilatticeError

__all__ = [
    "DEFAULT_PRODUCT_CAP",
    "ChainProductSpec",
    "ProductPoint",
    "ChainProduct",
    "ProductTooLarge",
    "NotAVertex",
    "product_cap",
    "chain_product",
    "product_degree_formula",
    "parse_chains",
]

DEFAULT_PRODUCT_CAP = 10_000
CAP_ENV = "LATGRAPH_MAX_PRODUCT"


class ProductTooLarge(SemilatticeError):
    pass


class NotAVertex(SemilatticeError):
    """Raised for the bottom or top point, which are not graph vertices."""


def product_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_PRODUCT_CAP
    try:
        return int(raw)
    except ValueError:
        raise SemilatticeError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class ChainProductSpec:
    """Chain lengths ``(l_1, ..., l_n)``; factor ``i`` has ``l_i + 1`` elements."""

    lengths: tuple[int, ...]

    def __init__(self, lengths: Sequence[int]):
        lengths = tuple(int(l) for l in lengths)
        if not lengths:
            raise SemilatticeError("a chain product needs at least one factor")
        if any(l < 1 for l in lengths):
            raise SemilatticeError(f"chain lengths must be positive, got {lengths}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def factors(self) -> int:
        return len(self.lengths)

    @property
    def size(self) -> int:
        return math.prod(l + 1 for l in self.lengths)

    def points(self) -> Iterator["ProductPoint"]:
        """All points in id order (last coordinate varies fastest)."""
        for idx in np.ndindex(*(l + 1 for l in self.lengths)):
            yield ProductPoint(tuple(int(c) for c in idx))

    def __str__(self):
        return "(" + ",".join(map(str, self.lengths)) + ")"


@dataclass(frozen=True)
class ProductPoint:
    coords: tuple[int, ...]

    def zero_indicator(self) -> tuple[int, ...]:
        """``delta_i(x)``: 1 where coordinate ``i`` is zero, else 0."""
        return tuple(int(c == 0) for c in self.coords)


@dataclass(frozen=True, eq=False)
class ChainProduct:
    spec: ChainProductSpec
    table: MeetTable

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(l + 1 for l in self.spec.lengths)

    def to_id(self, point: ProductPoint | Sequence[int]) -> int:
        coords = point.coords if isinstance(point, ProductPoint) else tuple(point)
        if len(coords) != self.spec.factors or any(
            not 0 <= c <= l for c, l in zip(coords, self.spec.lengths)
        ):
            raise SemilatticeError(f"{coords} is not a point of {self.spec}")
        return int(np.ravel_multi_index(coords, self.shape))

    @cached_property
    def coords(self) -> np.ndarray:
        """``coords[x]`` is the coordinate vector of element id ``x``."""
        return np.indices(self.shape).reshape(self.spec.factors, -1).T

    def to_point(self, x: int) -> ProductPoint:
        return ProductPoint(tuple(self.coords[x].tolist()))


def chain_product(spec: ChainProductSpec | Sequence[int], cap: int | None = None) -> ChainProduct:
    """Materialize the product of chains ``spec`` as a `MeetTable`.

    ``cap`` defaults to `product_cap()` (the ``LATGRAPH_MAX_PRODUCT``
    environment variable, else 10,000 elements).
    """
    if not isinstance(spec, ChainProductSpec):
        spec = ChainProductSpec(spec)
    cap = product_cap() if cap is None else cap
    size = spec.size
    if size > cap:
        raise ProductTooLarge(f"product {spec} has {size} elements, cap is {cap}")

    shape = tuple(l + 1 for l in spec.lengths)
    coords = np.indices(shape).reshape(spec.factors, -1)  # coords[i, x]
    meet_coords = np.minimum(coords[:, :, None], coords[:, None, :])
    meet = np.ravel_multi_index(tuple(meet_coords), shape)
    labels = None
    if spec.factors > 1:
        labels = ["(" + ",".join(map(str, coords[:, x])) + ")" for x in range(size)]
    table = MeetTable._trusted(meet.astype(np.int64), 0, size - 1, labels)
    return ChainProduct(spec, table)


def product_degree_formula(spec: ChainProductSpec | Sequence[int], x: ProductPoint | Sequence[int]) -> int:
    """Closed-form degree of ``x`` in the graph of the chain product.

    ``prod(l_i + 1) - prod((l_i + 1) ** delta_i(x)) - 2``
    """
    if not isinstance(spec, ChainProductSpec):
        spec = ChainProductSpec(spec)
    if not isinstance(x, ProductPoint):
        x = ProductPoint(tuple(int(c) for c in x))
    if len(x.coords) != spec.factors or any(
        not 0 <= c <= l for c, l in zip(x.coords, spec.lengths)
    ):
        raise SemilatticeError(f"{x.coords} is not a point of {spec}")
    if all(c == 0 for c in x.coords) or x.coords == spec.lengths:
        raise NotAVertex(f"{x.coords} is the bottom or top of {spec}")
    total = spec.size
    killed = math.prod((l + 1) ** d for l, d in zip(spec.lengths, x.zero_indicator()))
    return total - killed - 2


def parse_chains(text: str) -> ChainProductSpec:
    try:
        return ChainProductSpec([int(t) for t in text.split(",") if t.strip()])
    except ValueError:
        raise SemilatticeError(f"cannot parse chain lengths from {text!r}") from None
