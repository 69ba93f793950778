"""Executable (hypothesis, conclusion) checks swept over instance universes.

Each check returns ``None`` when its hypothesis does not apply to an
instance, otherwise an `Outcome`.  Conclusions are evaluated with the graph
and lattice primitives only, never by re-using the argument that proves
them, so a sweep is an independent test of each statement.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from . import graph as g
from .enumeration import DEFAULT_ENUMERATION_CAP, CapExceeded, enumerate_chain_product_specs, enumerate_universe
from .lattice import is_distributive, is_dually_atomic, is_modular, join
from .products import ChainProduct, chain_product, product_degree_formula
from .semilattice import MeetTable, atoms, dual_atoms, is_artinian, to_json, zero_divisors

__all__ = [
    "Outcome",
    "Instance",
    "TheoremSpec",
    "TheoremReport",
    "LATTICE_THEOREMS",
    "PRODUCT_THEOREMS",
    "THEOREMS",
    "check_instance",
    "run_theorem",
    "run_suite",
    "suite_ok",
    "reports_to_json",
]


@dataclass(frozen=True)
class Outcome:
    holds: bool
    detail: dict = field(default_factory=dict)


class Instance:
    """A semilattice with its derived structures, computed lazily and shared by all checks."""

    def __init__(self, table: MeetTable, product: ChainProduct | None = None):
        self.table = table
        self.product = product

    @classmethod
    def of_product(cls, product: ChainProduct) -> "Instance":
        return cls(product.table, product)

    @cached_property
    def graph(self) -> g.SimpleGraph:
        return g.build_graph(self.table)

    @cached_property
    def atoms(self) -> set[int]:
        return atoms(self.table)

    @cached_property
    def dual_atoms(self) -> set[int]:
        return dual_atoms(self.table)

    @cached_property
    def degrees(self) -> dict[int, int]:
        return dict(zip(self.graph.vertices, self.graph.degree_array.tolist()))

    @cached_property
    def shape(self) -> g.ShapeFlags:
        return g.classify_shape(self.graph)

    @cached_property
    def girth(self):
        return g.girth(self.graph)

    @cached_property
    def diameter(self):
        return g.diameter(self.graph)

    @cached_property
    def connected(self) -> bool:
        return g.is_connected(self.graph)

    @cached_property
    def eulerian(self) -> bool:
        return g.is_eulerian(self.graph)

    def to_json(self) -> dict:
        doc = to_json(self.table)
        if self.product is not None:
            doc["chains"] = list(self.product.spec.lengths)
        return doc


def _is_path_graph(inst: Instance) -> bool:
    # a single vertex is a (trivial) path; the statements concern |V| >= 2
    return inst.shape.is_path and len(inst.graph) >= 2


def _path_order(G: g.SimpleGraph) -> list[int]:
    start = min(v for v in G.vertices if len(G.adjacency[v]) == 1)
    order, prev = [start], None
    while len(order) < len(G):
        nxt = [w for w in G.adjacency[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def _is_k2(G):
    return len(G) == 2 and G.edge_count == 1


def _is_k12(G):
    return len(G) == 3 and G.edge_count == 2


# -- lattice-universe checks -------------------------------------------------


def check_deg1_weak(inst: Instance) -> Outcome | None:
    """No triangle in G(S) implies every atom has degree at most 1."""
    if inst.girth == 3 or not inst.atoms:
        return None
    bad = {a: inst.degrees[a] for a in sorted(inst.atoms) if inst.degrees[a] > 1}
    return Outcome(not bad, {"atom_degrees": bad})


def check_deg1_strict(inst: Instance) -> Outcome | None:
    """No triangle in G(S) implies every atom has degree exactly 1."""
    if inst.girth == 3 or not inst.atoms:
        return None
    bad = {a: inst.degrees[a] for a in sorted(inst.atoms) if inst.degrees[a] != 1}
    return Outcome(not bad, {"atom_degrees": bad})


def check_minimax(inst: Instance) -> Outcome | None:
    """A vertex of degree 1 is an atom or a dual atom."""
    leaves = [v for v, d in inst.degrees.items() if d == 1]
    if not leaves:
        return None
    bad = [v for v in leaves if v not in inst.atoms and v not in inst.dual_atoms]
    return Outcome(not bad, {"degree_one_non_extremal": bad})


def check_path_shape(inst: Instance) -> Outcome | None:
    """G(S) a path on at least two vertices implies G(S) is K_2 or K_{1,2}."""
    if not _is_path_graph(inst):
        return None
    G = inst.graph
    return Outcome(_is_k2(G) or _is_k12(G), {"vertices": len(G), "edges": G.edge_count})


def check_max_k2(inst: Instance) -> Outcome | None:
    """G(S) a path y_1, ..., y_t (t >= 2) with y_1 a dual atom implies G(S) = K_2."""
    if not _is_path_graph(inst):
        return None
    G = inst.graph
    ends = [v for v in G.vertices if inst.degrees[v] == 1]
    dual_ends = [v for v in ends if v in inst.dual_atoms]
    if not dual_ends:
        return None
    return Outcome(_is_k2(G), {"dual_atom_endpoints": dual_ends, "vertices": len(G)})


def check_path_k2_corollary(inst: Instance) -> Outcome | None:
    """For a path G(S): G(S) = K_2 iff |DAtom(S)| = |Atom(S)| = 1."""
    if not _is_path_graph(inst):
        return None
    lhs = _is_k2(inst.graph)
    rhs = len(inst.atoms) == 1 and len(inst.dual_atoms) == 1
    return Outcome(lhs == rhs, {"is_k2": lhs, "atoms": len(inst.atoms), "dual_atoms": len(inst.dual_atoms)})


def check_lattice_path_form(inst: Instance) -> Outcome | None:
    """G(S) = K_{1,2} as y1 - y2 - y3 implies y2 = y1 + y3 and y1 y3 = 0."""
    G = inst.graph
    if not (_is_path_graph(inst) and _is_k12(G)):
        return None
    y1, y2, y3 = _path_order(G)
    S = inst.table
    j = join(S, y1, y3)
    m = int(S.meet[y1, y3])
    return Outcome(j == y2 and m == S.bottom, {"path": [y1, y2, y3], "join": j, "meet": m})


def check_complete_iff_no_zd(inst: Instance) -> Outcome | None:
    """For |S| > 2: G(S) complete iff S has no zero-divisors."""
    if inst.table.n <= 2:
        return None
    zd = sorted(zero_divisors(inst.table))
    complete = inst.shape.is_complete
    return Outcome(complete == (not zd), {"complete": complete, "zero_divisors": zd})


def check_artinian_complete_iff_one_atom(inst: Instance) -> Outcome | None:
    """For Artinian S with |S| > 2: G(S) complete iff |Atom(S)| = 1."""
    if inst.table.n <= 2 or not is_artinian(inst.table):
        return None
    complete = inst.shape.is_complete
    return Outcome(complete == (len(inst.atoms) == 1), {"complete": complete, "atoms": sorted(inst.atoms)})


def check_planar_length_bound(inst: Instance) -> Outcome | None:
    """G(S) planar implies l(S) <= 5."""
    if not g.is_planar(inst.graph):
        return None
    length = inst.table.order.length
    return Outcome(length <= 5, {"length": length})


def check_tree_iff_star(inst: Instance) -> Outcome | None:
    """G(S) is a tree iff it is a star."""
    f = inst.shape
    if not (f.is_tree or f.is_star):
        return None
    return Outcome(f.is_tree == f.is_star, {"tree": f.is_tree, "star": f.is_star})


def check_modular_disconnection(inst: Instance) -> Outcome | None:
    """In a modular lattice, distinct vertices a, b are disconnected in G(S)
    iff ab = 0, a + b = 1 and both are atoms."""
    S = inst.table
    if len(inst.graph) < 2 or not is_modular(S)[0]:
        return None
    comp = {}
    for i, c in enumerate(g.connected_components(inst.graph)):
        for v in c:
            comp[v] = i
    bad = []
    for a, b in itertools.combinations(inst.graph.vertices, 2):
        lhs = comp[a] != comp[b]
        rhs = (
            int(S.meet[a, b]) == S.bottom
            and join(S, a, b) == S.top
            and a in inst.atoms
            and b in inst.atoms
        )
        if lhs != rhs:
            bad.append({"pair": [a, b], "disconnected": lhs, "complementary_atoms": rhs})
    return Outcome(not bad, {"mismatches": bad})


def check_min_diam(inst: Instance) -> Outcome | None:
    """|S| >= 4 and a unique atom imply G(S) connected with diameter 1."""
    if inst.table.n < 4 or len(inst.atoms) != 1:
        return None
    return Outcome(inst.connected and inst.diameter == 1, _diam_detail(inst))


def check_max_diam(inst: Instance) -> Outcome | None:
    """|S| >= 3 and a unique dual atom imply G(S) connected with diameter <= 2."""
    if inst.table.n < 3 or len(inst.dual_atoms) != 1:
        return None
    d = inst.diameter
    return Outcome(inst.connected and d is not None and d <= 2, _diam_detail(inst))


def check_distributive_diam4(inst: Instance) -> Outcome | None:
    """Distributive, dually atomic, DAtom nonempty, no isolated vertex
    imply G(S) connected with diameter <= 4."""
    S = inst.table
    G = inst.graph
    if len(G) < 2 or any(d == 0 for d in inst.degrees.values()) or not inst.dual_atoms:
        return None
    if not is_dually_atomic(S) or not is_distributive(S)[0]:
        return None
    d = inst.diameter
    return Outcome(inst.connected and d is not None and d <= 4, _diam_detail(inst))


def check_girth(inst: Instance) -> Outcome | None:
    """G(S) containing a cycle implies girth 3."""
    if inst.girth == math.inf:
        return None
    return Outcome(inst.girth == 3, {"girth": inst.girth})


def check_euler_tour_witness(inst: Instance) -> Outcome | None:
    """An Eulerian G(S) admits an explicit, re-verified Euler tour."""
    if not inst.eulerian:
        return None
    tour = g.euler_tour(inst.graph)
    ok = tour is not None and g.is_euler_tour(inst.graph, tour)
    return Outcome(ok, {"tour_length": None if tour is None else len(tour)})


def _diam_detail(inst):
    d = inst.diameter
    return {
        "connected": inst.connected,
        "diameter": "Undefined" if d is None else ("Infinite" if d == math.inf else d),
    }


# -- chain-product checks ----------------------------------------------------


def check_degree_formula(inst: Instance) -> Outcome | None:
    """Closed-form degree equals the counted degree at every vertex."""
    P = inst.product
    bad = []
    for v, d in inst.degrees.items():
        point = P.to_point(v)
        f = product_degree_formula(P.spec, point)
        if f != d:
            bad.append({"point": list(point.coords), "formula": f, "degree": d})
    return Outcome(not bad, {"mismatches": bad})


def check_chain_complete_eulerian(inst: Instance) -> Outcome | None:
    """A chain with more than two elements has complete G(S), Eulerian iff l(S) is even."""
    P = inst.product
    if P.spec.factors != 1 or P.spec.lengths[0] < 2:
        return None
    length = P.spec.lengths[0]
    complete = inst.shape.is_complete
    ok = complete and inst.eulerian == (length % 2 == 0)
    return Outcome(ok, {"length": length, "complete": complete, "eulerian": inst.eulerian})


def _euler_product_outcome(inst: Instance) -> Outcome:
    lengths = inst.product.spec.lengths
    predicted = all(l % 2 == 0 for l in lengths) or all(l == 1 for l in lengths)
    detail = {"chains": list(lengths), "eulerian": inst.eulerian, "predicted": predicted}
    ok = inst.eulerian == predicted
    if inst.eulerian:
        tour = g.euler_tour(inst.graph)
        verified = tour is not None and g.is_euler_tour(inst.graph, tour)
        detail["tour_verified"] = verified
        ok = ok and verified
    else:
        odd = [inst.product.to_point(v).coords for v, d in inst.degrees.items() if d % 2]
        detail["odd_degree_vertex"] = list(odd[0]) if odd else None
        detail["connected"] = inst.connected
    return Outcome(ok, detail)


def check_product_eulerian(inst: Instance) -> Outcome | None:
    """n >= 3 chains: G(S) Eulerian iff all lengths are even or all equal 1."""
    if inst.product.spec.factors < 3:
        return None
    return _euler_product_outcome(inst)


def check_product_eulerian_two_chains(inst: Instance) -> Outcome | None:
    """The same Eulerian criterion probed at exactly two chains (informational)."""
    if inst.product.spec.factors != 2:
        return None
    return _euler_product_outcome(inst)


def check_product_not_complete(inst: Instance) -> Outcome | None:
    """A product of n >= 2 chains never has complete G(S)."""
    P = inst.product
    if P.spec.factors < 2:
        return None
    complete = inst.shape.is_complete
    detail = {"complete": complete}
    if not complete:
        G = inst.graph
        pair = next(
            ((u, v) for u, v in itertools.combinations(G.vertices, 2) if v not in G.adjacency[u]),
            None,
        )
        if pair is not None:
            detail["non_adjacent"] = [list(P.to_point(x).coords) for x in pair]
    return Outcome(not complete, detail)


# -- specs and reports -------------------------------------------------------


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    statement: str
    check: Callable[[Instance], Outcome | None]
    universe: str  # "lattices" or "products"
    expected_to_fail: bool = False
    informational: bool = False
    min_factors: int = 1  # products only: fewer chains are never applicable


def _spec(id, check, universe, **kw):
    doc = " ".join(check.__doc__.split())
    return TheoremSpec(id, doc, check, universe, **kw)


LATTICE_THEOREMS: tuple[TheoremSpec, ...] = (
    _spec("deg1_weak", check_deg1_weak, "lattices"),
    _spec("deg1_strict", check_deg1_strict, "lattices", expected_to_fail=True),
    _spec("minimax", check_minimax, "lattices"),
    _spec("path_k2_k12", check_path_shape, "lattices"),
    _spec("path_dual_atom_end_k2", check_max_k2, "lattices"),
    _spec("path_k2_iff_unique_extremes", check_path_k2_corollary, "lattices"),
    _spec("lattice_path_form", check_lattice_path_form, "lattices"),
    _spec("complete_iff_no_zero_divisors", check_complete_iff_no_zd, "lattices"),
    _spec("artinian_complete_iff_one_atom", check_artinian_complete_iff_one_atom, "lattices"),
    _spec("planar_length_bound", check_planar_length_bound, "lattices"),
    _spec("tree_iff_star", check_tree_iff_star, "lattices"),
    _spec("modular_disconnection", check_modular_disconnection, "lattices"),
    _spec("min_diameter", check_min_diam, "lattices"),
    _spec("max_diameter", check_max_diam, "lattices"),
    _spec("distributive_diameter_4", check_distributive_diam4, "lattices"),
    _spec("girth_3", check_girth, "lattices"),
    _spec("euler_tour_witness", check_euler_tour_witness, "lattices"),
)

PRODUCT_THEOREMS: tuple[TheoremSpec, ...] = (
    _spec("product_degree_formula", check_degree_formula, "products"),
    _spec("chain_complete_eulerian", check_chain_complete_eulerian, "products"),
    _spec("product_eulerian", check_product_eulerian, "products", min_factors=3),
    _spec(
        "product_eulerian_two_chains",
        check_product_eulerian_two_chains,
        "products",
        informational=True,
        min_factors=2,
    ),
    _spec("product_not_complete", check_product_not_complete, "products", min_factors=2),
)

THEOREMS = {t.id: t for t in LATTICE_THEOREMS + PRODUCT_THEOREMS}


@dataclass
class TheoremReport:
    theorem: str
    statement: str
    scanned: int = 0
    applicable: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    expected_to_fail: bool = False
    informational: bool = False

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    @property
    def verdict(self) -> str:
        if self.informational:
            return "informational: " + ("holds" if self.verified else "fails") + " on universe"
        if self.verified:
            return "verified on universe" if self.applicable else "vacuous on universe"
        return "refuted (expected)" if self.expected_to_fail else "refuted"

    @property
    def unexpected(self) -> bool:
        """Counterexamples that should fail a verification run."""
        return not self.verified and not self.expected_to_fail and not self.informational

    def add(self, inst: Instance, outcome: Outcome | None):
        self.scanned += 1
        if outcome is None:
            return
        self.applicable += 1
        if not outcome.holds:
            self.counterexamples.append({"instance": inst.to_json(), "diagnostic": outcome.detail})

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "scanned": self.scanned,
            "applicable": self.applicable,
            "verdict": self.verdict,
            "expected_to_fail": self.expected_to_fail,
            "informational": self.informational,
            "counterexamples": self.counterexamples,
        }


def check_instance(inst: Instance, theorems: Sequence[TheoremSpec]) -> list[Outcome | None]:
    return [t.check(inst) for t in theorems]


def _lattice_outcomes(args):
    table, ids = args
    return check_instance(Instance(table), [THEOREMS[i] for i in ids])


def _product_outcomes(args):
    lengths, ids, cap = args
    inst = Instance.of_product(chain_product(lengths, cap=cap))
    return check_instance(inst, [THEOREMS[i] for i in ids])


def _sweep(theorems, jobs, worker, make_instance, workers):
    reports = [
        TheoremReport(t.id, t.statement, expected_to_fail=t.expected_to_fail, informational=t.informational)
        for t in theorems
    ]
    if not theorems:
        return reports
    jobs = list(jobs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, jobs, chunksize=8))
    else:
        results = map(worker, jobs)
    # pool.map preserves submission order, so aggregation is deterministic
    for job, outcomes in zip(jobs, results):
        inst = make_instance(job)
        for report, outcome in zip(reports, outcomes):
            report.add(inst, outcome)
    return reports


def run_theorem(theorem: TheoremSpec | str, instances: Iterable[MeetTable | ChainProduct]) -> TheoremReport:
    """Sweep one theorem over explicitly supplied instances."""
    t = THEOREMS[theorem] if isinstance(theorem, str) else theorem
    report = TheoremReport(t.id, t.statement, expected_to_fail=t.expected_to_fail, informational=t.informational)
    for x in instances:
        inst = Instance.of_product(x) if isinstance(x, ChainProduct) else Instance(x)
        report.add(inst, t.check(inst))
    return report


def run_suite(
    max_n: int = 7,
    max_product: int = 200,
    *,
    theorems: Sequence[str] | None = None,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    product_cap: int | None = None,
    workers: int = 1,
) -> list[TheoremReport]:
    """Run every theorem over its universe; one report per theorem.

    The lattice universe is all lattices with ``2 <= n <= max_n`` elements up
    to isomorphism; the product universe is every chain-product spec with at
    most ``max_product`` elements.  Either universe is skipped when its bound
    is below 2.
    """
    if max_n > enumeration_cap:
        raise CapExceeded(f"max_n={max_n} exceeds the enumeration cap {enumeration_cap}")
    selected = list(THEOREMS) if theorems is None else list(theorems)
    unknown = [i for i in selected if i not in THEOREMS]
    if unknown:
        raise KeyError(f"unknown theorem ids: {unknown}")
    lat = [THEOREMS[i] for i in selected if THEOREMS[i].universe == "lattices"]
    prod = [THEOREMS[i] for i in selected if THEOREMS[i].universe == "products"]
    if product_cap is None:
        product_cap = max(max_product, 2)

    reports = []
    if max_n >= 2:
        lat_ids = [t.id for t in lat]
        tables = list(enumerate_universe(max_n, cap=enumeration_cap))
        reports += _sweep(
            lat, [(S, lat_ids) for S in tables], _lattice_outcomes, lambda job: Instance(job[0]), workers
        )
    else:
        reports += _sweep(lat, [], _lattice_outcomes, None, workers)
    if max_product >= 2:
        prod_ids = [t.id for t in prod]
        fewest = min((t.min_factors for t in prod), default=1)
        specs = [s.lengths for s in enumerate_chain_product_specs(max_product, min_factors=fewest)]
        reports += _sweep(
            prod,
            [(s, prod_ids, product_cap) for s in specs],
            _product_outcomes,
            lambda job: _ProductStub(job[0]),
            workers,
        )
    else:
        reports += _sweep(prod, [], _product_outcomes, None, workers)
    order = {tid: i for i, tid in enumerate(selected)}
    return sorted(reports, key=lambda r: order[r.theorem])


class _ProductStub:
    """Serializes a product instance for a report without rebuilding its graph."""

    def __init__(self, lengths):
        self.lengths = lengths

    def to_json(self):
        doc = to_json(chain_product(self.lengths, cap=math.inf).table)
        doc["chains"] = list(self.lengths)
        return doc


def suite_ok(reports: Iterable[TheoremReport]) -> bool:
    return not any(r.unexpected for r in reports)


def reports_to_json(reports: Iterable[TheoremReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)
