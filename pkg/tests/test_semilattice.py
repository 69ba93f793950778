import itertools
import json

import numpy as np
import pytest
from conftest import as_lists, from_covers

import oracles
from latgraph import enumerate_lattices
from latgraph.semilattice import (
    InvalidMeetTable,
    MalformedTable,
    MeetTable,
    atoms,
    chain,
    check_axioms,
    dual_atoms,
    dumps,
    from_json,
    induced_order,
    is_artinian,
    loads,
    to_json,
    validate,
    zero_divisors,
)


def small_universe(max_n=6):
    for n in range(2, max_n + 1):
        yield from enumerate_lattices(n)


class TestValidate:
    def test_two_element(self):
        S = validate([[0, 0], [0, 1]], 0, 1)
        assert S.n == 2 and S.bottom == 0 and S.top == 1

    def test_not_idempotent_witness(self):
        meet = as_lists(chain(4))
        meet[1][1] = 2
        violations = check_axioms(meet, 0, 3)
        assert ("NotIdempotent", (1,)) in {(v.axiom, v.witness) for v in violations}

    def test_diamond_valid_matches_brute_force(self, diamond):
        meet = as_lists(diamond)
        assert oracles.axiom_failures(meet, 0, 3) == set()
        assert check_axioms(meet, 0, 3) == []

    def test_reports_all_violations(self):
        # 3 elements, every axiom broken somewhere
        meet = [[1, 0, 0], [0, 1, 2], [0, 1, 2]]
        found = {(v.axiom, v.witness) for v in check_axioms(meet, 0, 0)}
        assert found == oracles.axiom_failures(meet, 0, 0)
        assert {a for a, _ in found} == {
            "NotIdempotent",
            "NotCommutative",
            "NotAssociative",
            "TopNotNeutral",
            "BottomEqualsTop",
            "BottomNotAbsorbing",
        }

    def test_raises_with_violation_list(self):
        with pytest.raises(InvalidMeetTable) as info:
            validate([[0, 1], [0, 1]], 0, 1)
        found = [(v.axiom, v.witness) for v in info.value.violations]
        assert found == [("NotCommutative", (0, 1)), ("TopNotNeutral", (0,))]
        assert set(found) == oracles.axiom_failures([[0, 1], [0, 1]], 0, 1)

    def test_bottom_equals_top(self):
        with pytest.raises(InvalidMeetTable) as info:
            validate([[0]], 0, 0)
        assert info.value.violations[0].axiom == "BottomEqualsTop"

    @pytest.mark.parametrize(
        "meet, bottom, top",
        [
            ([[0, 0, 0], [0, 1, 1]], 0, 1),
            ([[0, 5], [5, 1]], 0, 1),
            ([[0, 0], [0, 1]], 0, 2),
            ([], 0, 0),
            ("not a table", 0, 1),
        ],
    )
    def test_malformed(self, meet, bottom, top):
        with pytest.raises(MalformedTable):
            check_axioms(meet, bottom, top)

    def test_constructor_validates(self):
        with pytest.raises(InvalidMeetTable):
            MeetTable(np.array([[0, 1], [0, 1]]), 0, 1)
        S = MeetTable(np.array([[0, 0], [0, 1]]), 0, 1)
        assert S == chain(2)

    def test_table_is_read_only(self, diamond):
        with pytest.raises(ValueError):
            diamond.meet[0, 0] = 1

    def test_arbitrary_bottom_top_labels(self):
        # chain 2 < 0 < 1, bottom is id 2
        meet = [[0, 0, 2], [0, 1, 2], [2, 2, 2]]
        S = validate(meet, 2, 1)
        assert atoms(S) == {0} and dual_atoms(S) == {0}
        assert S.order.length == 2


class TestInducedOrder:
    def test_chain4(self, chain4):
        order = induced_order(chain4)
        assert order.length == 3
        assert all(order.leq[i, j] == (i <= j) for i in range(4) for j in range(4))

    def test_diamond(self, diamond):
        order = induced_order(diamond)
        assert order.length == 2
        assert set(order.covers) == {(0, 1), (0, 2), (1, 3), (2, 3)}

    def test_two(self, two):
        assert induced_order(two).length == 1

    @pytest.mark.parametrize("S", list(small_universe(6)), ids=lambda S: f"n{S.n}")
    def test_against_brute_force(self, S):
        n = S.n
        meet = as_lists(S)
        leq = [[meet[x][y] == x for y in range(n)] for x in range(n)]
        order = S.order
        assert order.leq.tolist() == leq
        covers = {
            (x, y)
            for x in range(n)
            for y in range(n)
            if x != y and leq[x][y] and not any(z not in (x, y) and leq[x][z] and leq[z][y] for z in range(n))
        }
        assert set(order.covers) == covers
        longest = max(
            len(c) - 1
            for r in range(1, n + 1)
            for c in itertools.combinations(range(n), r)
            if all(leq[a][b] or leq[b][a] for a, b in itertools.combinations(c, 2))
        )
        assert order.length == longest


class TestOrderProperties:
    @pytest.mark.parametrize("S", list(small_universe(7)), ids=lambda S: f"n{S.n}")
    def test_partial_order_with_bounds_and_glb(self, S):
        leq = S.leq
        n = S.n
        assert leq.diagonal().all()
        assert not (leq & leq.T & ~np.eye(n, dtype=bool)).any()
        li = leq.astype(int)
        assert ((li @ li > 0) <= leq).all()
        assert leq[S.bottom].all() and leq[:, S.top].all()
        m = S.meet
        for x, y in itertools.product(range(n), repeat=2):
            g = m[x, y]
            assert leq[g, x] and leq[g, y]
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            assert leq[lower, g].all()


class TestAtoms:
    def test_chain4(self, chain4):
        assert atoms(chain4) == {1}
        assert dual_atoms(chain4) == {2}

    def test_diamond(self, diamond):
        assert atoms(diamond) == {1, 2}
        assert dual_atoms(diamond) == {1, 2}

    def test_two(self, two):
        assert atoms(two) == set() and dual_atoms(two) == set()

    def test_b3_dual_atoms(self, b3):
        # points with exactly one zero coordinate
        expected = {b3.to_id(p) for p in [(0, 1, 1), (1, 0, 1), (1, 1, 0)]}
        assert dual_atoms(b3.table) == expected
        assert atoms(b3.table) == {b3.to_id(p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]}

    @pytest.mark.parametrize("S", list(small_universe(7)), ids=lambda S: f"n{S.n}")
    def test_exclude_bounds_and_are_extremal(self, S):
        inner = S.interior()
        leq = S.leq
        A, D = atoms(S), dual_atoms(S)
        assert S.bottom not in A | D and S.top not in A | D
        assert A == {a for a in inner if all(not leq[y, a] or y == a for y in inner)}
        assert D == {d for d in inner if all(not leq[d, y] or y == d for y in inner)}


class TestZeroDivisors:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_chain_has_none(self, n):
        assert zero_divisors(chain(n)) == set()

    def test_diamond(self, diamond):
        assert zero_divisors(diamond) == {1, 2}

    def test_b3_all_interior(self, b3):
        S = b3.table
        brute = {s for s in range(S.n) if s != S.bottom and any(t != S.bottom and S.meet[s, t] == S.bottom for t in range(S.n))}
        assert brute == set(S.interior())
        assert zero_divisors(S) == brute


@pytest.mark.parametrize("make", [lambda: chain(2), lambda: chain(4)])
def test_is_artinian(make, b3):
    assert is_artinian(make())
    assert is_artinian(b3.table)


class TestJson:
    def test_round_trip(self, pentagon):
        doc = to_json(pentagon)
        assert set(doc) == {"n", "bottom", "top", "meet"}
        assert from_json(json.loads(json.dumps(doc))) == pentagon
        assert loads(dumps(pentagon)) == pentagon

    def test_labels_survive(self):
        S = validate([[0, 0], [0, 1]], 0, 1, labels=["zero", "one"])
        back = loads(dumps(S))
        assert back.labels == ("zero", "one")

    def test_size_mismatch(self):
        with pytest.raises(MalformedTable):
            from_json({"n": 3, "bottom": 0, "top": 1, "meet": [[0, 0], [0, 1]]})

    def test_missing_keys(self):
        with pytest.raises(MalformedTable):
            from_json({"meet": [[0, 0], [0, 1]]})

    def test_invalid_axioms(self):
        with pytest.raises(InvalidMeetTable):
            from_json({"n": 2, "bottom": 0, "top": 1, "meet": [[0, 1], [0, 1]]})


def test_relabel_is_isomorphic(pentagon):
    perm = [4, 2, 0, 1, 3]
    T = pentagon.relabel(perm)
    assert T.bottom == 4 and T.top == 3
    for x, y in itertools.product(range(5), repeat=2):
        assert T.meet[perm[x], perm[y]] == perm[pentagon.meet[x, y]]


def test_from_covers_helper_agrees_with_chain():
    assert from_covers(4, [(0, 1), (1, 2), (2, 3)]) == chain(4)
