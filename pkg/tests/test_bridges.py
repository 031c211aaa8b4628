import pytest

import bridgekit as bk
from bridgekit.bridges import NOT_FOUND, bridge_label, propagate, wirtinger_number
from bridgekit.codes import GaussCode
from bridgekit.errors import InconsistentBounds

from oracles import exhaustive_wirtinger, propagate_random_order

TREFOIL = GaussCode((-1, 2, -3, 1, -2, 3))


class TestPropagate:
    def test_trefoil_single_seed_stalls(self):
        # strand 0 is the one containing +2
        sts = bk.strands(TREFOIL)
        idx = next(i for i, s in enumerate(sts) if 2 in s.labels)
        state = propagate(TREFOIL, {idx})
        assert len(state.colored) < 3
        assert state.frontier == frozenset()

    def test_trefoil_any_two_seeds_saturate(self):
        for seeds in ((0, 1), (0, 2), (1, 2)):
            assert propagate(TREFOIL, seeds).colored == {0, 1, 2}

    def test_single_strand(self):
        state = propagate(GaussCode((-1, 1)), {0})
        assert state.colored == {0}

    def test_bad_seed(self):
        with pytest.raises(ValueError):
            propagate(TREFOIL, {7})
        with pytest.raises(ValueError):
            propagate(TREFOIL, set())

    def test_confluence_random_firing_orders(self, rng):
        for _ in range(1000):
            c = bk.random_code(rng.randint(1, 7), rng)
            n = c.crossings
            seeds = set(rng.sample(range(n), rng.randint(1, n)))
            expected = propagate(c, seeds).colored
            for _ in range(3):
                assert propagate_random_order(c, seeds, rng) == expected

    def test_monotone_in_seeds(self, rng):
        for _ in range(200):
            c = bk.random_code(rng.randint(2, 7), rng)
            n = c.crossings
            small = set(rng.sample(range(n), rng.randint(1, n - 1)))
            big = small | {rng.randrange(n)}
            assert propagate(c, small).colored <= propagate(c, big).colored


class TestWirtinger:
    def test_trefoil(self):
        assert wirtinger_number(TREFOIL, 2) == 2

    def test_single_strand_code(self):
        assert wirtinger_number(GaussCode((-1, 1)), 1) == 1

    def test_one_seed_virtual_example(self):
        # the two-crossing virtual code is fully colorable from one seed
        code = GaussCode((1, -2, -1, 2))
        assert len(bk.strands(code)) == 2
        assert wirtinger_number(code, 1) == 1
        assert exhaustive_wirtinger(code) == 1

    def test_empty_is_one_by_convention(self):
        assert wirtinger_number(GaussCode(()), 1) == 1
        assert wirtinger_number(GaussCode(()), 2) == 1

    def test_not_found_when_capped(self):
        # granny knot needs 3 seeds; capping at 2 must report absence
        granny = bk.connected_sum(TREFOIL, TREFOIL)
        assert wirtinger_number(granny, 2, k_max=2) is NOT_FOUND
        assert wirtinger_number(granny, 2, k_max=3) == 3

    def test_oracle_equivalence(self, rng):
        for _ in range(200):
            c = bk.random_code(rng.randint(1, 6), rng)
            assert wirtinger_number(c, 1) == exhaustive_wirtinger(c)

    def test_never_exceeds_overbridges(self, rng):
        for _ in range(200):
            c = bk.random_code(rng.randint(1, 8), rng)
            ob = bk.overbridge_count(c)
            w = wirtinger_number(c, 1)
            if ob >= 1:
                assert w is not NOT_FOUND and w <= ob

    def test_quandle_bound_consistency(self, rng):
        for _ in range(100):
            c = bk.random_code(rng.randint(1, 6), rng, signed=True)
            cnt = bk.count_colorings(c, bk.DIHEDRAL_3)
            lower = bk.coloring_lower_bound(cnt, 3, "quandle")
            w = wirtinger_number(c, 1)
            assert w is not NOT_FOUND and lower <= w


class TestBridgeLabel:
    def test_census_rule_makes_three_exact(self):
        b = bridge_label(TREFOIL, 3, [2], classical_census=True, k_start=2)
        assert b == bk.BridgeBounds(3, 3, True)

    def test_bounds_meet(self):
        b = bridge_label(TREFOIL, 4, [4])
        assert b.exact and b.lower == b.upper == 4

    def test_open_bracket(self):
        b = bridge_label(TREFOIL, 4, [3])
        assert b == bk.BridgeBounds(3, 4, False)

    def test_external_hint(self):
        b = bridge_label(TREFOIL, 4, [3], external_exact_hint=True)
        assert b == bk.BridgeBounds(4, 4, True)

    def test_census_rule_gated(self):
        b = bridge_label(TREFOIL, 3, [2], classical_census=False, k_start=2)
        assert not b.exact

    def test_floor_from_k_start(self):
        b = bridge_label(TREFOIL, 2, [], k_start=2)
        assert b == bk.BridgeBounds(2, 2, True)

    def test_unknown_upper(self):
        b = bridge_label(TREFOIL, None, [2])
        assert b.lower == 2 and b.upper is None and not b.exact

    def test_inconsistent_raises(self):
        with pytest.raises(InconsistentBounds):
            bridge_label(TREFOIL, 2, [3])
