"""Ring-break law, its two lemmas, generators, search, fuzz, enumeration."""

import pytest

from hmap import (
    ConstraintError,
    Dim,
    RingItem,
    break_ring,
    build_index,
    check_ring,
    counts,
    enumerate_maps,
    exhaustive_jordan,
    find_ring,
    first_break_keeps_connected,
    fuzz_jordan,
    is_planar,
    is_well_formed,
    jordan_check,
    load_witness,
    make_map,
    persist_witness,
    random_map,
    random_planar_map,
    tail_is_ring_after_first_break,
)

d0 = Dim.zero
d1 = Dim.one

DIGON_RING = [RingItem(1, True), RingItem(3, False)]


class TestJordanCheck:
    def test_two_dart_edge_singleton(self, two_dart_edge):
        out = jordan_check(two_dart_edge, [RingItem(1, True)])
        assert (out.n_components_before, out.n_components_after) == (1, 2)
        assert out.delta == 1
        assert out.passed
        assert out.summary() == "nc_before=1 nc_after=2 verdict=pass"

    def test_digon_ring(self, digon):
        out = jordan_check(digon, DIGON_RING)
        assert (out.n_components_before, out.n_components_after) == (1, 2)
        assert out.passed

    def test_rejects_nonplanar(self, fixture15):
        with pytest.raises(ConstraintError, match="not planar"):
            jordan_check(fixture15, [RingItem(1, True)])

    def test_rejects_invalid_ring(self, digon):
        with pytest.raises(ConstraintError, match="not a valid ring"):
            jordan_check(digon, [])
        with pytest.raises(ConstraintError, match="not a valid ring"):
            jordan_check(digon, [RingItem(1, True)])

    def test_outcome_carries_witness_data(self, digon):
        out = jordan_check(digon, DIGON_RING)
        assert out.map_term == digon
        assert out.ring == tuple(DIGON_RING)


class TestLemmas:
    def test_digon_first_break_keeps_connected(self, digon):
        assert first_break_keeps_connected(digon, DIGON_RING)

    def test_digon_tail_still_ring(self, digon):
        assert tail_is_ring_after_first_break(digon, DIGON_RING)

    def test_need_two_items(self, two_dart_edge):
        with pytest.raises(ConstraintError, match=">= 2"):
            first_break_keeps_connected(two_dart_edge, [RingItem(1, True)])
        with pytest.raises(ConstraintError, match=">= 2"):
            tail_is_ring_after_first_break(two_dart_edge, [RingItem(1, True)])


class TestRandomMap:
    def test_deterministic(self):
        assert random_map(11, 20, 40) == random_map(11, 20, 40)

    def test_well_formed(self):
        for seed in range(20):
            assert is_well_formed(random_map(seed, 16, 40))

    def test_empty(self):
        st = counts(random_map(0, 0, 10))
        assert st.n_darts == 0


class TestRandomPlanarMap:
    def test_deterministic(self):
        assert random_planar_map(42, 20, 25) == random_planar_map(42, 20, 25)

    @pytest.mark.parametrize("seed", range(30))
    def test_always_planar(self, seed):
        m = random_planar_map(seed, 4 + seed, (2 * seed) % 40)
        assert is_well_formed(m)
        assert is_planar(m)

    def test_empty(self):
        assert counts(random_planar_map(3, 0, 0)).n_darts == 0

    def test_impossible_parameters(self):
        with pytest.raises(ConstraintError, match="impossible"):
            random_planar_map(1, 3, 7)

    def test_link_budget_respected(self):
        m = random_planar_map(5, 10, 20)
        idx = build_index(m)
        n_links = len(idx.succ_links[0]) + len(idx.succ_links[1])
        assert n_links <= 20


class TestFindRing:
    def test_singleton_on_two_dart_edge(self, two_dart_edge):
        ring = find_ring(two_dart_edge, 1, seed=0)
        assert ring is not None and len(ring) == 1
        assert check_ring(two_dart_edge, ring).valid

    def test_isolated_dart_has_none(self):
        assert find_ring(make_map([1]), 5, seed=0) is None

    def test_digon_two_ring(self, digon):
        ring = find_ring(digon, 2, seed=0)
        assert ring is not None and len(ring) == 2
        assert check_ring(digon, ring).valid

    def test_digon_needs_length_two(self, digon):
        # no double-link of the digon borders one face twice
        assert find_ring(digon, 1, seed=0) is None

    @pytest.mark.parametrize("seed", range(40))
    def test_found_rings_are_valid(self, seed):
        n = 4 + seed % 14
        m = random_planar_map(seed, n, min((3 * seed) % 24, 2 * n))
        ring = find_ring(m, 4, seed)
        if ring is not None:
            assert check_ring(m, ring).valid
            assert jordan_check(m, ring).passed


class TestFuzz:
    def test_zero_trials(self):
        rep = fuzz_jordan(0, 1, 8)
        assert rep.trials == 0 and rep.rings_found == 0 and rep.passed

    def test_small_run_clean(self):
        rep = fuzz_jordan(80, 3, 12)
        assert rep.passed, rep.summary()
        assert rep.rings_found >= 20
        assert rep.witness_paths == []

    def test_deterministic(self):
        a = fuzz_jordan(40, 9, 10)
        b = fuzz_jordan(40, 9, 10)
        assert (a.trials, a.rings_found, a.failures) == (b.trials, b.rings_found, b.failures)

    def test_summary_format(self):
        text = fuzz_jordan(5, 1, 6).summary()
        assert "trials=5" in text
        assert "verdict=" in text


class TestWitnessFiles:
    def test_round_trip_replays_same_verdict(self, tmp_path, digon):
        persist_witness(tmp_path, "case", digon, DIGON_RING)
        m, ring = load_witness(tmp_path, "case")
        assert m == digon
        assert ring == DIGON_RING
        again = jordan_check(m, ring)
        assert again.summary() == jordan_check(digon, DIGON_RING).summary()

    def test_env_var_names_directory(self, monkeypatch, tmp_path):
        from hmap.jordan import _witness_dir
        monkeypatch.setenv("HMAP_WITNESS_DIR", str(tmp_path))
        assert _witness_dir(None) == str(tmp_path)
        assert _witness_dir("explicit") == "explicit"
        monkeypatch.delenv("HMAP_WITNESS_DIR")
        assert _witness_dir(None) is None


class TestEnumeration:
    def test_counts_small(self):
        # one empty map; one single-dart map; 3*3 two-dart maps
        assert sum(1 for _ in enumerate_maps(0)) == 1
        assert sum(1 for _ in enumerate_maps(1)) == 2
        assert sum(1 for _ in enumerate_maps(2)) == 11

    def test_all_well_formed_and_distinct(self):
        seen = set()
        for m in enumerate_maps(3):
            assert is_well_formed(m)
            assert m not in seen
            seen.add(m)
        assert len(seen) == 11 + 13 * 13

    def test_exhaustive_jordan_tiny(self):
        rep = exhaustive_jordan(3, 3)
        assert rep.passed, rep.summary()
        assert rep.maps_seen == 11 + 169
        assert rep.rings_checked > 0
        assert rep.ring_soundness_failures == 0


class TestSwapOracle:
    """Breaking along a ring must equal swapping the two closure images
    of each item, applied to the original closed 0-successor table.
    This reformulates multi-break as pure permutation surgery, which is
    only sound because ring edges are pairwise distinct."""

    @pytest.mark.parametrize("seed", range(40))
    def test_break_equals_transpositions(self, seed):
        m = random_planar_map(seed, 10, 15)
        idx = build_index(m)
        ring = find_ring(m, 4, seed)
        if ring is None:
            return
        ca0 = dict(idx.closure[0])
        for item in ring:
            y = idx.successor(d0, item.x)
            x0 = idx.bottom(d0, item.x)
            for z, w in list(ca0.items()):
                if w == y:
                    ca0[z] = x0
                elif w == x0:
                    ca0[z] = y
        broken_idx = build_index(break_ring(m, ring), check=False)
        assert ca0 == broken_idx.closure[0]
