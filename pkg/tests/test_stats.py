"""Counting: orbit enumeration backend, recurrence backend, theorem checks."""

import pytest

from hmap import (
    ConstraintError,
    Dim,
    IncrementalMap,
    Void,
    check_euler_formula,
    check_genus_theorem,
    counts,
    counts_incremental,
    euler_characteristic,
    genus,
    is_planar,
    make_map,
)
from hmap.jordan import random_map, random_planar_map

d0 = Dim.zero
d1 = Dim.one


def unpack(st):
    return (st.n_darts, st.n_edges, st.n_vertices, st.n_faces, st.n_components)


def test_counts_void():
    st = counts(Void())
    assert unpack(st) == (0, 0, 0, 0, 0)
    assert st.euler_characteristic == 0
    assert st.genus == 0
    assert st.planar


def test_counts_fixture(fixture15):
    st = counts(fixture15)
    assert unpack(st) == (15, 7, 6, 6, 3)
    assert st.euler_characteristic == 4
    assert st.genus == 1
    assert not st.planar


def test_counts_two_dart_edge(two_dart_edge):
    st = counts(two_dart_edge)
    assert unpack(st) == (2, 1, 2, 1, 1)
    assert st.euler_characteristic == 2
    assert st.planar


def test_counts_digon(digon, digon_open):
    assert unpack(counts(digon)) == (4, 2, 2, 2, 1)
    assert unpack(counts(digon_open)) == (4, 3, 2, 1, 1)
    assert is_planar(digon) and is_planar(digon_open)


def test_counts_torus_quad(torus_quad, torus_quad_open):
    st = counts(torus_quad)
    assert unpack(st) == (4, 2, 1, 1, 1)
    assert st.euler_characteristic == 0
    assert genus(torus_quad) == 1
    assert not is_planar(torus_quad)
    # one link earlier the map is still planar with two faces
    st_open = counts(torus_quad_open)
    assert unpack(st_open) == (4, 3, 1, 2, 1)
    assert st_open.planar


def test_scalar_accessors(fixture15):
    assert euler_characteristic(fixture15) == 4
    assert genus(fixture15) == 1
    assert is_planar(fixture15) is False


def test_isolated_darts_are_planar():
    st = counts(make_map(range(1, 8)))
    assert st.genus == 0
    assert st.n_components == 7


class TestGenusTheorem:
    def test_fixture_passes(self, fixture15):
        rep = check_genus_theorem(fixture15)
        assert rep.passed
        assert rep.witness is None
        assert all(item.passed for item in rep.items)
        assert len(rep.items) == 3

    def test_void_passes(self):
        assert check_genus_theorem(Void()).passed

    def test_summary_mentions_verdict(self, fixture15):
        text = check_genus_theorem(fixture15).summary()
        assert "pass" in text
        assert "even" in text


class TestEulerFormula:
    def test_two_dart_edge(self, two_dart_edge):
        rep = check_euler_formula(two_dart_edge)
        assert rep.passed
        # connected and nonempty, so the specialized identity is checked too
        assert len(rep.items) == 2

    def test_requires_planarity(self, fixture15):
        with pytest.raises(ConstraintError, match="not planar"):
            check_euler_formula(fixture15)

    def test_disconnected_planar(self):
        rep = check_euler_formula(make_map([1, 2, 3]))
        assert rep.passed
        assert len(rep.items) == 1

    @pytest.mark.parametrize("seed", range(20))
    def test_generated_planar_maps(self, seed):
        m = random_planar_map(seed, 6 + seed, seed % 11)
        rep = check_euler_formula(m)
        assert rep.passed, rep.summary()


class TestIncrementalBackend:
    def test_fixture(self, fixture15):
        assert counts_incremental(fixture15) == counts(fixture15)

    def test_all_fixtures(self, two_dart_edge, digon, digon_open, torus_quad, torus_quad_open):
        for m in (two_dart_edge, digon, digon_open, torus_quad, torus_quad_open, Void()):
            assert counts_incremental(m) == counts(m)

    @pytest.mark.parametrize("seed", range(40))
    def test_random_maps(self, seed):
        m = random_map(seed, 4 + seed % 30, 3 * seed + 2)
        assert counts_incremental(m) == counts(m)

    def test_stats_at_every_prefix(self, fixture15):
        # the recurrences must be right after every single step, not just at the end
        from hmap.fmap import Insert, history
        inc = IncrementalMap()
        for node in history(fixture15):
            if isinstance(node, Insert):
                inc.insert(node.x)
            else:
                inc.link(node.k, node.x, node.y)
            assert inc.stats() == counts(inc.term())


class TestIncrementalMap:
    def test_face_tracking(self, ):
        inc = IncrementalMap()
        for d in (1, 2, 3, 4):
            inc.insert(d)
        inc.link(d1, 2, 3)
        inc.link(d1, 4, 1)
        inc.link(d0, 1, 2)
        assert sorted(inc.face_members(1)) == [1, 2, 3, 4]
        assert inc.link_splits_face(d0, 3, 4)
        inc.link(d0, 3, 4)
        assert sorted(inc.face_members(1)) == [1, 3]
        assert sorted(inc.face_members(2)) == [2, 4]

    def test_split_vs_merge_counts(self):
        inc = IncrementalMap()
        inc.insert(1)
        inc.insert(2)
        assert not inc.link_splits_face(d0, 1, 2)
        inc.link(d0, 1, 2)
        assert inc.n_faces == 1

    def test_link_keeps_planar_cross_component(self):
        inc = IncrementalMap()
        inc.insert(1)
        inc.insert(2)
        assert inc.link_keeps_planar(d0, 1, 2)

    def test_insert_violations(self):
        inc = IncrementalMap()
        inc.insert(1)
        assert inc.insert_violation(1) is not None
        assert inc.insert_violation(0) is not None
        with pytest.raises(ConstraintError):
            inc.insert(1)

    def test_link_violations(self):
        inc = IncrementalMap()
        inc.insert(1)
        inc.insert(2)
        inc.link(d0, 1, 2)
        assert not inc.can_link(d0, 2, 1)  # would close the orbit
        with pytest.raises(ConstraintError, match="close"):
            inc.link(d0, 2, 1)

    def test_term_round_trip(self, digon):
        from hmap.fmap import history, Insert
        inc = IncrementalMap()
        for node in history(digon):
            if isinstance(node, Insert):
                inc.insert(node.x)
            else:
                inc.link(node.k, node.x, node.y)
        assert inc.term() == digon
