import pytest

from hmap import Dim, FreeMap, link, make_map

d0 = Dim.zero
d1 = Dim.one


def build_fixture15() -> FreeMap:
    """15-dart, 3-component sample map.

    Component one is a 12-dart blob with a 3-dart edge and a 6-dart
    vertex, component two an isolated dart, component three a pair of
    darts double-linked at both dimensions.  Genus 1, so not planar.
    """
    m = make_map(range(1, 16))
    for x, y in [(1, 6), (2, 9), (4, 3), (3, 5), (7, 12), (8, 10), (10, 11), (14, 15)]:
        m = link(m, d0, x, y)
    for x, y in [(4, 1), (1, 2), (2, 3), (5, 6), (6, 12), (12, 10), (10, 11), (11, 9), (14, 15)]:
        m = link(m, d1, x, y)
    return m


def build_two_dart_edge() -> FreeMap:
    # one 0-link between two darts: one edge, two vertices, one face
    return make_map([1, 2], [(d0, 1, 2)])


def build_digon() -> FreeMap:
    """Two vertices joined by two edges; two faces, planar."""
    return make_map([1, 2, 3, 4], [(d1, 2, 3), (d1, 4, 1), (d0, 1, 2), (d0, 3, 4)])


def build_digon_open() -> FreeMap:
    """The digon just before its last 0-link: a single 4-dart face."""
    return make_map([1, 2, 3, 4], [(d1, 2, 3), (d1, 4, 1), (d0, 1, 2)])


def build_torus_quad() -> FreeMap:
    """One vertex, two edges crossing: genus 1."""
    return make_map([1, 2, 3, 4],
                    [(d1, 1, 2), (d1, 2, 3), (d1, 3, 4), (d0, 1, 3), (d0, 2, 4)])


def build_torus_quad_open() -> FreeMap:
    """The same construction without its final 0-link; still planar."""
    return make_map([1, 2, 3, 4],
                    [(d1, 1, 2), (d1, 2, 3), (d1, 3, 4), (d0, 1, 3)])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the release-checklist lines; capture would swallow them."""
    try:
        import test_acceptance
    except ImportError:
        return
    lines = getattr(test_acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("release checklist")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def fixture15():
    return build_fixture15()


@pytest.fixture
def two_dart_edge():
    return build_two_dart_edge()


@pytest.fixture
def digon():
    return build_digon()


@pytest.fixture
def digon_open():
    return build_digon_open()


@pytest.fixture
def torus_quad():
    return build_torus_quad()


@pytest.fixture
def torus_quad_open():
    return build_torus_quad_open()
