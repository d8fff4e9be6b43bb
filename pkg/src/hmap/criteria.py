"""Constructive planarity and disconnection criteria.

Each predicate here decides a property of a map *after* a link or break
by looking only at the map *before* it, which is what makes incremental
planar construction and the ring-break analysis cheap.  Equivalence with
the direct genus computation is enforced by the test suite, exhaustively
on all small maps.

The dimension-one forms are obtained from the dimension-zero ones by
exchanging the roles of the two closures; the face side condition then
tests the face of the linked dart against the closed 0-successor of the
link target.  They are cross-checked against the genus oracle in every
test that touches them.
"""

from __future__ import annotations

from .fmap import (
    ConstraintError,
    Dart,
    Dim,
    FreeMap,
    break_link,
    link_violation,
    successor,
)
from .index import HypermapIndex, build_index, ensure_index


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConstraintError(message)


def _criterion(idx: HypermapIndex, k: Dim, x: Dart, y: Dart) -> bool:
    """planar now, and the link either bridges components or splits a face."""
    if not idx.stats.planar:
        return False
    if not idx.same_component(x, y):
        return True
    if k is Dim.zero:
        return idx.same_face(idx.closed_predecessor(Dim.one, x), y)
    return idx.same_face(x, idx.closed_successor(Dim.zero, y))


def planar_after_link(m: FreeMap, k: Dim, x: Dart, y: Dart, *,
                      index: HypermapIndex | None = None) -> bool:
    """Would ``link(m, k, x, y)`` be planar?  Decided without linking.

    Requires the link preconditions; the answer equals
    ``is_planar(link(m, k, x, y))``.
    """
    idx = ensure_index(m, index)
    reason = link_violation(m, k, x, y)
    if reason is not None:
        raise ConstraintError(f"link {x}->{y} at dim {k.value}: {reason}")
    return _criterion(idx, k, x, y)


def planar_from_break(m: FreeMap, k: Dim, x: Dart, *,
                      index: HypermapIndex | None = None) -> bool:
    """Is ``m`` planar?  Decided on the map with the k-link out of ``x``
    broken, by the link criterion for relinking it.

    Requires that ``x`` has a k-successor.  The answer equals
    ``is_planar(m)``; the point of the indirection is that it needs only
    the broken map, which is how the ring induction looks at breaks.
    """
    ensure_index(m, index)
    y = successor(m, k, x)
    _require(y != 0, f"dart {x} has no {k.value}-successor")
    m0 = break_link(m, k, x)
    idx0 = build_index(m0, check=False)
    return _criterion(idx0, k, x, y)


def break_disconnects(m: FreeMap, x: Dart, *,
                      index: HypermapIndex | None = None) -> bool:
    """On a planar map, would breaking the 0-link out of ``x`` disconnect
    its component?  True exactly when the link target and the bottom of
    ``x``'s open 0-chain share a face.

    Requires planarity and a 0-successor on ``x``.
    """
    idx = ensure_index(m, index)
    _require(idx.stats.planar, "map is not planar")
    y = idx.successor(Dim.zero, x)
    _require(y != 0, f"dart {x} has no 0-successor")
    x0 = idx.bottom(Dim.zero, x)
    return idx.same_face(y, x0)
