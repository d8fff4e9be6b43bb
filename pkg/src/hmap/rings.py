"""Rings of faces coded as double-links, and breaking along them.

A ring item ``(x, flag)`` stands for the double 0-link out of dart
``x``: the explicit link from ``x`` to ``y`` and the implicit closure
link from the top of the chain back to ``x0``, the chain's bottom.  The
item identifies one of the two faces the double-link borders: the face
of ``y`` when the flag is set, the face of ``x0`` otherwise.

A list of items is a valid ring when it is nonempty, uses pairwise
distinct edges, the identified faces are consecutive-adjacent and wrap
around, and all identified faces are pairwise distinct.  Breaking every
listed 0-link is the operation the discrete Jordan statement is about.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .fmap import (
    NIL,
    ConstraintError,
    Dart,
    Dim,
    FreeMap,
    break_link,
    has_successor,
)
from .index import HypermapIndex, ensure_index


class RingItem(NamedTuple):
    x: Dart
    flag: bool


RingList = Sequence[RingItem]


def face_anchor(m: FreeMap, item: RingItem, *,
                index: HypermapIndex | None = None) -> Dart:
    """Dart in the face the item identifies.

    Flag set: the link target ``y``.  Flag clear: the bottom ``x0`` of
    the item's open 0-chain.  The item dart must carry a 0-link.
    """
    idx = ensure_index(m, index)
    y = idx.successor(Dim.zero, item.x)
    if y == NIL:
        raise ConstraintError(f"dart {item.x} has no 0-successor")
    return y if item.flag else idx.bottom(Dim.zero, item.x)


def _anchors(idx: HypermapIndex, item: RingItem) -> tuple[Dart, Dart]:
    """(identified face dart, opposite face dart); nil when no 0-link."""
    y = idx.successor(Dim.zero, item.x)
    if y == NIL:
        return NIL, NIL
    x0 = idx.bottom(Dim.zero, item.x)
    return (y, x0) if item.flag else (x0, y)


def _adjacent(idx: HypermapIndex, a: RingItem, b: RingItem) -> bool:
    # the face opposite a's identified one must be b's identified one;
    # nil anchors (missing links) are never adjacent to anything
    _, a_other = _anchors(idx, a)
    b_ident, _ = _anchors(idx, b)
    if a_other == NIL or b_ident == NIL:
        return False
    return idx.same_face(a_other, b_ident)


def adjacent_faces(m: FreeMap, a: RingItem, b: RingItem, *,
                   index: HypermapIndex | None = None) -> bool:
    """Does item ``b`` identify the face on the other side of ``a``'s
    double-link?  Both items must carry 0-links."""
    idx = ensure_index(m, index)
    for item in (a, b):
        if idx.successor(Dim.zero, item.x) == NIL:
            raise ConstraintError(f"dart {item.x} has no 0-successor")
    return _adjacent(idx, a, b)


# ---------------------------------------------------------------------------
# the four ring conditions (all total predicates)


def ring_edges_unique(m: FreeMap, items: RingList, *,
                      index: HypermapIndex | None = None) -> bool:
    """Every item has a 0-link and no two items use the same edge."""
    idx = ensure_index(m, index)
    seen: set[Dart] = set()
    for item in items:
        if idx.successor(Dim.zero, item.x) == NIL:
            return False
        edge = idx.edge_ids[item.x]
        if edge in seen:
            return False
        seen.add(edge)
    return True


def ring_continuous(m: FreeMap, items: RingList, *,
                    index: HypermapIndex | None = None) -> bool:
    """Each item's opposite face is the next item's identified face."""
    idx = ensure_index(m, index)
    return all(_adjacent(idx, items[i], items[i + 1])
               for i in range(len(items) - 1))


def ring_closed(m: FreeMap, items: RingList, *,
                index: HypermapIndex | None = None) -> bool:
    """The ring wraps: the last item is adjacent to the first.

    A singleton wraps through its own double-link: the link target and
    the chain bottom must share a face (both sides are the same face).
    """
    idx = ensure_index(m, index)
    if not items:
        return True
    if len(items) == 1:
        x = items[0].x
        y = idx.successor(Dim.zero, x)
        if y == NIL:
            return False
        return idx.same_face(y, idx.bottom(Dim.zero, x))
    return _adjacent(idx, items[-1], items[0])


def ring_faces_distinct(m: FreeMap, items: RingList, *,
                        index: HypermapIndex | None = None) -> bool:
    """No two items identify the same face."""
    idx = ensure_index(m, index)
    reps: set[Dart] = set()
    for item in items:
        ident, _ = _anchors(idx, item)
        if ident == NIL:
            continue  # uniqueness of faces is not this condition's failure
        face = idx.face_ids[ident]
        if face in reps:
            return False
        reps.add(face)
    return True


@dataclass(frozen=True, slots=True)
class RingDiagnostics:
    """Per-condition verdicts for one candidate ring."""

    valid: bool
    nonempty: bool
    edges_unique: bool
    continuous: bool
    closed: bool
    faces_distinct: bool
    failure: str | None
    failure_items: tuple[int, ...]

    def summary(self) -> str:
        if self.valid:
            return "valid ring"
        where = ""
        if self.failure_items:
            where = " at item" + ("s" if len(self.failure_items) > 1 else "")
            where += " " + ", ".join(str(i) for i in self.failure_items)
        return f"invalid ring: {self.failure}{where}"


def _first_edge_clash(idx: HypermapIndex, items: RingList) -> tuple[int, ...]:
    seen: dict[Dart, int] = {}
    for i, item in enumerate(items):
        if idx.successor(Dim.zero, item.x) == NIL:
            return (i,)
        edge = idx.edge_ids[item.x]
        if edge in seen:
            return (seen[edge], i)
        seen[edge] = i
    return ()


def _first_face_clash(idx: HypermapIndex, items: RingList) -> tuple[int, ...]:
    seen: dict[Dart, int] = {}
    for i, item in enumerate(items):
        ident, _ = _anchors(idx, item)
        if ident == NIL:
            continue
        face = idx.face_ids[ident]
        if face in seen:
            return (seen[face], i)
        seen[face] = i
    return ()


def check_ring(m: FreeMap, items: RingList, *,
               index: HypermapIndex | None = None) -> RingDiagnostics:
    """Evaluate all ring conditions and locate the first failure."""
    idx = ensure_index(m, index)
    nonempty = len(items) > 0
    edges_unique = ring_edges_unique(m, items, index=idx)
    continuous = ring_continuous(m, items, index=idx)
    closed = ring_closed(m, items, index=idx)
    faces_distinct = ring_faces_distinct(m, items, index=idx)
    valid = nonempty and edges_unique and continuous and closed and faces_distinct

    failure: str | None = None
    failure_items: tuple[int, ...] = ()
    if not valid:
        if not nonempty:
            failure = "empty ring"
        elif not edges_unique:
            failure = "edge reused or item without 0-link"
            failure_items = _first_edge_clash(idx, items)
        elif not continuous:
            failure = "consecutive items not adjacent"
            for i in range(len(items) - 1):
                if not _adjacent(idx, items[i], items[i + 1]):
                    failure_items = (i, i + 1)
                    break
        elif not closed:
            failure = "ring does not close"
            failure_items = (len(items) - 1, 0) if len(items) > 1 else (0,)
        else:
            failure = "two items identify the same face"
            failure_items = _first_face_clash(idx, items)
    return RingDiagnostics(valid, nonempty, edges_unique, continuous,
                           closed, faces_distinct, failure, failure_items)


def is_ring(m: FreeMap, items: RingList, *,
            index: HypermapIndex | None = None) -> bool:
    return check_ring(m, items, index=index).valid


def break_ring(m: FreeMap, items: RingList) -> FreeMap:
    """Break every item's 0-link, first item to last.

    Each item must still carry a 0-link when its turn comes; a valid
    ring guarantees that, since its edges are pairwise distinct.
    """
    cur = m
    for i, item in enumerate(items):
        if not has_successor(cur, Dim.zero, item.x):
            raise ConstraintError(
                f"item {i}: dart {item.x} has no 0-link left to break")
        cur = break_link(cur, Dim.zero, item.x)
    return cur
