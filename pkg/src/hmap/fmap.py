"""Free-map terms and their structural observers.

A hypermap over a finite set of darts is represented constructively as a
term: ``Void()`` is the empty map, ``Insert(base, x)`` adds an isolated
dart ``x``, and ``Link(base, k, x, y)`` records that ``y`` is the
dimension-``k`` successor of ``x``.  Checked construction keeps every
dimension's explicit links acyclic, so each orbit is an open chain with a
well defined ``bottom`` and ``top``; the missing wrap-around step of each
chain is recovered by ``closed_successor``/``closed_predecessor``, under
which a well-formed term presents as a pair of permutations of its darts.

Observers are total: queries about the reserved nil dart or about darts
that were never inserted answer nil (or False) instead of raising.

Raw construction with the term constructors and the raw destructors
(``break_link``, ``break_link_back``, ``delete_dart``) never checks
anything; the checked entry points (``insert_dart``, ``link``, ``unlink``,
``unlink_back``, ``remove_dart``) enforce the construction preconditions
and name the violated conjunct.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

Dart = int

#: Reserved non-dart value returned by observers when there is no answer.
NIL: Dart = 0


class Dim(Enum):
    """The two link dimensions of a hypermap (0 for edges, 1 for vertices)."""

    zero = 0
    one = 1

    @property
    def other(self) -> "Dim":
        return Dim(1 - self.value)

    def __repr__(self) -> str:
        return f"Dim.{self.name}"


class MapError(Exception):
    """Base class for errors raised by map operations."""


class ConstraintError(MapError):
    """A checked operation was asked to violate one of its preconditions."""


class InternalInvariantError(MapError):
    """A consistency condition that should be unreachable was violated."""


class FreeMap:
    """Base class of map terms; concrete terms are Void, Insert and Link."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Void(FreeMap):
    """The empty map."""


@dataclass(frozen=True, slots=True)
class Insert(FreeMap):
    """``base`` extended with a new isolated dart ``x``."""

    base: FreeMap
    x: Dart


@dataclass(frozen=True, slots=True)
class Link(FreeMap):
    """``base`` extended with an explicit dimension-``k`` link ``x -> y``."""

    base: FreeMap
    k: Dim
    x: Dart
    y: Dart


def history(m: FreeMap) -> list[Insert | Link]:
    """Constructor steps of ``m`` in construction order (innermost first)."""
    out: list[Insert | Link] = []
    cur = m
    while not isinstance(cur, Void):
        if not isinstance(cur, (Insert, Link)):
            raise TypeError(f"not a map term: {cur!r}")
        out.append(cur)
        cur = cur.base
    out.reverse()
    return out


# ---------------------------------------------------------------------------
# observers


def has_dart(m: FreeMap, z: Dart) -> bool:
    """True when ``z`` was inserted somewhere in ``m`` (nil never counts)."""
    if z == NIL:
        return False
    cur = m
    while True:
        if isinstance(cur, Insert):
            if cur.x == z:
                return True
            cur = cur.base
        elif isinstance(cur, Link):
            cur = cur.base
        elif isinstance(cur, Void):
            return False
        else:
            raise TypeError(f"not a map term: {cur!r}")


def successor(m: FreeMap, k: Dim, z: Dart) -> Dart:
    """Explicit k-successor of ``z``; the most recent link wins; nil if none."""
    if z == NIL:
        return NIL
    cur = m
    while True:
        if isinstance(cur, Link):
            if cur.k is k and cur.x == z:
                return cur.y
            cur = cur.base
        elif isinstance(cur, Insert):
            cur = cur.base
        elif isinstance(cur, Void):
            return NIL
        else:
            raise TypeError(f"not a map term: {cur!r}")


def predecessor(m: FreeMap, k: Dim, z: Dart) -> Dart:
    """Explicit k-predecessor of ``z``; the most recent link wins; nil if none."""
    if z == NIL:
        return NIL
    cur = m
    while True:
        if isinstance(cur, Link):
            if cur.k is k and cur.y == z:
                return cur.x
            cur = cur.base
        elif isinstance(cur, Insert):
            cur = cur.base
        elif isinstance(cur, Void):
            return NIL
        else:
            raise TypeError(f"not a map term: {cur!r}")


def has_successor(m: FreeMap, k: Dim, z: Dart) -> bool:
    return successor(m, k, z) != NIL


def has_predecessor(m: FreeMap, k: Dim, z: Dart) -> bool:
    return predecessor(m, k, z) != NIL


def top(m: FreeMap, k: Dim, z: Dart) -> Dart:
    """Endpoint of ``z``'s open k-chain in the successor direction.

    The top is the unique dart of the chain without an explicit
    k-successor.  Returns nil for a dart not in the map, and also on a
    malformed term whose explicit k-links cycle through ``z`` (no such
    endpoint exists there).
    """
    if not has_dart(m, z):
        return NIL
    seen = {z}
    cur = z
    while True:
        nxt = successor(m, k, cur)
        if nxt == NIL:
            return cur
        if nxt in seen:
            return NIL
        seen.add(nxt)
        cur = nxt


def bottom(m: FreeMap, k: Dim, z: Dart) -> Dart:
    """Endpoint of ``z``'s open k-chain in the predecessor direction."""
    if not has_dart(m, z):
        return NIL
    seen = {z}
    cur = z
    while True:
        prv = predecessor(m, k, cur)
        if prv == NIL:
            return cur
        if prv in seen:
            return NIL
        seen.add(prv)
        cur = prv


def closed_successor(m: FreeMap, k: Dim, z: Dart) -> Dart:
    """k-successor under the orbit closure: the explicit link when there is
    one, otherwise the wrap-around from the chain's top to its bottom."""
    s = successor(m, k, z)
    if s != NIL:
        return s
    if not has_dart(m, z):
        return NIL
    return bottom(m, k, z)


def closed_predecessor(m: FreeMap, k: Dim, z: Dart) -> Dart:
    s = predecessor(m, k, z)
    if s != NIL:
        return s
    if not has_dart(m, z):
        return NIL
    return top(m, k, z)


def face_successor(m: FreeMap, z: Dart) -> Dart:
    """Next dart in the face, using explicit links only (nil-propagating)."""
    return predecessor(m, Dim.one, predecessor(m, Dim.zero, z))


def closed_face_successor(m: FreeMap, z: Dart) -> Dart:
    """Next dart in the face under the orbit closures; a permutation of the
    darts of a well-formed map."""
    return closed_predecessor(m, Dim.one, closed_predecessor(m, Dim.zero, z))


def face_predecessor(m: FreeMap, z: Dart) -> Dart:
    """Inverse of ``face_successor`` where defined (nil-propagating)."""
    return successor(m, Dim.zero, successor(m, Dim.one, z))


def closed_face_predecessor(m: FreeMap, z: Dart) -> Dart:
    return closed_successor(m, Dim.zero, closed_successor(m, Dim.one, z))


# ---------------------------------------------------------------------------
# construction preconditions


def insert_violation(m: FreeMap, x: Dart) -> str | None:
    """Reason ``x`` cannot be inserted, or None when it can."""
    if x == NIL:
        return "dart id is the reserved nil value"
    if x < 0:
        return f"dart id {x} is negative"
    if has_dart(m, x):
        return f"dart {x} already exists"
    return None


def can_insert(m: FreeMap, x: Dart) -> bool:
    return insert_violation(m, x) is None


def link_violation(m: FreeMap, k: Dim, x: Dart, y: Dart) -> str | None:
    """Reason ``x -> y`` cannot be linked at dimension ``k``, or None.

    The closure conjunct (the closed successor of ``x`` must differ from
    ``y``) is what keeps every orbit an open chain.
    """
    if not has_dart(m, x):
        return f"dart {x} does not exist"
    if not has_dart(m, y):
        return f"dart {y} does not exist"
    if has_successor(m, k, x):
        return f"dart {x} already has a {k.value}-successor"
    if has_predecessor(m, k, y):
        return f"dart {y} already has a {k.value}-predecessor"
    if closed_successor(m, k, x) == y:
        return f"linking {x}->{y} would close the {k.value}-orbit"
    return None


def can_link(m: FreeMap, k: Dim, x: Dart, y: Dart) -> bool:
    return link_violation(m, k, x, y) is None


# ---------------------------------------------------------------------------
# checked builders


def insert_dart(m: FreeMap, x: Dart) -> FreeMap:
    """Checked insertion. The base map is assumed well formed."""
    reason = insert_violation(m, x)
    if reason is not None:
        raise ConstraintError(f"insert {x}: {reason}")
    return Insert(m, x)


def link(m: FreeMap, k: Dim, x: Dart, y: Dart) -> FreeMap:
    """Checked linking. The base map is assumed well formed."""
    reason = link_violation(m, k, x, y)
    if reason is not None:
        raise ConstraintError(f"link {x}->{y} at dim {k.value}: {reason}")
    return Link(m, k, x, y)


def make_map(darts: Iterable[Dart], links: Iterable[tuple[Dim, Dart, Dart]] = ()) -> FreeMap:
    """Build a map through the checked API: all inserts, then all links."""
    m: FreeMap = Void()
    for d in darts:
        m = insert_dart(m, d)
    for k, x, y in links:
        m = link(m, k, x, y)
    return m


# ---------------------------------------------------------------------------
# well-formedness

class ChainTracker:
    """Union-find over the explicit links of one dimension.

    Each disjoint set is one open chain; the set's endpoints are kept on
    the root so closures are answered in near-constant time.  Links only
    ever merge chains, which is all checked construction needs.
    """

    __slots__ = ("succ", "pred", "_parent", "_bottom", "_top")

    def __init__(self) -> None:
        self.succ: dict[Dart, Dart] = {}
        self.pred: dict[Dart, Dart] = {}
        self._parent: dict[Dart, Dart] = {}
        self._bottom: dict[Dart, Dart] = {}
        self._top: dict[Dart, Dart] = {}

    def add(self, x: Dart) -> None:
        self._parent[x] = x
        self._bottom[x] = x
        self._top[x] = x

    def _find(self, x: Dart) -> Dart:
        p = self._parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def bottom(self, z: Dart) -> Dart:
        return self._bottom[self._find(z)]

    def top(self, z: Dart) -> Dart:
        return self._top[self._find(z)]

    def closed_succ(self, z: Dart) -> Dart:
        s = self.succ.get(z, NIL)
        return s if s != NIL else self.bottom(z)

    def closed_pred(self, z: Dart) -> Dart:
        s = self.pred.get(z, NIL)
        return s if s != NIL else self.top(z)

    def link(self, x: Dart, y: Dart) -> None:
        # caller guarantees: x has no successor, y no predecessor, and the
        # two chains are distinct (otherwise the link would close a cycle)
        rx, ry = self._find(x), self._find(y)
        if rx == ry:
            raise InternalInvariantError(f"link {x}->{y} would close a chain")
        self.succ[x] = y
        self.pred[y] = x
        self._parent[ry] = rx
        self._top[rx] = self._top[ry]


def well_formed_violation(m: FreeMap) -> str | None:
    """First construction step of ``m`` whose precondition fails, or None.

    Replays the term in construction order, so the check is linear in the
    term instead of quadratic like the naive prefix-by-prefix recursion.
    """
    darts: set[Dart] = set()
    chains = (ChainTracker(), ChainTracker())
    for node in history(m):
        if isinstance(node, Insert):
            x = node.x
            if x == NIL:
                return "insert of the reserved nil value"
            if x < 0:
                return f"insert of negative id {x}"
            if x in darts:
                return f"duplicate insert of dart {x}"
            darts.add(x)
            chains[0].add(x)
            chains[1].add(x)
        else:
            k, x, y = node.k.value, node.x, node.y
            c = chains[k]
            if x not in darts:
                return f"link {x}->{y} at dim {k}: dart {x} does not exist"
            if y not in darts:
                return f"link {x}->{y} at dim {k}: dart {y} does not exist"
            if x in c.succ:
                return f"link {x}->{y} at dim {k}: dart {x} already has a successor"
            if y in c.pred:
                return f"link {x}->{y} at dim {k}: dart {y} already has a predecessor"
            if c.bottom(x) == y:
                return f"link {x}->{y} at dim {k}: would close the orbit"
            c.link(x, y)
    return None


def is_well_formed(m: FreeMap) -> bool:
    """True when every construction step of ``m`` met its precondition."""
    return well_formed_violation(m) is None


# ---------------------------------------------------------------------------
# destructors


def _rewrap(outer: list[Insert | Link], core: FreeMap) -> FreeMap:
    for node in reversed(outer):
        if isinstance(node, Insert):
            core = Insert(core, node.x)
        else:
            core = Link(core, node.k, node.x, node.y)
    return core


def break_link(m: FreeMap, k: Dim, x: Dart) -> FreeMap:
    """Remove the most recent k-link out of ``x``; unchanged if none exists."""
    outer: list[Insert | Link] = []
    cur = m
    while not isinstance(cur, Void):
        if isinstance(cur, Link) and cur.k is k and cur.x == x:
            return _rewrap(outer, cur.base)
        outer.append(cur)  # type: ignore[arg-type]
        cur = cur.base
    return m


def break_link_back(m: FreeMap, k: Dim, y: Dart) -> FreeMap:
    """Remove the most recent k-link into ``y``; unchanged if none exists."""
    outer: list[Insert | Link] = []
    cur = m
    while not isinstance(cur, Void):
        if isinstance(cur, Link) and cur.k is k and cur.y == y:
            return _rewrap(outer, cur.base)
        outer.append(cur)  # type: ignore[arg-type]
        cur = cur.base
    return m


def delete_dart(m: FreeMap, x: Dart) -> FreeMap:
    """Remove the most recent insertion of ``x``; unchanged if none exists.

    Links mentioning ``x`` are left in place, so deleting a still-linked
    dart yields a term that fails ``is_well_formed``.  ``remove_dart`` is
    the checked variant that refuses that.
    """
    outer: list[Insert | Link] = []
    cur = m
    while not isinstance(cur, Void):
        if isinstance(cur, Insert) and cur.x == x:
            return _rewrap(outer, cur.base)
        outer.append(cur)  # type: ignore[arg-type]
        cur = cur.base
    return m


def unlink(m: FreeMap, k: Dim, x: Dart) -> FreeMap:
    """Checked ``break_link``; warns when there is nothing to break."""
    if not has_successor(m, k, x):
        warnings.warn(f"unlink: dart {x} has no {k.value}-link; map unchanged",
                      stacklevel=2)
        return m
    return break_link(m, k, x)


def unlink_back(m: FreeMap, k: Dim, y: Dart) -> FreeMap:
    """Checked ``break_link_back``; warns when there is nothing to break."""
    if not has_predecessor(m, k, y):
        warnings.warn(f"unlink_back: dart {y} has no incoming {k.value}-link; "
                      "map unchanged", stacklevel=2)
        return m
    return break_link_back(m, k, y)


def remove_dart(m: FreeMap, x: Dart) -> FreeMap:
    """Checked ``delete_dart``: refuses linked darts, warns on absent ones."""
    if not has_dart(m, x):
        warnings.warn(f"remove_dart: dart {x} does not exist; map unchanged",
                      stacklevel=2)
        return m
    for k in Dim:
        if has_successor(m, k, x) or has_predecessor(m, k, x):
            raise ConstraintError(
                f"remove {x}: dart is still linked at dim {k.value}")
    return delete_dart(m, x)
