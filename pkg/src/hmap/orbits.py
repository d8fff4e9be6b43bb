"""Orbits of the closure permutations: edges, vertices, faces, components."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .fmap import ConstraintError, Dart, FreeMap, Insert, Link, history
from .index import HypermapIndex, ensure_index


class OrbitKind(Enum):
    edge = "edge"          # orbits of the closed 0-successor
    vertex = "vertex"      # orbits of the closed 1-successor
    face = "face"          # orbits of the closed face successor
    component = "component"  # orbits of the group generated by both closures


@dataclass(frozen=True, slots=True)
class Orbit:
    """One orbit: its minimum dart, its members, and its size.

    For the three permutation kinds ``members`` is in cycle order from the
    dart the orbit was asked for; component members are sorted.
    """

    kind: OrbitKind
    representative: Dart
    members: tuple[Dart, ...]

    @property
    def period(self) -> int:
        return len(self.members)


def _perm_of(idx: HypermapIndex, kind: OrbitKind) -> dict[Dart, Dart]:
    if kind is OrbitKind.edge:
        return idx.closure[0]
    if kind is OrbitKind.vertex:
        return idx.closure[1]
    if kind is OrbitKind.face:
        return idx.face_perm
    raise ValueError(f"no single permutation generates {kind.value} orbits")


def orbit(m: FreeMap, kind: OrbitKind, z: Dart, *,
          index: HypermapIndex | None = None) -> Orbit:
    """The ``kind`` orbit of dart ``z``, walked from ``z`` itself."""
    idx = ensure_index(m, index)
    if z not in idx.dart_set:
        raise ConstraintError(f"dart {z} does not exist")
    if kind is OrbitKind.component:
        rep = idx.component_ids[z]
        members = tuple(sorted(d for d in idx.darts
                               if idx.component_ids[d] == rep))
        return Orbit(kind, rep, members)
    perm = _perm_of(idx, kind)
    cycle = [z]
    cur = perm[z]
    while cur != z:
        cycle.append(cur)
        cur = perm[cur]
    return Orbit(kind, min(cycle), tuple(cycle))


def all_orbits(m: FreeMap, kind: OrbitKind, *,
               index: HypermapIndex | None = None) -> list[Orbit]:
    """Every ``kind`` orbit, sorted by representative; cycles are walked
    from their representative."""
    idx = ensure_index(m, index)
    if kind is OrbitKind.component:
        by_rep: dict[Dart, list[Dart]] = {}
        for d in idx.darts:
            by_rep.setdefault(idx.component_ids[d], []).append(d)
        return [Orbit(kind, rep, tuple(sorted(members)))
                for rep, members in sorted(by_rep.items())]
    perm = _perm_of(idx, kind)
    ids = {OrbitKind.edge: idx.edge_ids,
           OrbitKind.vertex: idx.vertex_ids,
           OrbitKind.face: idx.face_ids}[kind]
    reps = sorted(set(ids.values()))
    out = []
    for rep in reps:
        cycle = [rep]
        cur = perm[rep]
        while cur != rep:
            cycle.append(cur)
            cur = perm[cur]
        out.append(Orbit(kind, rep, tuple(cycle)))
    return out


def same_orbit(m: FreeMap, kind: OrbitKind, a: Dart, b: Dart, *,
               index: HypermapIndex | None = None) -> bool:
    """True when darts ``a`` and ``b`` lie in the same ``kind`` orbit.

    Total: false whenever either dart does not exist.
    """
    idx = ensure_index(m, index)
    if kind is OrbitKind.edge:
        return idx.same_edge(a, b)
    if kind is OrbitKind.vertex:
        return idx.same_vertex(a, b)
    if kind is OrbitKind.face:
        return idx.same_face(a, b)
    return idx.same_component(a, b)


def same_edge(m: FreeMap, a: Dart, b: Dart, *,
              index: HypermapIndex | None = None) -> bool:
    return same_orbit(m, OrbitKind.edge, a, b, index=index)


def same_vertex(m: FreeMap, a: Dart, b: Dart, *,
                index: HypermapIndex | None = None) -> bool:
    return same_orbit(m, OrbitKind.vertex, a, b, index=index)


def same_face(m: FreeMap, a: Dart, b: Dart, *,
              index: HypermapIndex | None = None) -> bool:
    return same_orbit(m, OrbitKind.face, a, b, index=index)


def same_component(m: FreeMap, a: Dart, b: Dart, *,
                   index: HypermapIndex | None = None) -> bool:
    return same_orbit(m, OrbitKind.component, a, b, index=index)


def same_component_structural(m: FreeMap, x: Dart, y: Dart) -> bool:
    """Connectivity decided by recursion on the term, with no index.

    An insertion relates the new dart to itself only; a link additionally
    relates anything reaching its tail to anything reached from its head,
    in both directions.  Kept as an independent reference for the
    union-find implementation; memoized per prefix so repeated subqueries
    stay polynomial.
    """
    steps = history(m)
    memo: dict[tuple[int, Dart, Dart], bool] = {}

    def eqc(i: int, a: Dart, b: Dart) -> bool:
        if i == 0:
            return False
        key = (i, a, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        node = steps[i - 1]
        if isinstance(node, Insert):
            res = (a == node.x and b == node.x) or eqc(i - 1, a, b)
        else:
            assert isinstance(node, Link)
            u, v = node.x, node.y
            res = (eqc(i - 1, a, b)
                   or (eqc(i - 1, a, u) and eqc(i - 1, v, b))
                   or (eqc(i - 1, a, v) and eqc(i - 1, u, b)))
        memo[key] = res
        return res

    return eqc(len(steps), x, y)
