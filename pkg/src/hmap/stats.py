"""Counting observables, the two global counting theorems, and the
incremental counting backend.

Two independent ways to produce a :class:`MapStats` live here:
``counts`` enumerates orbits on a one-pass index, while
``counts_incremental`` replays the term through :class:`IncrementalMap`,
which maintains every count by a local recurrence per construction step.
Tests hold the two backends equal on every generated map.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fmap import (
    NIL,
    ChainTracker,
    ConstraintError,
    Dart,
    Dim,
    FreeMap,
    Insert,
    Link,
    MapError,
    Void,
    history,
)
from .index import HypermapIndex, MapStats, build_index, ensure_index
from .unionfind import UnionFind

__all__ = [
    "MapStats", "counts", "euler_characteristic", "genus", "is_planar",
    "CheckItem", "TheoremReport", "check_genus_theorem", "check_euler_formula",
    "IncrementalMap", "counts_incremental",
]


def counts(m: FreeMap, *, index: HypermapIndex | None = None) -> MapStats:
    """Counts by direct orbit enumeration (the primary backend)."""
    return ensure_index(m, index).stats


def euler_characteristic(m: FreeMap, *, index: HypermapIndex | None = None) -> int:
    return counts(m, index=index).euler_characteristic


def genus(m: FreeMap, *, index: HypermapIndex | None = None) -> int:
    return counts(m, index=index).genus


def is_planar(m: FreeMap, *, index: HypermapIndex | None = None) -> bool:
    return counts(m, index=index).planar


# ---------------------------------------------------------------------------
# theorem reports


@dataclass(frozen=True, slots=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True, slots=True)
class TheoremReport:
    """Outcome of one theorem checked on one map.

    ``witness`` keeps the map term so a failing report can be serialized
    and replayed; it is None on a passing report.
    """

    subject: str
    stats: MapStats
    items: tuple[CheckItem, ...]
    witness: FreeMap | None = None

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def witness_text(self) -> str:
        if self.witness is None:
            return ""
        from .io import serialize_map
        return serialize_map(self.witness)

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        parts = [f"{self.subject}: {verdict}"]
        for item in self.items:
            mark = "ok" if item.passed else "FAIL"
            line = f"  [{mark}] {item.name}"
            if item.detail:
                line += f" ({item.detail})"
            parts.append(line)
        return "\n".join(parts)


def check_genus_theorem(m: FreeMap, *,
                        index: HypermapIndex | None = None) -> TheoremReport:
    """Check the unconditional counting bounds on a well-formed map:
    even Euler characteristic, nonnegative genus, and 2*components >= ec."""
    st = counts(m, index=index)
    items = (
        CheckItem("euler characteristic is even",
                  st.euler_characteristic % 2 == 0,
                  f"ec={st.euler_characteristic}"),
        CheckItem("genus is nonnegative", st.genus >= 0, f"genus={st.genus}"),
        CheckItem("2*components >= euler characteristic",
                  2 * st.n_components >= st.euler_characteristic,
                  f"nc={st.n_components} ec={st.euler_characteristic}"),
    )
    witness = None if all(i.passed for i in items) else m
    return TheoremReport("genus bounds", st, items, witness)


def check_euler_formula(m: FreeMap, *,
                        index: HypermapIndex | None = None) -> TheoremReport:
    """Check the planar counting identity ec/2 = components; on a connected
    nonempty map that specializes to nv+ne+nf-nd = 2.  Requires planarity."""
    st = counts(m, index=index)
    if not st.planar:
        raise ConstraintError("map is not planar")
    items = [
        CheckItem("half euler characteristic equals component count",
                  st.euler_characteristic == 2 * st.n_components,
                  f"ec={st.euler_characteristic} nc={st.n_components}"),
    ]
    if st.n_components == 1 and st.n_darts > 0:
        total = st.n_vertices + st.n_edges + st.n_faces - st.n_darts
        items.append(CheckItem("connected nonempty: v+e+f-d = 2",
                               total == 2, f"v+e+f-d={total}"))
    witness = None if all(i.passed for i in items) else m
    return TheoremReport("euler formula", st, tuple(items), witness)


# ---------------------------------------------------------------------------
# incremental backend


@dataclass(slots=True)
class _OpLog:
    ops: list = field(default_factory=list)


class IncrementalMap:
    """Mutable map builder that keeps all counts and the face permutation
    current across insertions and links.

    Each link changes the face permutation at exactly two darts and
    changes the face count by one; whether a face splits or two merge is
    decided before mutating, by testing whether the two darts whose faces
    the link touches already share a face.  The component count drops by
    one exactly when the link joins two components.  This is the
    recurrence backend cross-checked against orbit enumeration, and it is
    also what the planarity-preserving generator builds on, since the
    split test doubles as the planarity-preservation test.
    """

    __slots__ = ("darts", "chains", "components", "face_next", "face_prev",
                 "n_darts", "n_edges", "n_vertices", "n_faces", "n_components",
                 "_log")

    def __init__(self) -> None:
        self.darts: set[Dart] = set()
        self.chains = (ChainTracker(), ChainTracker())
        self.components = UnionFind()
        self.face_next: dict[Dart, Dart] = {}
        self.face_prev: dict[Dart, Dart] = {}
        self.n_darts = 0
        self.n_edges = 0
        self.n_vertices = 0
        self.n_faces = 0
        self.n_components = 0
        self._log = _OpLog()

    # -- queries ------------------------------------------------------------

    def has_dart(self, z: Dart) -> bool:
        return z in self.darts

    def closed_successor(self, k: Dim, z: Dart) -> Dart:
        return self.chains[k.value].closed_succ(z) if z in self.darts else NIL

    def closed_predecessor(self, k: Dim, z: Dart) -> Dart:
        return self.chains[k.value].closed_pred(z) if z in self.darts else NIL

    def same_component(self, a: Dart, b: Dart) -> bool:
        return (a in self.darts and b in self.darts
                and self.components.same(a, b))

    def same_face(self, a: Dart, b: Dart) -> bool:
        """Walk a's face cycle looking for b; linear in the face size."""
        if a not in self.darts or b not in self.darts:
            return False
        if a == b:
            return True
        cur = self.face_next[a]
        while cur != a:
            if cur == b:
                return True
            cur = self.face_next[cur]
        return False

    def face_members(self, z: Dart) -> list[Dart]:
        out = [z]
        cur = self.face_next[z]
        while cur != z:
            out.append(cur)
            cur = self.face_next[cur]
        return out

    # -- construction ---------------------------------------------------------

    def insert_violation(self, x: Dart) -> str | None:
        if x == NIL:
            return "dart id is the reserved nil value"
        if x < 0:
            return f"dart id {x} is negative"
        if x in self.darts:
            return f"dart {x} already exists"
        return None

    def insert(self, x: Dart) -> None:
        reason = self.insert_violation(x)
        if reason is not None:
            raise ConstraintError(f"insert {x}: {reason}")
        self.darts.add(x)
        for c in self.chains:
            c.add(x)
        self.components.add(x)
        self.face_next[x] = x
        self.face_prev[x] = x
        self.n_darts += 1
        self.n_edges += 1
        self.n_vertices += 1
        self.n_faces += 1
        self.n_components += 1
        self._log.ops.append(("i", x))

    def link_violation(self, k: Dim, x: Dart, y: Dart) -> str | None:
        if x not in self.darts:
            return f"dart {x} does not exist"
        if y not in self.darts:
            return f"dart {y} does not exist"
        c = self.chains[k.value]
        if x in c.succ:
            return f"dart {x} already has a {k.value}-successor"
        if y in c.pred:
            return f"dart {y} already has a {k.value}-predecessor"
        if c.closed_succ(x) == y:
            return f"linking {x}->{y} would close the {k.value}-orbit"
        return None

    def can_link(self, k: Dim, x: Dart, y: Dart) -> bool:
        return self.link_violation(k, x, y) is None

    def link_splits_face(self, k: Dim, x: Dart, y: Dart) -> bool:
        """Would linking x->y at dim k split one face into two?

        If not, it merges two faces into one.  Evaluated on the current
        map, before any mutation.
        """
        if k is Dim.zero:
            return self.same_face(self.chains[1].closed_pred(x), y)
        return self.same_face(x, self.chains[0].closed_succ(y))

    def link_keeps_planar(self, k: Dim, x: Dart, y: Dart) -> bool:
        """Planarity is preserved exactly when the link joins two
        components or splits a face of the common component."""
        return (not self.components.same(x, y)) or self.link_splits_face(k, x, y)

    def link(self, k: Dim, x: Dart, y: Dart) -> None:
        reason = self.link_violation(k, x, y)
        if reason is not None:
            raise ConstraintError(f"link {x}->{y} at dim {k.value}: {reason}")

        # everything the update needs is read off before mutating
        splits = self.link_splits_face(k, x, y)
        merged_components = self.components.union(x, y)
        fn, fp = self.face_next, self.face_prev

        if k is Dim.zero:
            b0x = self.chains[0].bottom(x)
            t0y = self.chains[0].top(y)
            a1_inv_x = self.chains[1].closed_pred(x)
            a1_inv_t0y = self.chains[1].closed_pred(t0y)
            self.chains[0].link(x, y)
            self._set_face(y, a1_inv_x)
            self._set_face(b0x, a1_inv_t0y)
            self.n_edges -= 1
        else:
            b1x = self.chains[1].bottom(x)
            t1y = self.chains[1].top(y)
            a0_y = self.chains[0].closed_succ(y)
            a0_b1x = self.chains[0].closed_succ(b1x)
            self.chains[1].link(x, y)
            self._set_face(a0_y, x)
            self._set_face(a0_b1x, t1y)
            self.n_vertices -= 1

        self.n_faces += 1 if splits else -1
        if merged_components:
            self.n_components -= 1
        self._log.ops.append(("l", k, x, y))

    def _set_face(self, z: Dart, target: Dart) -> None:
        # rewires face_next[z] = target keeping face_prev consistent;
        # the two rewires of one link always form a valid permutation again
        self.face_next[z] = target
        self.face_prev[target] = z

    # -- exports ---------------------------------------------------------------

    def stats(self) -> MapStats:
        return MapStats.from_counts(self.n_darts, self.n_edges,
                                    self.n_vertices, self.n_faces,
                                    self.n_components)

    def term(self) -> FreeMap:
        m: FreeMap = Void()
        for op in self._log.ops:
            if op[0] == "i":
                m = Insert(m, op[1])
            else:
                m = Link(m, op[1], op[2], op[3])
        return m


def counts_incremental(m: FreeMap) -> MapStats:
    """Counts by replaying the term through the recurrence backend."""
    inc = IncrementalMap()
    for node in history(m):
        if isinstance(node, Insert):
            inc.insert(node.x)
        else:
            inc.link(node.k, node.x, node.y)
    return inc.stats()
