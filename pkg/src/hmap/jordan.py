"""The ring-break connectivity check and the machinery to test it at scale.

The headline property: breaking a planar map along a valid ring of faces
increases the component count by exactly one.  This module checks that
on demand (``jordan_check``), on randomly generated planar maps with
searched-for rings (``fuzz_jordan``), and exhaustively over all small
maps and all short rings (``exhaustive_jordan``).  The two supporting
lemmas of the inductive argument are checkable on their own:
``first_break_keeps_connected`` and ``tail_is_ring_after_first_break``.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .criteria import break_disconnects
from .fmap import (
    ConstraintError,
    Dart,
    Dim,
    FreeMap,
    Insert,
    Link,
    Void,
    break_link,
)
from .index import HypermapIndex, build_index, ensure_index
from .rings import (
    RingItem,
    RingList,
    break_ring,
    check_ring,
    ring_closed,
    ring_continuous,
    ring_edges_unique,
    ring_faces_distinct,
)
from .stats import IncrementalMap


@dataclass(frozen=True, slots=True)
class JordanOutcome:
    """Result of one ring-break connectivity check."""

    n_components_before: int
    n_components_after: int
    map_term: FreeMap
    ring: tuple[RingItem, ...]

    @property
    def delta(self) -> int:
        return self.n_components_after - self.n_components_before

    @property
    def passed(self) -> bool:
        return self.delta == 1

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return (f"nc_before={self.n_components_before} "
                f"nc_after={self.n_components_after} verdict={verdict}")


def jordan_check(m: FreeMap, items: RingList, *,
                 index: HypermapIndex | None = None) -> JordanOutcome:
    """Break along the ring and compare component counts.

    Requires a well-formed planar map and a valid ring; each failed
    precondition is reported by name.
    """
    idx = ensure_index(m, index)
    if not idx.stats.planar:
        raise ConstraintError("map is not planar")
    diag = check_ring(m, items, index=idx)
    if not diag.valid:
        raise ConstraintError(f"not a valid ring: {diag.summary()}")
    broken = break_ring(m, items)
    after = build_index(broken, check=False).stats.n_components
    return JordanOutcome(idx.stats.n_components, after, m, tuple(items))


def first_break_keeps_connected(m: FreeMap, items: RingList, *,
                                index: HypermapIndex | None = None) -> bool:
    """For a valid ring of length >= 2, breaking the first item's link
    must not disconnect: the link target and the chain bottom must lie
    in different faces.  Returns True when that holds."""
    if len(items) < 2:
        raise ConstraintError("needs a ring of length >= 2")
    return not break_disconnects(m, items[0].x, index=index)


def tail_is_ring_after_first_break(m: FreeMap, items: RingList, *,
                                   index: HypermapIndex | None = None) -> bool:
    """After breaking the first item's link, the remaining items must
    still satisfy all four ring conditions in the broken map."""
    if len(items) < 2:
        raise ConstraintError("needs a ring of length >= 2")
    ensure_index(m, index)
    m1 = break_link(m, Dim.zero, items[0].x)
    idx1 = build_index(m1, check=False)
    tail = list(items[1:])
    return (ring_edges_unique(m1, tail, index=idx1)
            and ring_continuous(m1, tail, index=idx1)
            and ring_closed(m1, tail, index=idx1)
            and ring_faces_distinct(m1, tail, index=idx1))


# ---------------------------------------------------------------------------
# random generation


def random_map(seed: int, n_darts: int, n_link_attempts: int) -> FreeMap:
    """Deterministic random well-formed map: darts 1..n, then uniform
    link attempts, keeping those that meet the link preconditions."""
    rng = random.Random(seed)
    inc = IncrementalMap()
    for d in range(1, n_darts + 1):
        inc.insert(d)
    if n_darts > 0:
        for _ in range(n_link_attempts):
            k = Dim(rng.getrandbits(1))
            x = rng.randint(1, n_darts)
            y = rng.randint(1, n_darts)
            if inc.can_link(k, x, y):
                inc.link(k, x, y)
    return inc.term()


def random_planar_map(seed: int, n_darts: int, n_links: int, *,
                      move_weights: tuple[int, int, int] = (2, 3, 3)) -> FreeMap:
    """Deterministic random planar map.

    Inserts darts 1..n, then mixes three kinds of planarity-preserving
    links until ``n_links`` are placed or the attempt budget runs out:
    a bridge between two components, a face split at dimension zero, and
    a face split at dimension one.  ``move_weights`` sets the mix.
    Isolated darts are planar, bridges keep the characteristic identity
    across the merge, and splits add one face inside one component, so
    every intermediate map is planar by construction.
    """
    if n_links > 2 * n_darts:
        raise ConstraintError(
            f"{n_links} links is impossible with {n_darts} darts "
            f"(each dimension holds at most one link per dart)")
    rng = random.Random(seed)
    inc = IncrementalMap()
    for d in range(1, n_darts + 1):
        inc.insert(d)
    if n_darts == 0 or n_links <= 0:
        return inc.term()

    moves = ["bridge", "split0", "split1"]
    placed = 0
    budget = 10 * n_links + 20
    while placed < n_links and budget > 0:
        budget -= 1
        move = rng.choices(moves, weights=move_weights)[0]
        if move == "bridge":
            x = rng.randint(1, n_darts)
            y = rng.randint(1, n_darts)
            if inc.same_component(x, y):
                continue
            k = Dim(rng.getrandbits(1))
            if inc.can_link(k, x, y):
                inc.link(k, x, y)
                placed += 1
        elif move == "split0":
            face = inc.face_members(rng.randint(1, n_darts))
            a = rng.choice(face)
            y = rng.choice(face)
            x = inc.chains[1].closed_succ(a)
            if inc.can_link(Dim.zero, x, y):
                inc.link(Dim.zero, x, y)
                placed += 1
        else:
            face = inc.face_members(rng.randint(1, n_darts))
            x = rng.choice(face)
            b = rng.choice(face)
            y = inc.chains[0].closed_pred(b)
            if inc.can_link(Dim.one, x, y):
                inc.link(Dim.one, x, y)
                placed += 1
    return inc.term()


# ---------------------------------------------------------------------------
# ring discovery


def _connectors(idx: HypermapIndex) -> list[tuple[Dart, Dart, Dart, Dart]]:
    """(dart, edge id, face of link target, face of chain bottom) for
    every dart carrying an explicit 0-link."""
    out = []
    for x, y in idx.succ_links[0].items():
        out.append((x, idx.edge_ids[x],
                    idx.face_ids[y],
                    idx.face_ids[idx.bottoms[0][x]]))
    return out


def find_ring(m: FreeMap, max_len: int, seed: int, *,
              index: HypermapIndex | None = None) -> list[RingItem] | None:
    """Search for a valid ring of at most ``max_len`` items.

    Walks the graph whose nodes are faces and whose edges are the
    double-links, looking for a simple cycle with pairwise distinct
    edge orbits.  The seed only shuffles exploration order.  Returns
    None when no ring of the requested length exists in the explored
    order (the search is exhaustive, so None means none exists).
    """
    idx = ensure_index(m, index)
    rng = random.Random(seed)
    conns = _connectors(idx)
    rng.shuffle(conns)

    if max_len >= 1:
        for x, _edge, fy, f0 in conns:
            if fy == f0:
                return [RingItem(x, rng.getrandbits(1) == 1)]
    if max_len < 2:
        return None

    by_face: dict[Dart, list[tuple[int, bool, Dart]]] = {}
    for ci, (x, _edge, fy, f0) in enumerate(conns):
        if fy == f0:
            continue
        by_face.setdefault(fy, []).append((ci, True, f0))
        by_face.setdefault(f0, []).append((ci, False, fy))
    for options in by_face.values():
        rng.shuffle(options)

    starts = list(by_face)
    rng.shuffle(starts)
    used_edges: set[Dart] = set()
    visited: set[Dart] = set()
    path: list[RingItem] = []

    def dfs(start: Dart, cur: Dart) -> list[RingItem] | None:
        for ci, flag, other in by_face.get(cur, ()):  # noqa: B023
            x, edge, _fy, _f0 = conns[ci]
            if edge in used_edges:
                continue
            if other == start and len(path) + 1 >= 2:
                return path + [RingItem(x, flag)]
            if other in visited or len(path) + 1 >= max_len:
                continue
            used_edges.add(edge)
            visited.add(other)
            path.append(RingItem(x, flag))
            hit = dfs(start, other)
            if hit is not None:
                return hit
            path.pop()
            visited.remove(other)
            used_edges.remove(edge)
        return None

    for start in starts:
        visited = {start}
        used_edges = set()
        path = []
        hit = dfs(start, start)
        if hit is not None:
            return hit
    return None


# ---------------------------------------------------------------------------
# fuzzing


@dataclass(slots=True)
class FuzzReport:
    """Aggregate outcome of a fuzzing run; failures are data, not raises."""

    trials: int = 0
    rings_found: int = 0
    delta_failures: int = 0
    connect_failures: int = 0
    tail_failures: int = 0
    search_failures: int = 0
    witness_paths: list[str] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return (self.delta_failures + self.connect_failures
                + self.tail_failures + self.search_failures)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        lines = [
            f"trials={self.trials}",
            f"rings_found={self.rings_found}",
            f"delta_failures={self.delta_failures}",
            f"connect_failures={self.connect_failures}",
            f"tail_failures={self.tail_failures}",
            f"search_failures={self.search_failures}",
            f"verdict={'pass' if self.passed else 'FAIL'}",
        ]
        for p in self.witness_paths:
            lines.append(f"witness={p}")
        return "\n".join(lines)


def persist_witness(directory: str | os.PathLike, name: str,
                    m: FreeMap, items: RingList) -> tuple[str, str]:
    """Write a (map, ring) pair for replay; returns the two file paths."""
    from .io import serialize_map, serialize_ring
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    map_path = d / f"{name}.map"
    ring_path = d / f"{name}.ring"
    map_path.write_text(serialize_map(m), encoding="utf-8")
    ring_path.write_text(serialize_ring(items), encoding="utf-8")
    return str(map_path), str(ring_path)


def load_witness(directory: str | os.PathLike,
                 name: str) -> tuple[FreeMap, list[RingItem]]:
    from .io import parse_map, parse_ring
    d = Path(directory)
    m = parse_map((d / f"{name}.map").read_text(encoding="utf-8"))
    items = parse_ring((d / f"{name}.ring").read_text(encoding="utf-8"))
    return m, items


def _witness_dir(explicit: str | None) -> str | None:
    if explicit is not None:
        return explicit
    return os.environ.get("HMAP_WITNESS_DIR")


def fuzz_jordan(trials: int, seed: int, size_bound: int, *,
                max_ring_len: int = 4,
                witness_dir: str | None = None) -> FuzzReport:
    """Generate planar maps, hunt for rings, and check the break law on
    every ring found, together with the two supporting lemmas.

    The (trials, seed, size_bound) triple fully determines every trial.
    Failing (map, ring) pairs are persisted to ``witness_dir`` (or the
    directory named by HMAP_WITNESS_DIR) when one is configured.
    """
    report = FuzzReport(trials=trials)
    wdir = _witness_dir(witness_dir)
    master = random.Random(seed)
    for trial in range(trials):
        trial_seed = master.getrandbits(48)
        n_darts = 2 + trial_seed % max(1, size_bound - 1)
        link_budget = 2 * n_darts
        rng = random.Random(trial_seed)
        n_links = rng.randint(n_darts // 2, link_budget)
        m = random_planar_map(trial_seed, n_darts, n_links)
        idx = build_index(m, check=False)
        ring = find_ring(m, max_ring_len, trial_seed, index=idx)
        if ring is None:
            continue
        report.rings_found += 1

        failed = False
        if not check_ring(m, ring, index=idx).valid:
            report.search_failures += 1
            failed = True
        else:
            outcome = jordan_check(m, ring, index=idx)
            if not outcome.passed:
                report.delta_failures += 1
                failed = True
            if len(ring) >= 2:
                if not first_break_keeps_connected(m, ring, index=idx):
                    report.connect_failures += 1
                    failed = True
                if not tail_is_ring_after_first_break(m, ring, index=idx):
                    report.tail_failures += 1
                    failed = True
        if failed and wdir is not None:
            paths = persist_witness(wdir, f"fuzz_{trial:05d}", m, ring)
            report.witness_paths.extend(paths)
    return report


# ---------------------------------------------------------------------------
# exhaustive small-scale checking


def _path_systems(darts: Sequence[Dart]) -> Iterator[dict[Dart, Dart]]:
    """All successor assignments forming disjoint open chains.

    Each dart gets at most one successor, each at most one predecessor,
    and no cycle closes.  This is exactly the set of explicit link
    structures one dimension of a well-formed map can carry.
    """
    n = len(darts)
    succ: dict[Dart, Dart] = {}
    has_pred: set[Dart] = set()
    parent = {d: d for d in darts}

    def find(a: Dart) -> Dart:
        # no path compression: choices must be undoable
        while parent[a] != a:
            a = parent[a]
        return a

    def rec(i: int) -> Iterator[dict[Dart, Dart]]:
        if i == n:
            yield dict(succ)
            return
        x = darts[i]
        yield from rec(i + 1)
        for y in darts:
            if y in has_pred or find(x) == find(y):
                continue
            root_y = find(y)
            succ[x] = y
            has_pred.add(y)
            parent[root_y] = find(x)
            yield from rec(i + 1)
            parent[root_y] = root_y
            has_pred.discard(y)
            del succ[x]

    yield from rec(0)


def enumerate_maps(max_darts: int) -> Iterator[FreeMap]:
    """Every well-formed map with dart ids 1..n for each n <= max_darts.

    Well-formed maps are considered up to dart relabeling and up to the
    order link constructors appear in, so one canonical id scheme and
    one construction order per link structure cover all behaviors the
    observers can distinguish.
    """
    for n in range(max_darts + 1):
        darts = tuple(range(1, n + 1))
        systems = list(_path_systems(darts))
        base: FreeMap = Void()
        for d in darts:
            base = Insert(base, d)
        for s0 in systems:
            m0 = base
            for x in sorted(s0):
                m0 = Link(m0, Dim.zero, x, s0[x])
            for s1 in systems:
                m = m0
                for x in sorted(s1):
                    m = Link(m, Dim.one, x, s1[x])
                yield m


def candidate_rings(idx: HypermapIndex,
                    max_len: int) -> Iterator[tuple[RingItem, ...]]:
    """Every valid ring of the indexed map with at most ``max_len`` items.

    Singletons are the double-links bordering one face on both sides
    (either flag works, so both lists appear); longer rings are simple
    cycles through distinct faces over distinct edge orbits, and the
    flags are forced by the traversal direction.
    """
    conns = _connectors(idx)
    if max_len >= 1:
        for x, _edge, fy, f0 in conns:
            if fy == f0:
                yield (RingItem(x, True),)
                yield (RingItem(x, False),)
    if max_len < 2:
        return

    by_face: dict[Dart, list[tuple[int, bool, Dart]]] = {}
    for ci, (x, _edge, fy, f0) in enumerate(conns):
        if fy == f0:
            continue
        by_face.setdefault(fy, []).append((ci, True, f0))
        by_face.setdefault(f0, []).append((ci, False, fy))

    used_edges: set[Dart] = set()
    visited: set[Dart] = set()
    path: list[RingItem] = []

    def dfs(start: Dart, cur: Dart) -> Iterator[tuple[RingItem, ...]]:
        for ci, flag, other in by_face.get(cur, ()):
            x, edge, _fy, _f0 = conns[ci]
            if edge in used_edges:
                continue
            if other == start and len(path) + 1 >= 2:
                yield tuple(path) + (RingItem(x, flag),)
            if other in visited or len(path) + 1 >= max_len:
                continue
            used_edges.add(edge)
            visited.add(other)
            path.append(RingItem(x, flag))
            yield from dfs(start, other)
            path.pop()
            visited.remove(other)
            used_edges.remove(edge)

    for start in sorted(by_face):
        visited = {start}
        used_edges = set()
        path = []
        yield from dfs(start, start)


@dataclass(slots=True)
class ExhaustiveReport:
    """Tallies of an exhaustive small-scale sweep."""

    maps_seen: int = 0
    planar_maps: int = 0
    rings_checked: int = 0
    delta_failures: int = 0
    ring_soundness_failures: int = 0

    @property
    def passed(self) -> bool:
        return self.delta_failures == 0 and self.ring_soundness_failures == 0

    def summary(self) -> str:
        return (f"maps={self.maps_seen} planar={self.planar_maps} "
                f"rings={self.rings_checked} "
                f"delta_failures={self.delta_failures} "
                f"soundness_failures={self.ring_soundness_failures} "
                f"verdict={'pass' if self.passed else 'FAIL'}")


def exhaustive_jordan(max_darts: int, max_ring_len: int) -> ExhaustiveReport:
    """Check the ring-break law on every planar map with up to
    ``max_darts`` darts and every ring with up to ``max_ring_len`` items."""
    report = ExhaustiveReport()
    for m in enumerate_maps(max_darts):
        report.maps_seen += 1
        idx = build_index(m, check=False)
        if not idx.stats.planar:
            continue
        report.planar_maps += 1
        nc_before = idx.stats.n_components
        for ring in candidate_rings(idx, max_ring_len):
            report.rings_checked += 1
            if not check_ring(m, ring, index=idx).valid:
                report.ring_soundness_failures += 1
                continue
            broken = break_ring(m, ring)
            nc_after = build_index(broken, check=False).stats.n_components
            if nc_after != nc_before + 1:
                report.delta_failures += 1
    return report
