"""Small disjoint-set forest used for orbit and component bookkeeping."""

from __future__ import annotations

from typing import Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind:
    """Union-find with path halving and union by size."""

    __slots__ = ("_parent", "_size")

    def __init__(self, items: Iterable[T] = ()) -> None:
        self._parent: dict = {}
        self._size: dict = {}
        for it in items:
            self.add(it)

    def add(self, x) -> None:
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def __contains__(self, x) -> bool:
        return x in self._parent

    def find(self, x):
        p = self._parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        """Merge the sets of ``a`` and ``b``; True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True

    def same(self, a, b) -> bool:
        return self.find(a) == self.find(b)

    def n_sets(self) -> int:
        return sum(1 for x, p in self._parent.items() if x == p)

    def groups(self) -> dict:
        """Root -> sorted members, for every tracked item."""
        out: dict = {}
        for x in self._parent:
            out.setdefault(self.find(x), []).append(x)
        for members in out.values():
            members.sort()
        return out
