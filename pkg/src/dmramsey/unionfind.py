"""Union-find with parity, for incremental bipartiteness checks.

Each element stores its parity relative to its root. Joining ``u`` and ``v``
across an edge demands opposite parity; a request that contradicts the
stored parities means the edge closes an odd cycle.
"""

from __future__ import annotations


class ParityUnionFind:
    __slots__ = ("parent", "parity", "size")

    def __init__(self, n: int = 0):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.size = [1] * n

    def __len__(self) -> int:
        return len(self.parent)

    def copy(self) -> "ParityUnionFind":
        other = ParityUnionFind.__new__(ParityUnionFind)
        other.parent = self.parent[:]
        other.parity = self.parity[:]
        other.size = self.size[:]
        return other

    def add(self) -> int:
        v = len(self.parent)
        self.parent.append(v)
        self.parity.append(0)
        self.size.append(1)
        return v

    def find(self, x: int) -> tuple[int, int]:
        """Root of ``x`` and the parity of ``x`` relative to it."""
        par = 0
        path = []
        while self.parent[x] != x:
            path.append(x)
            par ^= self.parity[x]
            x = self.parent[x]
        root = x
        # path compression, keeping parities relative to the new parent
        acc = par
        for y in path:
            p = self.parity[y]
            self.parent[y] = root
            self.parity[y] = acc
            acc ^= p
        return root, par

    def union(self, u: int, v: int, odd: bool = True) -> bool:
        """Record that ``u`` and ``v`` differ in parity by ``odd``; False on contradiction."""
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        want = 1 if odd else 0
        if ru == rv:
            return (pu ^ pv) == want
        if self.size[ru] < self.size[rv]:
            ru, rv, pu, pv = rv, ru, pv, pu
        self.parent[rv] = ru
        self.parity[rv] = pu ^ pv ^ want
        self.size[ru] += self.size[rv]
        return True

    def side(self, x: int) -> tuple[int, int]:
        return self.find(x)
