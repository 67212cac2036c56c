"""Canonical set partitions of {0..n-1} and the union-find used to build them."""

from __future__ import annotations

from dataclasses import dataclass


class UnionFind:
    """Union-find over 0..n-1 whose class representative is the least member.

    Union keeps the smaller root, so find() always returns the least
    element of a class and canonicalization comes for free.
    """

    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y. Returns True if they were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def to_partition(self) -> "Partition":
        return Partition(tuple(self.find(x) for x in range(len(self.parent))))


@dataclass(frozen=True)
class Partition:
    """Partition of {0..n-1} in least-representative form.

    block_of[x] is the least element of the block containing x, so two
    partitions are equal iff their block_of tuples are equal and
    comparisons stay O(n).
    """

    block_of: tuple[int, ...]

    def __post_init__(self):
        bo = self.block_of
        for x, r in enumerate(bo):
            if not 0 <= r <= x:
                raise ValueError(f"block_of[{x}] = {r} is not canonical")
            if bo[r] != r:
                raise ValueError(f"representative {r} is not its own representative")

    @staticmethod
    def identity(n: int) -> "Partition":
        return Partition(tuple(range(n)))

    @staticmethod
    def total(n: int) -> "Partition":
        return Partition((0,) * n)

    @staticmethod
    def from_pairs(n: int, pairs) -> "Partition":
        uf = UnionFind(n)
        for a, b in pairs:
            uf.union(a, b)
        return uf.to_partition()

    @property
    def size(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return len(set(self.block_of))

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def blocks(self) -> list[list[int]]:
        """Blocks sorted by their least element, members ascending."""
        by_rep: dict[int, list[int]] = {}
        for x, r in enumerate(self.block_of):
            by_rep.setdefault(r, []).append(x)
        return [by_rep[r] for r in sorted(by_rep)]

    def refines(self, other: "Partition") -> bool:
        """True iff every block of self lies inside a block of other."""
        obo = other.block_of
        return all(obo[x] == obo[r] for x, r in enumerate(self.block_of))

    def meet(self, other: "Partition") -> "Partition":
        seen: dict[tuple[int, int], int] = {}
        bo, obo = self.block_of, other.block_of
        reps = tuple(seen.setdefault((bo[x], obo[x]), x) for x in range(len(bo)))
        return Partition(reps)

    def join(self, other: "Partition") -> "Partition":
        uf = UnionFind(len(self.block_of))
        for x, r in enumerate(self.block_of):
            uf.union(x, r)
        for x, r in enumerate(other.block_of):
            uf.union(x, r)
        return uf.to_partition()

    def ordered_pairs(self) -> list[tuple[int, int]]:
        """All ordered related pairs, diagonal included."""
        out = []
        for block in self.blocks():
            for a in block:
                for b in block:
                    out.append((a, b))
        return out

    def spanning_pairs(self) -> list[tuple[int, int]]:
        """One (rep, member) pair per non-representative member; generates
        the same equivalence as ordered_pairs()."""
        return [(r, x) for x, r in enumerate(self.block_of) if r != x]

    def __str__(self) -> str:
        return "|".join(" ".join(str(x) for x in block) for block in self.blocks())
