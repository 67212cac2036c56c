"""Congruence generation and the full congruence lattice Con(A).

The lattice is built from the principal congruences: every congruence is
a join of principals, so closing the principal set under pairwise joins
(partition joins of congruences are again congruences) yields all of
Con(A); meets then come free as partition intersections.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .algebra import FiniteAlgebra
from .errors import LatticeOrderError, ResourceCapError
from .partition import Partition, UnionFind

DEFAULT_MAX_CON = 20_000


def _max_con_cap() -> int:
    return int(os.environ.get("FINALG_MAX_CON", DEFAULT_MAX_CON))


def generate_congruence(algebra: FiniteAlgebra, pairs) -> Partition:
    """Least congruence of the algebra containing all the given pairs.

    Union-find seeded with the pairs; every merge (a, b) is propagated
    through each operation one coordinate at a time until fixpoint.
    """
    n = algebra.size
    uf = UnionFind(n)
    queue = [(a, b) for a, b in pairs if uf.union(a, b)]
    ops = [(op.arity, op.table) for op in algebra.operations if op.arity > 0]
    while queue:
        a, b = queue.pop()
        for k, table in ops:
            for coord in range(k):
                stride = n ** (k - 1 - coord)
                span = n * stride
                for rest in range(n ** (k - 1)):
                    left, right = divmod(rest, stride)
                    base = left * span + right
                    u = table[base + a * stride]
                    v = table[base + b * stride]
                    if uf.union(u, v):
                        queue.append((u, v))
    return uf.to_partition()


@dataclass(eq=False)
class CongruenceLattice:
    """Con(A) with its order structure.

    elements are sorted by (number of blocks descending, canonical
    encoding), so the identity congruence is first and the total
    congruence last.  leq is the refinement order; meet and join tables
    index back into elements.
    """

    algebra: FiniteAlgebra
    elements: tuple[Partition, ...]
    leq: np.ndarray
    meet_table: np.ndarray
    join_table: np.ndarray
    covers: tuple[tuple[int, ...], ...]
    zero_index: int
    one_index: int
    atom_indices: tuple[int, ...]
    meet_irreducible_indices: tuple[int, ...]
    modular: bool
    _index: dict = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, part: Partition):
        return self._index.get(part.block_of)

    def is_leq(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def join_all(self, indices) -> int:
        out = self.zero_index
        for i in indices:
            out = self.join(out, i)
        return out

    def meet_all(self, indices) -> int:
        out = self.one_index
        for i in indices:
            out = self.meet(out, i)
        return out

    def unique_cover(self, i: int) -> int:
        ups = self.covers[i]
        if len(ups) != 1:
            raise LatticeOrderError(f"element {i} has {len(ups)} upper covers")
        return ups[0]

    def pstr(self, i: int) -> str:
        return str(self.elements[i])


def _modularity_flag(leq: np.ndarray, meet: np.ndarray, join: np.ndarray) -> bool:
    m = len(leq)
    for x in range(m):
        zs = np.flatnonzero(leq[x])
        if len(zs) == 0:
            continue
        inner = meet[:, zs]               # inner[y, t] = y ^ z_t
        lhs = join[x][inner]              # x v (y ^ z)
        rhs = meet[join[:, x][:, None], zs[None, :]]  # (x v y) ^ z
        if not np.array_equal(lhs, rhs):
            return False
    return True


def congruence_lattice(algebra: FiniteAlgebra, max_size: int | None = None) -> CongruenceLattice:
    """Compute all of Con(A) with order, covers, irreducibles and the
    modularity flag.  Raises ResourceCapError past the configured size cap."""
    cap = _max_con_cap() if max_size is None else max_size
    n = algebra.size
    found: dict[tuple, Partition] = {}

    def record(p: Partition) -> bool:
        if p.block_of in found:
            return False
        found[p.block_of] = p
        if len(found) > cap:
            raise ResourceCapError(
                f"congruence lattice of {algebra.name} exceeds cap {cap}"
            )
        return True

    record(Partition.identity(n))
    principals = []
    for a in range(n):
        for b in range(a + 1, n):
            p = generate_congruence(algebra, [(a, b)])
            principals.append(p)
            record(p)
    # close under pairwise joins; joins of congruences are congruences
    worklist = list(found.values())
    known = list(found.values())
    while worklist:
        p = worklist.pop()
        for q in list(known):
            j = p.join(q)
            if record(j):
                known.append(j)
                worklist.append(j)

    elements = tuple(
        sorted(found.values(), key=lambda p: (-p.num_blocks, p.block_of))
    )
    index = {p.block_of: i for i, p in enumerate(elements)}
    m = len(elements)

    leq = np.zeros((m, m), dtype=bool)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            if p.refines(q):
                leq[i, j] = True

    meet_table = np.zeros((m, m), dtype=np.int32)
    join_table = np.zeros((m, m), dtype=np.int32)
    for i, p in enumerate(elements):
        meet_table[i, i] = join_table[i, i] = i
        for j in range(i + 1, m):
            q = elements[j]
            mi = index[p.meet(q).block_of]
            ji = index[p.join(q).block_of]
            meet_table[i, j] = meet_table[j, i] = mi
            join_table[i, j] = join_table[j, i] = ji

    lt = leq & ~np.eye(m, dtype=bool)
    between = (lt.astype(np.float32) @ lt.astype(np.float32)) > 0
    cover_mat = lt & ~between
    covers = tuple(
        tuple(int(j) for j in np.flatnonzero(cover_mat[i])) for i in range(m)
    )

    zero_index = index[Partition.identity(n).block_of]
    one_index = index[Partition.total(n).block_of]
    atom_indices = covers[zero_index]
    meet_irreducible_indices = tuple(
        i for i in range(m) if i != one_index and len(covers[i]) == 1
    )
    modular = _modularity_flag(leq, meet_table, join_table)

    return CongruenceLattice(
        algebra=algebra,
        elements=elements,
        leq=leq,
        meet_table=meet_table,
        join_table=join_table,
        covers=covers,
        zero_index=zero_index,
        one_index=one_index,
        atom_indices=atom_indices,
        meet_irreducible_indices=meet_irreducible_indices,
        modular=modular,
        _index=index,
    )


def lattice_interval(lattice: CongruenceLattice, lo: int, hi: int) -> list[int]:
    """All x with lo <= x <= hi, in lattice element order."""
    if not lattice.is_leq(lo, hi):
        raise LatticeOrderError(
            f"interval endpoints are not ordered: {lattice.pstr(lo)} is not "
            f"below {lattice.pstr(hi)}"
        )
    return [
        x
        for x in range(lattice.size)
        if lattice.is_leq(lo, x) and lattice.is_leq(x, hi)
    ]


def meet_irreducibles(lattice: CongruenceLattice) -> list[tuple[int, int]]:
    """All (element, unique upper cover) pairs; in a finite lattice these
    are exactly the completely meet irreducible elements."""
    return [
        (i, lattice.covers[i][0]) for i in lattice.meet_irreducible_indices
    ]


def is_distributive(lattice: CongruenceLattice) -> bool:
    m = lattice.size
    meet, join = lattice.meet_table, lattice.join_table
    for x in range(m):
        lhs = meet[x][join]                      # x ^ (y v z)
        rhs = join[meet[x][:, None], meet[x][None, :]]  # (x^y) v (x^z)
        if not np.array_equal(lhs, rhs):
            return False
    return True
