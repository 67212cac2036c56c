"""Finite algebras as flat operation tables, and the basic constructions on them.

The universe of an n-element algebra is always 0..n-1; external names are
the file format's concern.  Operation tables are flat sequences in
lexicographic argument order with the leftmost argument most significant,
so the entry for (a1, ..., ak) sits at index a1*n^(k-1) + ... + ak.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import (
    ArityError,
    ElementRangeError,
    InvalidAlgebraError,
    NotACongruenceError,
)
from .partition import Partition


@dataclass(frozen=True)
class Operation:
    """A k-ary operation given by its flat table; arity 0 is a 1-entry constant."""

    name: str
    arity: int
    table: tuple[int, ...]


class FiniteAlgebra:
    """An algebra on {0..n-1} with finitely many finitary operations.

    Instances are immutable by convention; every function in this package
    treats them as values, so sharing across threads is safe.
    """

    def __init__(self, name: str, size: int, operations=()):
        if size < 1:
            raise InvalidAlgebraError(f"universe must be nonempty, got size {size}")
        ops = tuple(operations)
        seen = set()
        for op in ops:
            if op.arity < 0:
                raise InvalidAlgebraError(f"operation {op.name} has negative arity")
            if op.name in seen:
                raise InvalidAlgebraError(f"duplicate operation name {op.name!r}")
            seen.add(op.name)
            expected = size**op.arity
            if len(op.table) != expected:
                raise InvalidAlgebraError(
                    f"operation {op.name}: table has {len(op.table)} entries, "
                    f"expected {expected}"
                )
            for v in op.table:
                if not 0 <= v < size:
                    raise InvalidAlgebraError(
                        f"operation {op.name}: table entry {v} outside 0..{size - 1}"
                    )
        self.name = name
        self.size = size
        self.operations = ops
        self._np_tables: list[np.ndarray] | None = None

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and self.name == other.name
            and self.size == other.size
            and self.operations == other.operations
        )

    def __repr__(self):
        sig = ",".join(f"{op.name}/{op.arity}" for op in self.operations)
        return f"FiniteAlgebra({self.name!r}, size={self.size}, ops=[{sig}])"

    def op_index(self, name: str) -> int:
        for i, op in enumerate(self.operations):
            if op.name == name:
                return i
        raise KeyError(name)

    def table_arrays(self) -> list[np.ndarray]:
        """Operation tables as int64 numpy arrays, cached."""
        if self._np_tables is None:
            self._np_tables = [
                np.asarray(op.table, dtype=np.int64) for op in self.operations
            ]
        return self._np_tables


def evaluate(algebra: FiniteAlgebra, op_index: int, args) -> int:
    """Apply the op_index-th operation to args."""
    op = algebra.operations[op_index]
    args = tuple(args)
    if len(args) != op.arity:
        raise ArityError(
            f"{op.name} has arity {op.arity}, got {len(args)} arguments"
        )
    n = algebra.size
    idx = 0
    for a in args:
        if not 0 <= a < n:
            raise ElementRangeError(f"element {a} outside 0..{n - 1}")
        idx = idx * n + a
    return op.table[idx]


def subuniverse_closure(algebra: FiniteAlgebra, seed) -> frozenset:
    """Least subset of the universe containing seed and closed under all
    operations.  Constants are always included; an empty seed yields the
    subuniverse generated by the constants (possibly empty)."""
    n = algebra.size
    for x in seed:
        if not 0 <= x < n:
            raise ElementRangeError(f"seed element {x} outside 0..{n - 1}")
    members = set(seed)
    for op in algebra.operations:
        if op.arity == 0:
            members.add(op.table[0])
    ops = [(op.arity, op.table) for op in algebra.operations if op.arity > 0]
    frontier = sorted(members)
    while frontier:
        current = sorted(members)
        old = [x for x in current if x not in set(frontier)]
        fresh = set()
        for arity, table in ops:
            # each combo visited once: earlier args old, one frontier arg, rest anything
            for pos in range(arity):
                pools = [old] * pos + [frontier] + [current] * (arity - 1 - pos)
                for args in product(*pools):
                    idx = 0
                    for a in args:
                        idx = idx * n + a
                    v = table[idx]
                    if v not in members:
                        members.add(v)
                        fresh.add(v)
        frontier = sorted(fresh)
    return frozenset(members)


def enumerate_subuniverses(algebra: FiniteAlgebra) -> list[frozenset]:
    """All nonempty subuniverses, each once, sorted by (cardinality,
    lexicographic membership).

    Grown by closing single-element extensions of known subuniverses;
    every subuniverse is reached because adding any missing element of a
    target subuniverse stays inside it.
    """
    n = algebra.size
    found: set[frozenset] = set()
    base = subuniverse_closure(algebra, ())
    work: list[frozenset] = []
    if base:
        found.add(base)
        work.append(base)
    for x in range(n):
        s = subuniverse_closure(algebra, (x,))
        if s not in found:
            found.add(s)
            work.append(s)
    while work:
        s = work.pop()
        for x in range(n):
            if x in s:
                continue
            t = subuniverse_closure(algebra, tuple(s) + (x,))
            if t not in found:
                found.add(t)
                work.append(t)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def congruence_violation(algebra: FiniteAlgebra, part: Partition):
    """Return None if part is preserved by every operation, else a witness
    (op_name, args, coord, replacement) where replacing args[coord] by the
    related element breaks the block.

    Checking single-coordinate replacements suffices: componentwise-related
    tuples are linked by a chain of them.
    """
    if part.size != algebra.size:
        raise ElementRangeError(
            f"partition is over {part.size} elements, algebra has {algebra.size}"
        )
    n = algebra.size
    bo = part.block_of
    by_rep: dict[int, list[int]] = {}
    for x, r in enumerate(bo):
        by_rep.setdefault(r, []).append(x)
    siblings = [[y for y in by_rep[bo[x]] if y > x] for x in range(n)]
    for op in algebra.operations:
        k, table = op.arity, op.table
        if k == 0:
            continue
        for args in product(range(n), repeat=k):
            idx = 0
            for a in args:
                idx = idx * n + a
            base = table[idx]
            for coord in range(k):
                stride = n ** (k - 1 - coord)
                lo = idx - args[coord] * stride
                for y in siblings[args[coord]]:
                    if bo[base] != bo[table[lo + y * stride]]:
                        return (op.name, args, coord, y)
    return None


def _require_congruence(algebra: FiniteAlgebra, part: Partition):
    witness = congruence_violation(algebra, part)
    if witness is not None:
        raise NotACongruenceError(*witness)


def pair_algebra(algebra: FiniteAlgebra, beta: Partition):
    """The algebra on {(x, y) : x beta y} with operations acting
    coordinatewise.  Returns (algebra, pairs) where pairs maps each new
    index to its element pair.

    Raises NotACongruenceError (with the violating operation and tuple)
    if beta is not a congruence.
    """
    _require_congruence(algebra, beta)
    n = algebra.size
    pairs = [(x, y) for x in range(n) for y in range(n) if beta.related(x, y)]
    p = len(pairs)
    pair_index = np.full((n, n), -1, dtype=np.int64)
    for i, (x, y) in enumerate(pairs):
        pair_index[x, y] = i
    xs = np.asarray([x for x, _ in pairs], dtype=np.int64)
    ys = np.asarray([y for _, y in pairs], dtype=np.int64)
    ops = []
    for op, tab in zip(algebra.operations, algebra.table_arrays()):
        k = op.arity
        if k == 0:
            c = op.table[0]
            ops.append(Operation(op.name, 0, (int(pair_index[c, c]),)))
            continue
        grids = np.indices((p,) * k).reshape(k, -1)
        fx = np.zeros(p**k, dtype=np.int64)
        fy = np.zeros(p**k, dtype=np.int64)
        for t in range(k):
            fx = fx * n + xs[grids[t]]
            fy = fy * n + ys[grids[t]]
        rx, ry = tab[fx], tab[fy]
        entries = pair_index[rx, ry]
        if (entries < 0).any():
            raise NotACongruenceError(op.name, (), 0, 0)  # unreachable after validation
        ops.append(Operation(op.name, k, tuple(int(e) for e in entries)))
    result = FiniteAlgebra(f"{algebra.name}_pairs", p, ops)
    return result, pairs


def quotient_algebra(algebra: FiniteAlgebra, theta: Partition):
    """The quotient algebra modulo theta.  Blocks are indexed by their
    least element in ascending order.  Returns (algebra, block_map) where
    block_map[x] is the index of x's block.

    Well-definedness is established up front by verifying theta is a
    congruence; the tables are then induced from block representatives.
    """
    _require_congruence(algebra, theta)
    n = algebra.size
    reps = sorted(set(theta.block_of))
    m = len(reps)
    block_index = {r: i for i, r in enumerate(reps)}
    block_map = tuple(block_index[theta.block_of[x]] for x in range(n))
    ops = []
    for op in algebra.operations:
        k, table = op.arity, op.table
        if k == 0:
            ops.append(Operation(op.name, 0, (block_map[table[0]],)))
            continue
        entries = []
        for args in product(reps, repeat=k):
            idx = 0
            for a in args:
                idx = idx * n + a
            entries.append(block_map[table[idx]])
        ops.append(Operation(op.name, k, tuple(entries)))
    result = FiniteAlgebra(f"{algebra.name}_mod", m, ops)
    return result, block_map


def induced_algebra(algebra: FiniteAlgebra, subuniverse) -> FiniteAlgebra:
    """The algebra induced on a subuniverse, renamed to 0..|S|-1 through
    the ascending order of S."""
    members = sorted(subuniverse)
    index = {x: i for i, x in enumerate(members)}
    n = algebra.size
    ops = []
    for op in algebra.operations:
        k, table = op.arity, op.table
        entries = []
        for args in product(members, repeat=k):
            idx = 0
            for a in args:
                idx = idx * n + a
            v = table[idx]
            if v not in index:
                raise InvalidAlgebraError(
                    f"{sorted(subuniverse)} is not closed under {op.name}"
                )
            entries.append(index[v])
        ops.append(Operation(op.name, k, tuple(entries)))
    label = "-".join(str(x) for x in members)
    return FiniteAlgebra(f"{algebra.name}_sub_{label}", len(members), ops)
