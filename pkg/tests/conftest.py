from __future__ import annotations

import random
from itertools import product

import pytest

from finalg.algebra import FiniteAlgebra, Operation, congruence_violation
from finalg.fixtures import builtin_fixtures
from finalg.partition import Partition


@pytest.fixture(scope="session")
def fixtures_by_name():
    return {a.name: a for a in builtin_fixtures()}


# ---- independent oracles ----------------------------------------------------


def all_partitions(n: int) -> list[Partition]:
    """Every partition of {0..n-1}, by assigning each element to an
    existing block or a new one (restricted growth strings)."""
    results: list[Partition] = []

    def extend(assign: list[int], used: int):
        x = len(assign)
        if x == n:
            reps: dict[int, int] = {}
            block_of = []
            for y, b in enumerate(assign):
                reps.setdefault(b, y)
                block_of.append(reps[b])
            results.append(Partition(tuple(block_of)))
            return
        for b in range(used + 1):
            extend(assign + [b], used + (1 if b == used else 0))

    extend([0], 1) if n else results.append(Partition(()))
    return results


def all_congruences_bruteforce(algebra: FiniteAlgebra) -> set[tuple[int, ...]]:
    """Oracle: filter every partition by the preservation test."""
    return {
        p.block_of
        for p in all_partitions(algebra.size)
        if congruence_violation(algebra, p) is None
    }


def closed_subsets_bruteforce(algebra: FiniteAlgebra) -> set[frozenset]:
    """Oracle: every nonempty subset closed under all operations."""
    n = algebra.size
    out = set()
    for mask in range(1, 2**n):
        subset = frozenset(x for x in range(n) if mask >> x & 1)
        ok = True
        for op in algebra.operations:
            if op.arity == 0:
                if op.table[0] not in subset:
                    ok = False
                    break
                continue
            for args in product(subset, repeat=op.arity):
                idx = 0
                for a in args:
                    idx = idx * n + a
                if op.table[idx] not in subset:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(subset)
    return out


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra, name: str) -> FiniteAlgebra:
    """Componentwise product; operations are paired positionally and must
    have equal arities."""
    assert len(a.operations) == len(b.operations)
    n, m = a.size, b.size
    size = n * m
    ops = []
    for opa, opb in zip(a.operations, b.operations):
        assert opa.arity == opb.arity
        k = opa.arity
        entries = []
        for args in product(range(size), repeat=k):
            ia = 0
            ib = 0
            for x in args:
                ia = ia * n + x // m
                ib = ib * m + x % m
            entries.append(opa.table[ia] * m + opb.table[ib])
        ops.append(Operation(opa.name, k, tuple(entries)))
    return FiniteAlgebra(name, size, ops)


def random_algebra(seed: int, size: int, arities=(2, 1)) -> FiniteAlgebra:
    """Arbitrary (not Maltsev-forced) random algebra for property tests."""
    rng = random.Random(seed)
    ops = [
        Operation(f"g{i}", k, tuple(rng.randrange(size) for _ in range(size**k)))
        for i, k in enumerate(arities)
    ]
    return FiniteAlgebra(f"rand_{seed}_{size}", size, ops)
