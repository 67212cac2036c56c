from __future__ import annotations

import pytest

from finalg.algebra import (
    FiniteAlgebra,
    Operation,
    enumerate_subuniverses,
    evaluate,
    induced_algebra,
    pair_algebra,
    quotient_algebra,
    subuniverse_closure,
)
from finalg.errors import (
    ArityError,
    ElementRangeError,
    InvalidAlgebraError,
    NotACongruenceError,
)
from finalg.partition import Partition

from conftest import closed_subsets_bruteforce


def test_validation_rejects_bad_tables():
    with pytest.raises(InvalidAlgebraError):
        FiniteAlgebra("bad", 2, (Operation("f", 1, (0,)),))
    with pytest.raises(InvalidAlgebraError):
        FiniteAlgebra("bad", 2, (Operation("f", 1, (0, 2)),))
    with pytest.raises(InvalidAlgebraError):
        FiniteAlgebra("bad", 2, (Operation("f", 0, (0,)), Operation("f", 0, (1,))))
    with pytest.raises(InvalidAlgebraError):
        FiniteAlgebra("empty", 0, ())


def test_evaluate(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    assert evaluate(z4, z4.op_index("+"), (1, 3)) == 0
    assert evaluate(z4, z4.op_index("0"), ()) == 0
    s3 = fixtures_by_name["S3"]
    # a transposition squared is the identity
    assert evaluate(s3, s3.op_index("*"), (1, 1)) == 0
    with pytest.raises(ArityError):
        evaluate(z4, 0, (1,))
    with pytest.raises(ElementRangeError):
        evaluate(z4, 0, (1, 7))


def test_subuniverse_closure_examples(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    assert subuniverse_closure(z4, {2}) == {0, 2}
    assert subuniverse_closure(z4, {1}) == {0, 1, 2, 3}
    assert subuniverse_closure(z4, range(4)) == {0, 1, 2, 3}
    assert subuniverse_closure(z4, ()) == {0}  # constants always included


def test_enumerate_subuniverses_against_bruteforce(fixtures_by_name):
    for name in ["TRIV1", "Z2", "Z3", "Z4", "V4", "S3", "L2", "SL2"]:
        alg = fixtures_by_name[name]
        got = set(enumerate_subuniverses(alg))
        assert got == closed_subsets_bruteforce(alg), name


def test_enumerate_subuniverses_order(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    assert enumerate_subuniverses(z4) == [
        frozenset({0}),
        frozenset({0, 2}),
        frozenset({0, 1, 2, 3}),
    ]
    s3 = fixtures_by_name["S3"]
    subs = enumerate_subuniverses(s3)
    assert len(subs) == 6
    assert sorted(len(s) for s in subs) == [1, 2, 2, 2, 3, 6]


def test_pair_algebra(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    mod2 = Partition((0, 1, 0, 1))
    alg, pairs = pair_algebra(z4, mod2)
    assert alg.size == 8 and len(pairs) == 8
    # identity partition gives the diagonal
    diag, dpairs = pair_algebra(z4, Partition.identity(4))
    assert diag.size == 4
    assert dpairs == [(x, x) for x in range(4)]
    # total partition gives the square; projections are homomorphisms
    sq, spairs = pair_algebra(z4, Partition.total(4))
    assert sq.size == 16
    for opi, op in enumerate(sq.operations):
        if op.arity != 2:
            continue
        for i in range(16):
            for j in range(16):
                v = evaluate(sq, opi, (i, j))
                for coord in range(2):
                    assert spairs[v][coord] == evaluate(
                        z4, opi, (spairs[i][coord], spairs[j][coord])
                    )


def test_pair_algebra_rejects_non_congruence(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    with pytest.raises(NotACongruenceError) as info:
        pair_algebra(z4, Partition((0, 0, 2, 3)))  # {0,1} is no congruence of Z4
    assert info.value.op_name in {"+", "-"}


def test_quotient_algebra(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    q, block_map = quotient_algebra(z4, Partition((0, 1, 0, 1)))
    assert q.size == 2
    assert block_map == (0, 1, 0, 1)
    add = q.operations[q.op_index("+")].table
    assert add == (0, 1, 1, 0)  # Z2
    # quotient by the identity is A up to renaming
    same, _ = quotient_algebra(z4, Partition.identity(4))
    assert [op.table for op in same.operations] == [op.table for op in z4.operations]
    # S3 mod the even permutations is the 2-element group
    s3 = fixtures_by_name["S3"]
    q3, bm = quotient_algebra(s3, Partition((0, 1, 1, 1, 0, 0)))
    assert q3.size == 2
    assert q3.operations[0].table == (0, 1, 1, 0)


def test_induced_algebra(fixtures_by_name):
    z4 = fixtures_by_name["Z4"]
    sub = induced_algebra(z4, {0, 2})
    assert sub.size == 2
    assert sub.operations[sub.op_index("+")].table == (0, 1, 1, 0)
    with pytest.raises(InvalidAlgebraError):
        induced_algebra(z4, {0, 1})  # not closed
