"""Built-in fixture algebras spanning the abelian/neutral spectrum."""

from __future__ import annotations

from itertools import product

from .algebra import FiniteAlgebra, Operation


def _cyclic_group(name: str, n: int) -> FiniteAlgebra:
    add = tuple((a + b) % n for a in range(n) for b in range(n))
    neg = tuple((-a) % n for a in range(n))
    return FiniteAlgebra(
        name,
        n,
        (
            Operation("+", 2, add),
            Operation("-", 1, neg),
            Operation("0", 0, (0,)),
        ),
    )


def _klein_four() -> FiniteAlgebra:
    # elements are bit pairs; addition is XOR
    add = tuple(a ^ b for a in range(4) for b in range(4))
    return FiniteAlgebra(
        "V4",
        4,
        (Operation("+", 2, add), Operation("0", 0, (0,))),
    )


_S3_PERMS = (
    (0, 1, 2),  # 0: identity
    (1, 0, 2),  # 1: swap 0,1
    (2, 1, 0),  # 2: swap 0,2
    (0, 2, 1),  # 3: swap 1,2
    (1, 2, 0),  # 4: 3-cycle 0->1->2
    (2, 0, 1),  # 5: 3-cycle 0->2->1
)


def _symmetric_three() -> FiniteAlgebra:
    index = {p: i for i, p in enumerate(_S3_PERMS)}
    mul = []
    for p, q in product(_S3_PERMS, repeat=2):
        composed = tuple(p[q[i]] for i in range(3))  # apply q, then p
        mul.append(index[composed])
    inv = []
    for p in _S3_PERMS:
        inverse = tuple(p.index(i) for i in range(3))
        inv.append(index[inverse])
    return FiniteAlgebra(
        "S3",
        6,
        (
            Operation("*", 2, tuple(mul)),
            Operation("inv", 1, tuple(inv)),
            Operation("e", 0, (0,)),
        ),
    )


def _two_element_lattice() -> FiniteAlgebra:
    meet = (0, 0, 0, 1)
    join = (0, 1, 1, 1)
    return FiniteAlgebra(
        "L2", 2, (Operation("meet", 2, meet), Operation("join", 2, join))
    )


def _two_element_semilattice() -> FiniteAlgebra:
    return FiniteAlgebra("SL2", 2, (Operation("meet", 2, (0, 0, 0, 1)),))


def builtin_fixtures() -> list[FiniteAlgebra]:
    """The fixture corpus: trivial, cyclic groups, the Klein four group,
    the symmetric group on three letters, the two-element lattice and the
    two-element meet-semilattice."""
    return [
        FiniteAlgebra("TRIV1", 1, ()),
        _cyclic_group("Z2", 2),
        _cyclic_group("Z3", 3),
        _cyclic_group("Z4", 4),
        _klein_four(),
        _symmetric_three(),
        _two_element_lattice(),
        _two_element_semilattice(),
    ]


def fixture(name: str) -> FiniteAlgebra:
    for alg in builtin_fixtures():
        if alg.name == name:
            return alg
    raise KeyError(name)
