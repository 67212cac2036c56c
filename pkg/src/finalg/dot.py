"""DOT export of the congruence lattice cover graph."""

from __future__ import annotations

from .algebra import FiniteAlgebra
from .commutator import CommutatorTable
from .congruence import congruence_lattice


def export_lattice_dot(
    algebra: FiniteAlgebra, annotations: bool = True, lattice=None, table=None
) -> str:
    """Hasse diagram of Con(A) in DOT syntax, bottom-up.

    With annotations on, nodes carry the monolith/centralizer markers when
    the algebra is subdirectly irreducible, the solvable radical marker,
    shading for the abelian region below the radical, and dashed edges for
    abelian coverings.
    """
    L = lattice if lattice is not None else congruence_lattice(algebra)
    T = table if table is not None else CommutatorTable(algebra, L)
    marks: dict[int, list[str]] = {}
    shaded: set[int] = set()
    abelian_cover: set[tuple[int, int]] = set()
    if annotations:
        if len(L.atom_indices) == 1:
            mu = L.atom_indices[0]
            marks.setdefault(mu, []).append("monolith")
            nu = T.centralizer(L.zero_index, mu)
            marks.setdefault(nu, []).append("centralizer")
        rho = T.solvable_radical(L.zero_index)
        marks.setdefault(rho, []).append("radical")
        shaded = {x for x in range(L.size) if L.is_leq(x, rho)}
        for lower in range(L.size):
            for upper in L.covers[lower]:
                if L.is_leq(T.delta(upper, upper), lower):
                    abelian_cover.add((lower, upper))
    lines = [f"digraph Con_{_dot_ident(algebra.name)} {{", "  rankdir=BT;"]
    lines.append('  node [shape=box, fontname="monospace"];')
    for i in range(L.size):
        label = L.pstr(i)
        if i in marks:
            label += "  [" + ", ".join(marks[i]) + "]"
        attrs = [f'label="{label}"']
        if i in shaded:
            attrs.append('style=filled, fillcolor="lightblue"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for lower in range(L.size):
        for upper in L.covers[lower]:
            style = ' [style=dashed]' if (lower, upper) in abelian_cover else ""
            lines.append(f"  n{lower} -> n{upper}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_ident(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name)
