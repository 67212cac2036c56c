"""Exception types shared across the package."""

from __future__ import annotations


class FinalgError(Exception):
    """Base class for package-specific errors."""


class ArityError(FinalgError, ValueError):
    """An operation was applied to the wrong number of arguments."""


class ElementRangeError(FinalgError, ValueError):
    """An element lies outside the universe 0..n-1."""


class InvalidAlgebraError(FinalgError, ValueError):
    """Malformed algebra: bad table length, out-of-range entry, duplicate op name."""


class NotACongruenceError(FinalgError, ValueError):
    """A partition is not preserved by some operation.

    Carries the violating operation and argument tuple so fuzz
    counterexamples stay debuggable.
    """

    def __init__(self, op_name: str, args: tuple, coord: int, replacement: int):
        self.op_name = op_name
        self.args = args
        self.coord = coord
        self.replacement = replacement
        super().__init__(
            f"partition not preserved by {op_name}{args}: replacing argument "
            f"{coord} with related element {replacement} leaves the block"
        )


class NotSubdirectlyIrreducibleError(FinalgError, ValueError):
    """An SI-only operation was applied to an algebra whose congruence
    lattice does not have exactly one atom."""

    def __init__(self, atom_count: int):
        self.atom_count = atom_count
        super().__init__(f"algebra is not subdirectly irreducible: {atom_count} atoms")


class LatticeOrderError(FinalgError, ValueError):
    """Interval endpoints (or series endpoints) are not comparable the right way."""


class LatticeLookupError(FinalgError, RuntimeError):
    """A computed partition is missing from the congruence lattice.

    This signals an internal inconsistency; callers must abort rather
    than coerce the value.
    """


class NonModularWitnessError(FinalgError, RuntimeError):
    """A join re-verification failed.

    The join of individually-passing congruences failed the defining
    condition, which cannot happen for algebras in congruence modular
    varieties; the input is behaving non-modularly.
    """


class GateNotSatisfiedError(FinalgError, ValueError):
    """An invariant suite was requested on an algebra outside its hypothesis."""


class ResourceCapError(FinalgError, RuntimeError):
    """A configured resource cap (lattice size, closure size, time) was hit."""


class TheoremViolationError(FinalgError, RuntimeError):
    """The neutrabelian and split-at-0 verdicts disagreed on a CM-certified
    algebra.  This is an artifact bug by definition and must never be
    reported silently; the dump carries the full evidence."""

    def __init__(self, message: str, dump: str | None = None):
        self.dump = dump
        super().__init__(message)


class AlgebraParseError(FinalgError, ValueError):
    """Malformed algebra file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
