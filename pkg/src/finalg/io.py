"""The algebra file format.

    # comment lines start with '#'
    algebra <name>        (optional; defaults to "unnamed")
    size <n>
    op <name> <arity>
    ... n^arity whitespace-separated entries in lexicographic order ...
    end

parse(serialize(A)) reproduces A exactly.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra, Operation
from .errors import AlgebraParseError

MAX_INPUT_ARITY = 4


def _tokens(text: str):
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for tok in line.split():
            out.append((tok, lineno))
    return out


class _Reader:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self, what: str) -> tuple[str, int]:
        if self.pos >= len(self.toks):
            last_line = self.toks[-1][1] if self.toks else None
            raise AlgebraParseError(f"unexpected end of input, expected {what}", last_line)
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def next_int(self, what: str) -> tuple[int, int]:
        tok, line = self.next(what)
        try:
            return int(tok), line
        except ValueError:
            raise AlgebraParseError(f"expected {what}, got {tok!r}", line) from None


def parse_algebra(text: str) -> FiniteAlgebra:
    r = _Reader(text)
    name = "unnamed"
    if r.peek() == "algebra":
        r.next("keyword")
        name, _ = r.next("algebra name")
    tok, line = r.next("'size'")
    if tok != "size":
        raise AlgebraParseError(f"expected 'size', got {tok!r}", line)
    size, line = r.next_int("size value")
    if size < 1:
        raise AlgebraParseError(f"size must be at least 1, got {size}", line)
    ops: list[Operation] = []
    names = set()
    while True:
        tok, line = r.next("'op' or 'end'")
        if tok == "end":
            break
        if tok != "op":
            raise AlgebraParseError(f"expected 'op' or 'end', got {tok!r}", line)
        op_name, line = r.next("operation name")
        if op_name in names:
            raise AlgebraParseError(f"duplicate operation name {op_name!r}", line)
        names.add(op_name)
        arity, line = r.next_int("arity")
        if arity < 0:
            raise AlgebraParseError(f"arity must be nonnegative, got {arity}", line)
        if arity > MAX_INPUT_ARITY:
            raise AlgebraParseError(
                f"operation {op_name!r} has arity {arity}, cap is {MAX_INPUT_ARITY}",
                line,
            )
        count = size**arity
        table = []
        for _ in range(count):
            v, line = r.next_int(f"table entry for {op_name!r}")
            if not 0 <= v < size:
                raise AlgebraParseError(
                    f"table entry {v} of {op_name!r} outside 0..{size - 1}", line
                )
            table.append(v)
        ops.append(Operation(op_name, arity, tuple(table)))
    if r.peek() is not None:
        tok, line = r.next("nothing")
        raise AlgebraParseError(f"trailing content {tok!r} after 'end'", line)
    return FiniteAlgebra(name, size, ops)


def serialize_algebra(algebra: FiniteAlgebra) -> str:
    n = algebra.size
    lines = [f"algebra {algebra.name}", f"size {n}"]
    for op in algebra.operations:
        lines.append(f"op {op.name} {op.arity}")
        if op.arity == 0:
            lines.append(str(op.table[0]))
            continue
        per_line = n
        for start in range(0, len(op.table), per_line):
            chunk = op.table[start : start + per_line]
            lines.append(" ".join(str(v) for v in chunk))
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_algebra(path) -> FiniteAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def save_algebra(algebra: FiniteAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_algebra(algebra))
