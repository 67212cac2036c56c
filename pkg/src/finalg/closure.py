"""Vectorized fixpoint kernel for generated subuniverses of direct powers.

Elements of A^width are rows of an int16 array; operations act
coordinatewise through the base tables.  The frontier scheme visits each
argument combination exactly once: positions before the designated
frontier slot draw from pre-frontier elements, the slot itself from the
frontier, later positions from everything current.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import FiniteAlgebra

DENSE_LIMIT = 1 << 22  # membership as a flat bool array up to this many codes


@dataclass
class PowerClosure:
    """Outcome of a closure run.

    elements holds one row per generated vector in discovery order;
    parents[i] is ("gen", g), ("const", op_index) or (op_index, arg_ids)
    when tracking is on; target_index is set as soon as the target vector
    appears; capped means a resource cap stopped the run early.
    """

    elements: np.ndarray
    parents: list | None
    target_index: int | None
    capped: bool
    combos_used: int
    aborted: bool


class _Store:
    def __init__(self, n: int, width: int):
        self.n = n
        self.width = width
        self.count = 0
        self._buf = np.empty((256, width), dtype=np.int16)
        dense = width * np.log2(max(n, 2)) <= np.log2(DENSE_LIMIT)
        self._dense = bool(dense)
        if self._dense:
            self._codes = np.zeros(n**width, dtype=bool)
            self._pows = (n ** np.arange(width - 1, -1, -1, dtype=np.int64))
        else:
            self._seen: set[bytes] = set()

    def rows(self) -> np.ndarray:
        return self._buf[: self.count]

    def encode(self, rows: np.ndarray) -> np.ndarray:
        return rows.astype(np.int64) @ self._pows

    def _grow(self, extra: int):
        need = self.count + extra
        cap = len(self._buf)
        if need <= cap:
            return
        while cap < need:
            cap *= 2
        buf = np.empty((cap, self.width), dtype=np.int16)
        buf[: self.count] = self._buf[: self.count]
        self._buf = buf

    def add_batch(self, rows: np.ndarray) -> np.ndarray:
        """Append the rows that are new, first occurrence order preserved.
        Returns the positions (within rows) that were kept."""
        if len(rows) == 0:
            return np.empty(0, dtype=np.int64)
        if self._dense:
            enc = self.encode(rows)
            fresh = ~self._codes[enc]
            if not fresh.any():
                return np.empty(0, dtype=np.int64)
            idx = np.flatnonzero(fresh)
            enc_f = enc[idx]
            # drop duplicates within the batch, keeping the first
            uniq, first = np.unique(enc_f, return_index=True)
            order = np.sort(first)
            keep = idx[order]
            self._codes[enc[keep]] = True
        else:
            keep_list = []
            seen = self._seen
            raw = np.ascontiguousarray(rows, dtype=np.int16)
            for i in range(len(raw)):
                key = raw[i].tobytes()
                if key not in seen:
                    seen.add(key)
                    keep_list.append(i)
            if not keep_list:
                return np.empty(0, dtype=np.int64)
            keep = np.asarray(keep_list, dtype=np.int64)
        kept = rows[keep]
        self._grow(len(kept))
        self._buf[self.count : self.count + len(kept)] = kept
        self.count += len(kept)
        return keep


def close_in_power(
    algebra: FiniteAlgebra,
    width: int,
    generators,
    *,
    target=None,
    on_batch=None,
    track_parents: bool = False,
    element_cap: int | None = None,
    combo_cap: int | None = None,
) -> PowerClosure:
    """Close a set of vectors in A^width under the coordinatewise operations.

    on_batch(rows, start_id) is called on every appended batch (generators
    included) and may return False to abort the run; the search stops as
    soon as target is generated.  Caps end the run with capped=True rather
    than raising, so callers can map them to their own verdicts.
    """
    n = algebra.size
    if n >= 1 << 15:
        raise ValueError("closure kernel supports universes below 2^15 elements")
    store = _Store(n, width)
    parents: list | None = [] if track_parents else None
    tables = algebra.table_arrays()
    target_row = None
    if target is not None:
        target_row = np.asarray(target, dtype=np.int16).reshape(1, width)

    state = {
        "target_index": None,
        "aborted": False,
        "capped": False,
        "combos": 0,
    }

    def push(rows: np.ndarray, describe) -> bool:
        """Append a batch; returns False when the run should stop."""
        start = store.count
        keep = store.add_batch(rows)
        if len(keep) == 0:
            return True
        kept = store.rows()[start : store.count]
        if parents is not None:
            for pos in keep:
                parents.append(describe(int(pos)))
        if target_row is not None and state["target_index"] is None:
            hit = np.flatnonzero((kept == target_row).all(axis=1))
            if len(hit):
                state["target_index"] = start + int(hit[0])
                return False
        if on_batch is not None and not on_batch(kept, start):
            state["aborted"] = True
            return False
        if element_cap is not None and store.count > element_cap:
            state["capped"] = True
            return False
        return True

    gen_rows = np.asarray(list(generators), dtype=np.int16).reshape(-1, width)
    keep_going = push(gen_rows, lambda pos: ("gen", pos))
    if keep_going:
        for oi, op in enumerate(algebra.operations):
            if op.arity == 0:
                row = np.full((1, width), op.table[0], dtype=np.int16)
                if not push(row, lambda pos: ("const", oi)):
                    keep_going = False
                    break

    chunk = max(1024, 2_000_000 // max(width, 1))
    f0 = 0
    while keep_going and f0 < store.count:
        f1 = store.count
        for oi, op in enumerate(algebra.operations):
            k = op.arity
            if k == 0:
                continue
            tab = tables[oi]
            for pos in range(k):
                sizes = [f0] * pos + [f1 - f0] + [f1] * (k - 1 - pos)
                total = 1
                for s in sizes:
                    total *= s
                if total == 0:
                    continue
                lo = 0
                while lo < total and keep_going:
                    hi = min(lo + chunk, total)
                    lin = np.arange(lo, hi, dtype=np.int64)
                    ids = []
                    rem = lin
                    for s in reversed(sizes):
                        ids.append(rem % s)
                        rem = rem // s
                    ids.reverse()
                    ids[pos] = ids[pos] + f0
                    state["combos"] += hi - lo
                    if combo_cap is not None and state["combos"] > combo_cap:
                        state["capped"] = True
                        keep_going = False
                        break
                    rows = store.rows()
                    acc = rows[ids[0]].astype(np.int64)
                    for t in range(1, k):
                        acc *= n
                        acc += rows[ids[t]]
                    vals = tab[acc].astype(np.int16)
                    if parents is not None:
                        arg_ids = [a.copy() for a in ids]

                        def describe(p, _args=arg_ids, _oi=oi):
                            return (_oi, tuple(int(a[p]) for a in _args))

                    else:
                        describe = lambda p: None  # noqa: E731
                    if not push(vals, describe):
                        keep_going = False
                    lo = hi
                if not keep_going:
                    break
            if not keep_going:
                break
        f0 = f1

    return PowerClosure(
        elements=store.rows().copy(),
        parents=parents,
        target_index=state["target_index"],
        capped=state["capped"],
        combos_used=state["combos"],
        aborted=state["aborted"],
    )
