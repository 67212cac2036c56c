"""Seeded generation of congruence-modular-by-construction algebras and
the fuzzing campaign that checks the analysis machinery against them."""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field

from .algebra import FiniteAlgebra, Operation, quotient_algebra
from .analysis import (
    AnalysisContext,
    cm_certification,
    centralizers_split_at_zero,
    lemma_invariant_suite,
    verify_equivalence,
)
from .commutator import CommutatorTable
from .congruence import congruence_lattice
from .errors import GateNotSatisfiedError, ResourceCapError
from .io import save_algebra
from .partition import Partition

ALL_CHECKS = ("equivalence", "modes", "cross_oracle", "homomorphism", "lemma_suite")


@dataclass(frozen=True)
class FuzzConfig:
    """Identical seed and config produce the identical corpus within a
    release; the seed is recorded in every summary for replay."""

    seed: int
    count: int = 100
    size_min: int = 2
    size_max: int = 4
    extra_ops: int = 1
    extra_arity: int = 2

    def __post_init__(self):
        if self.size_min < 2:
            raise ValueError("size_min must be at least 2")
        if self.size_max < self.size_min:
            raise ValueError("size_max must be at least size_min")
        if self.extra_arity not in (1, 2):
            raise ValueError("extra operations are capped at arity 2")
        if self.extra_ops < 0 or self.count < 0:
            raise ValueError("counts must be nonnegative")


def random_maltsev_algebra(cfg: FuzzConfig, index: int = 0) -> FiniteAlgebra:
    """One random algebra whose first operation is a forced Maltsev
    operation: m(x,y,y) = x = m(y,y,x), all other cells uniform."""
    rng = random.Random(cfg.seed * 1_000_003 + index)
    n = rng.randint(cfg.size_min, cfg.size_max)
    table = [rng.randrange(n) for _ in range(n**3)]
    for x in range(n):
        for y in range(n):
            table[(x * n + y) * n + y] = x
            table[(y * n + y) * n + x] = x
    ops = [Operation("m", 3, tuple(table))]
    for e in range(cfg.extra_ops):
        k = cfg.extra_arity
        ops.append(
            Operation(f"f{e + 1}", k, tuple(rng.randrange(n) for _ in range(n**k)))
        )
    return FiniteAlgebra(f"fuzz_{cfg.seed}_{index}", n, ops)


def fuzz_corpus(cfg: FuzzConfig) -> list[FiniteAlgebra]:
    return [random_maltsev_algebra(cfg, i) for i in range(cfg.count)]


@dataclass
class CampaignSummary:
    config: FuzzConfig
    checks: tuple[str, ...]
    total: int = 0
    con_histogram: dict[int, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    capped: list[str] = field(default_factory=list)
    duration_s: float = 0.0

    @property
    def violations(self) -> list[dict]:
        return [f for f in self.failures if f["check"] == "equivalence"]

    @property
    def exit_code(self) -> int:
        if self.violations:
            return 3
        if self.capped:
            return 2
        return 0

    def records(self) -> list[dict]:
        """Line-delimited machine-readable form."""
        out = [
            {
                "record": "summary",
                "seed": self.config.seed,
                "count": self.config.count,
                "checks": list(self.checks),
                "total": self.total,
                "failures": len(self.failures),
                "capped": len(self.capped),
                "duration_s": round(self.duration_s, 3),
                "con_histogram": {str(k): v for k, v in sorted(self.con_histogram.items())},
            }
        ]
        for f in self.failures:
            out.append({"record": "failure", **f})
        for name in self.capped:
            out.append({"record": "capped", "algebra": name})
        return out


def _check_cross_oracle(ctx: AnalysisContext) -> str | None:
    T, L = ctx.table, ctx.lattice
    for a in range(L.size):
        for b in range(L.size):
            if T.delta(a, b) != T.oracle(a, b):
                return f"delta/oracle mismatch at ({L.pstr(a)}, {L.pstr(b)})"
    return None


def _check_homomorphism(ctx: AnalysisContext, deltas) -> str | None:
    """Quotient commutators must be the images of commutators joined with
    the kernel."""
    A, L, T = ctx.algebra, ctx.lattice, ctx.table
    for d in deltas:
        part = L.elements[d]
        quotient, block_map = quotient_algebra(A, part)
        ql = congruence_lattice(quotient)
        qt = CommutatorTable(quotient, ql)

        def image(x: int) -> int:
            pairs = []
            bo = L.elements[x].block_of
            for u in range(A.size):
                pairs.append((block_map[u], block_map[bo[u]]))
            idx = ql.index_of(Partition.from_pairs(quotient.size, pairs))
            if idx is None:
                raise ResourceCapError("quotient congruence missing from lattice")
            return idx

        above = [x for x in range(L.size) if L.is_leq(d, x)]
        for a in above:
            for b in above:
                direct = qt.delta(image(a), image(b))
                lifted = image(L.join(T.delta(a, b), d))
                if direct != lifted:
                    return (
                        f"homomorphism property fails at delta={L.pstr(d)}, "
                        f"pair ({L.pstr(a)}, {L.pstr(b)})"
                    )
    return None


def run_fuzz_campaign(
    cfg: FuzzConfig,
    checks=ALL_CHECKS,
    dump_dir=None,
    progress=None,
) -> CampaignSummary:
    """Run the configured checks over the generated corpus.

    Disagreeing algebras are written to dump_dir for replay; any
    equivalence failure makes the summary's exit code 3, any resource cap
    makes it 2.
    """
    checks = tuple(checks)
    summary = CampaignSummary(config=cfg, checks=checks)
    budget = float(os.environ.get("FINALG_TIME_BUDGET", "0") or 0)
    started = time.monotonic()
    for index in range(cfg.count):
        algebra = random_maltsev_algebra(cfg, index)
        item_started = time.monotonic()
        failures_before = len(summary.failures)
        try:
            ctx = AnalysisContext(algebra)
            summary.con_histogram[ctx.lattice.size] = (
                summary.con_histogram.get(ctx.lattice.size, 0) + 1
            )
            cert = cm_certification(algebra)
            if "equivalence" in checks:
                outcome = verify_equivalence(algebra, ctx, certified=cert.certified)
                if "disagree" in outcome.verdict:
                    summary.failures.append(
                        {
                            "check": "equivalence",
                            "algebra": algebra.name,
                            "detail": outcome.verdict,
                            "dump": outcome.dump,
                        }
                    )
            if "modes" in checks:
                exhaustive = centralizers_split_at_zero(algebra, lattice=ctx)
                guided = centralizers_split_at_zero(algebra, mode="guided", lattice=ctx)
                if exhaustive.ok != guided.ok:
                    summary.failures.append(
                        {
                            "check": "modes",
                            "algebra": algebra.name,
                            "detail": f"exhaustive={exhaustive.ok} guided={guided.ok}",
                        }
                    )
            if "cross_oracle" in checks:
                detail = _check_cross_oracle(ctx)
                if detail:
                    summary.failures.append(
                        {"check": "cross_oracle", "algebra": algebra.name, "detail": detail}
                    )
            if "homomorphism" in checks:
                rng = random.Random(cfg.seed * 7_777_777 + index)
                pool = list(range(ctx.lattice.size))
                sample = pool if len(pool) <= 3 else sorted(rng.sample(pool, 3))
                detail = _check_homomorphism(ctx, sample)
                if detail:
                    summary.failures.append(
                        {"check": "homomorphism", "algebra": algebra.name, "detail": detail}
                    )
            if "lemma_suite" in checks:
                try:
                    report = lemma_invariant_suite(algebra, ctx, certified=cert.certified)
                    if not report.ok:
                        bad = {k: v.witness for k, v in report.checks.items() if not v.ok}
                        summary.failures.append(
                            {
                                "check": "lemma_suite",
                                "algebra": algebra.name,
                                "detail": str(bad),
                            }
                        )
                except GateNotSatisfiedError:
                    pass
        except ResourceCapError:
            summary.capped.append(algebra.name)
        summary.total += 1
        if budget and time.monotonic() - item_started > budget:
            summary.capped.append(algebra.name)
        if dump_dir is not None and len(summary.failures) > failures_before:
            os.makedirs(dump_dir, exist_ok=True)
            save_algebra(algebra, os.path.join(dump_dir, f"{algebra.name}.alg"))
        if progress is not None:
            progress(index, algebra)
    summary.duration_s = time.monotonic() - started
    return summary
