from __future__ import annotations

import pytest

from finalg.analysis import analyze
from finalg.congruence import congruence_lattice
from finalg.fuzz import (
    FuzzConfig,
    fuzz_corpus,
    random_maltsev_algebra,
    run_fuzz_campaign,
)
from finalg.io import parse_algebra, serialize_algebra


def test_config_validation():
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, size_min=1)
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, size_min=3, size_max=2)
    with pytest.raises(ValueError):
        FuzzConfig(seed=1, extra_arity=3)


def test_maltsev_cells_forced():
    cfg = FuzzConfig(seed=11, count=20, size_min=2, size_max=4)
    for i in range(20):
        alg = random_maltsev_algebra(cfg, i)
        n = alg.size
        m = alg.operations[0]
        assert m.name == "m" and m.arity == 3
        for x in range(n):
            for y in range(n):
                assert m.table[(x * n + y) * n + y] == x
                assert m.table[(y * n + y) * n + x] == x


def test_determinism():
    cfg = FuzzConfig(seed=42, count=10)
    assert fuzz_corpus(cfg) == fuzz_corpus(cfg)
    other = FuzzConfig(seed=43, count=10)
    assert fuzz_corpus(cfg) != fuzz_corpus(other)


def test_maltsev_implies_modular_lattice():
    """A basic Maltsev operation forces a modular congruence lattice."""
    cfg = FuzzConfig(seed=9, count=30, size_min=2, size_max=4)
    for alg in fuzz_corpus(cfg):
        assert congruence_lattice(alg).modular, alg.name


def test_campaign_small_all_checks(tmp_path):
    cfg = FuzzConfig(seed=1, count=15, size_min=2, size_max=4)
    summary = run_fuzz_campaign(cfg, dump_dir=str(tmp_path))
    assert summary.total == 15
    assert summary.failures == []
    assert summary.capped == []
    assert summary.exit_code == 0
    assert sum(summary.con_histogram.values()) == 15
    records = summary.records()
    assert records[0]["record"] == "summary"


def test_equivalence_on_nonsimple_products():
    """Products of random Maltsev algebras are CM with guaranteed proper
    congruences (the projection kernels), so the equivalence check runs on
    non-simple lattices too."""
    from finalg.analysis import AnalysisContext, verify_equivalence
    from finalg.analysis import centralizers_split_at_zero
    from conftest import direct_product

    cfg = FuzzConfig(seed=31, count=40, size_min=2, size_max=2)
    nonsimple = 0
    for i in range(0, 40, 2):
        a = random_maltsev_algebra(cfg, i)
        b = random_maltsev_algebra(cfg, i + 1)
        prod = direct_product(a, b, f"prod_{i}")
        ctx = AnalysisContext(prod)
        assert ctx.lattice.size >= 4  # both projection kernels are proper
        if len(ctx.lattice.atom_indices) != 1:
            nonsimple += 1
        out = verify_equivalence(prod, ctx)
        assert out.verdict == "agree", (i, out.dump)
        guided = centralizers_split_at_zero(prod, mode="guided", lattice=ctx)
        assert guided.ok == out.split.ok, i
        # cross-oracle stays exact on the product lattice
        T, L = ctx.table, ctx.lattice
        for x in range(L.size):
            for y in range(L.size):
                assert T.delta(x, y) == T.oracle(x, y), (i, x, y)
    assert nonsimple > 0


def test_time_budget_marks_items_capped(monkeypatch):
    monkeypatch.setenv("FINALG_TIME_BUDGET", "0.000000001")
    cfg = FuzzConfig(seed=2, count=3)
    summary = run_fuzz_campaign(cfg, checks=("equivalence",))
    assert len(summary.capped) == 3
    assert summary.exit_code == 2


def test_replay_reproduces_reports():
    cfg = FuzzConfig(seed=7, count=10, size_min=2, size_max=4)
    for i in range(cfg.count):
        alg = random_maltsev_algebra(cfg, i)
        replayed = parse_algebra(serialize_algebra(alg))
        assert replayed == alg
        assert analyze(alg) == analyze(replayed)
