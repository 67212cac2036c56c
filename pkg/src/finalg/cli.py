"""Command line interface.

Exit codes: 0 all checks pass, 1 usage or parse error, 2 resource cap,
3 disagreement of the two certified verdicts (reserved; must never occur
on a correct build).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from .analysis import (
    AnalysisContext,
    analyze,
    cm_certification,
    lemma_invariant_suite,
    maltsev_term_exists,
    verify_equivalence,
)
from .algebra import enumerate_subuniverses
from .congruence import congruence_lattice
from .dot import export_lattice_dot
from .errors import (
    AlgebraParseError,
    FinalgError,
    GateNotSatisfiedError,
    ResourceCapError,
    TheoremViolationError,
)
from .fixtures import builtin_fixtures, fixture
from .fuzz import ALL_CHECKS, FuzzConfig, run_fuzz_campaign
from .io import load_algebra


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 by default; 2 is the cap code
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path: str):
    if not os.path.exists(path):
        try:
            return fixture(path)
        except KeyError:
            raise AlgebraParseError(f"no such file or fixture: {path}") from None
    return load_algebra(path)


def _emit_report(report, as_json: bool):
    data = dataclasses.asdict(report)
    if as_json:
        print(json.dumps(data, sort_keys=True))
        return
    width = max(len(k) for k in data)
    for key, value in data.items():
        if value is None:
            continue
        if key == "split_certificates":
            value = "; ".join(
                " ".join(f"{k}={v}" for k, v in cert) for cert in value
            ) or "none"
        print(f"{key.replace('_', '-'):<{width}}  {value}")


def _cmd_analyze(args) -> int:
    algebra = _load(args.file)
    report = analyze(
        algebra,
        assert_cm=args.assert_cm,
        mode=args.mode,
        hereditary=args.hereditary,
        slow_quotients=args.slow_quotients,
    )
    _emit_report(report, args.json)
    return 0


def _cmd_verify(args) -> int:
    algebra = _load(args.file)
    ctx = AnalysisContext(algebra)
    cert = cm_certification(algebra, assert_cm=args.assert_cm)
    failures = 0

    def line(name: str, ok: bool, detail: str = ""):
        nonlocal failures
        if not ok:
            failures += 1
        tail = f"  {detail}" if detail else ""
        print(f"{'PASS' if ok else 'FAIL'}  {name}{tail}")

    outcome = verify_equivalence(algebra, ctx, certified=cert.certified)
    line("equivalence", "disagree" not in outcome.verdict, outcome.verdict)
    L, T = ctx.lattice, ctx.table
    mismatch = None
    for a in range(L.size):
        for b in range(L.size):
            if T.delta(a, b) != T.oracle(a, b):
                mismatch = f"({L.pstr(a)}, {L.pstr(b)})"
                break
        if mismatch:
            break
    line("commutator-cross-oracle", mismatch is None, mismatch or "")
    bounds = all(
        L.is_leq(T.delta(a, b), L.meet(a, b))
        and T.delta(a, b) == T.delta(b, a)
        for a in range(L.size)
        for b in range(L.size)
    )
    line("commutator-bounds-and-symmetry", bounds)
    additive = all(
        T.delta(L.join(a, c), b) == L.join(T.delta(a, b), T.delta(c, b))
        for a in range(L.size)
        for b in range(L.size)
        for c in range(L.size)
    )
    line("commutator-additivity", additive)
    try:
        suite = lemma_invariant_suite(algebra, ctx, certified=cert.certified)
        bad = {k: v.witness for k, v in suite.checks.items() if not v.ok}
        line("lemma-suite", suite.ok, str(bad) if bad else "")
    except GateNotSatisfiedError:
        print("SKIP  lemma-suite  (gate not met)")
    return 3 if failures else 0


def _cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        seed=args.seed,
        count=args.count,
        size_min=args.size_min,
        size_max=args.size_max,
        extra_ops=args.extra_ops,
        extra_arity=args.extra_arity,
    )
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    for c in checks:
        if c not in ALL_CHECKS:
            raise AlgebraParseError(f"unknown check {c!r}; choose from {ALL_CHECKS}")
    summary = run_fuzz_campaign(cfg, checks=checks, dump_dir=args.dump_dir)
    if args.json:
        for record in summary.records():
            print(json.dumps(record, sort_keys=True))
    else:
        print(
            f"fuzz seed={cfg.seed} count={summary.total} checks={','.join(checks)} "
            f"failures={len(summary.failures)} capped={len(summary.capped)} "
            f"time={summary.duration_s:.1f}s"
        )
        hist = " ".join(f"{k}:{v}" for k, v in sorted(summary.con_histogram.items()))
        print(f"con-size histogram  {hist}")
        for f in summary.failures:
            print(f"FAIL {f['check']} {f['algebra']}: {f['detail']}")
    return summary.exit_code


def _cmd_maltsev(args) -> int:
    algebra = _load(args.file)
    result = maltsev_term_exists(algebra)
    if args.json:
        print(
            json.dumps(
                {"algebra": algebra.name, "found": result.found, "term": result.term_str}
            )
        )
    else:
        if result.found is True:
            print(f"yes  {result.term_str}")
        elif result.found is False:
            print("no")
        else:
            print("unknown (resource cap)")
    return 0


def _cmd_subalgebras(args) -> int:
    algebra = _load(args.file)
    subs = enumerate_subuniverses(algebra)
    for s in subs:
        print("{" + ", ".join(str(x) for x in sorted(s)) + "}")
    print(f"total {len(subs)}")
    return 0


def _cmd_lattice_dot(args) -> int:
    algebra = _load(args.file)
    sys.stdout.write(export_lattice_dot(algebra, annotations=not args.plain))
    return 0


def _cmd_fixtures(args) -> int:
    rows = []
    for algebra in builtin_fixtures():
        lattice = congruence_lattice(algebra)
        sig = ",".join(f"{op.name}/{op.arity}" for op in algebra.operations) or "-"
        rows.append((algebra.name, algebra.size, sig, lattice.size))
    if args.json:
        for name, size, sig, con in rows:
            print(json.dumps({"name": name, "size": size, "ops": sig, "con_size": con}))
    else:
        print(f"{'name':<8}{'size':<6}{'con':<5}ops")
        for name, size, sig, con in rows:
            print(f"{name:<8}{size:<6}{con:<5}{sig}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="finalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help="algebra file path or builtin fixture name")

    p = sub.add_parser("analyze", help="full analysis of one algebra")
    add_file(p)
    p.add_argument("--assert-cm", action="store_true", help="trust the CM hypothesis")
    p.add_argument("--hereditary", action="store_true", help="also analyze subalgebras")
    p.add_argument("--mode", choices=("exhaustive", "guided"), default="exhaustive")
    p.add_argument("--slow-quotients", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="equivalence + invariant checks for one algebra")
    add_file(p)
    p.add_argument("--assert-cm", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="run a fuzz campaign")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--size-min", type=int, default=2)
    p.add_argument("--size-max", type=int, default=4)
    p.add_argument("--extra-ops", type=int, default=1)
    p.add_argument("--extra-arity", type=int, default=2)
    p.add_argument("--dump-dir", default="fuzz-failures")
    p.add_argument("--checks", default="", help=f"comma list from {','.join(ALL_CHECKS)}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("maltsev", help="search for a Maltsev term")
    add_file(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_maltsev)

    p = sub.add_parser("subalgebras", help="enumerate subuniverses")
    add_file(p)
    p.set_defaults(func=_cmd_subalgebras)

    p = sub.add_parser("lattice-dot", help="DOT export of the congruence lattice")
    add_file(p)
    p.add_argument("--plain", action="store_true", help="no annotations")
    p.set_defaults(func=_cmd_lattice_dot)

    p = sub.add_parser("fixtures", help="list builtin fixtures")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except AlgebraParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 2
    except TheoremViolationError as exc:
        print(f"THEOREM-VIOLATION: {exc}", file=sys.stderr)
        if exc.dump:
            print(exc.dump, file=sys.stderr)
        return 3
    except FinalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
