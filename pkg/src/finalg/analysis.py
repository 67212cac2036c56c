"""Commutator-condition analysis: neutrabelian and split-at-0 verdicts,
their supporting invariant suites, Maltsev-term detection, and the
equivalence check between the two conditions.

An SI algebra with monolith centralizer comparable to everything, trivial
commutators below the centralizer and neutral behavior elsewhere is called
a neutrabelian SI; an algebra is neutrabelian when every SI quotient is.
The split-at-0 condition asks every relevant triple (meet irreducible with
abelian prime quotient, plus the centralizer of that quotient) to factor
as a zero-meet join of an abelian congruence and one below the irreducible.
For algebras in congruence modular varieties the two conditions agree;
every CM-certified analysis asserts that agreement.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .algebra import (
    FiniteAlgebra,
    enumerate_subuniverses,
    induced_algebra,
    quotient_algebra,
)
from .closure import close_in_power
from .commutator import CommutatorTable
from .congruence import (
    CongruenceLattice,
    congruence_lattice,
    is_distributive,
    lattice_interval,
    meet_irreducibles,
)
from .errors import (
    GateNotSatisfiedError,
    NotSubdirectlyIrreducibleError,
    TheoremViolationError,
)
from .partition import Partition

DEFAULT_POWER_ELEMENT_CAP = 200_000
DEFAULT_POWER_COMBO_CAP = 20_000_000


def _power_caps():
    return (
        int(os.environ.get("FINALG_MAX_POWER_ELEMENTS", DEFAULT_POWER_ELEMENT_CAP)),
        int(os.environ.get("FINALG_MAX_POWER_COMBOS", DEFAULT_POWER_COMBO_CAP)),
    )


@dataclass(frozen=True)
class Verdict:
    """Boolean verdict with a human-readable failure witness."""

    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RelevantTriple:
    """Completely meet irreducible delta, its unique cover theta, and the
    centralizer nu of theta modulo delta, where theta/delta is abelian."""

    delta: int
    theta: int
    nu: int


@dataclass(frozen=True)
class SplitCertificate:
    """Witness that a relevant triple is split at 0: beta below delta,
    alpha abelian, meeting at 0 and joining to nu."""

    triple: RelevantTriple
    alpha: int
    beta: int
    kappa: int = 0


@dataclass(frozen=True)
class SplitResult:
    ok: bool
    certificates: tuple[SplitCertificate, ...]
    failing: RelevantTriple | None
    mode: str

    def __bool__(self) -> bool:
        return self.ok


class AnalysisContext:
    """Shared lattice + commutator memo for one algebra."""

    def __init__(self, algebra: FiniteAlgebra, lattice=None, table=None):
        self.algebra = algebra
        self.lattice = lattice if lattice is not None else congruence_lattice(algebra)
        self.table = table if table is not None else CommutatorTable(algebra, self.lattice)


def _ctx(algebra, lattice, table) -> AnalysisContext:
    if isinstance(lattice, AnalysisContext):
        return lattice
    return AnalysisContext(algebra, lattice, table)


def monolith(lattice: CongruenceLattice) -> int:
    """The unique atom; errors unless the algebra is subdirectly irreducible."""
    atoms = lattice.atom_indices
    if len(atoms) != 1:
        raise NotSubdirectlyIrreducibleError(len(atoms))
    return atoms[0]


def is_neutrabelian_si(algebra, lattice=None, table=None) -> Verdict:
    """Direct check of the neutrabelian SI conditions on the algebra itself."""
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    mu = monolith(L)
    nu = T.centralizer(L.zero_index, mu)
    for x in range(L.size):
        if not (L.is_leq(x, nu) or L.is_leq(nu, x)):
            return Verdict(
                False,
                f"comparability: {L.pstr(x)} is incomparable with the monolith "
                f"centralizer {L.pstr(nu)}",
            )
    for a in range(L.size):
        for b in range(L.size):
            value = T.delta(a, b)
            if L.is_leq(a, nu) and L.is_leq(b, nu):
                if value != L.zero_index:
                    return Verdict(
                        False,
                        f"(C4): [{L.pstr(a)}, {L.pstr(b)}] = {L.pstr(value)} != 0 "
                        f"below the centralizer {L.pstr(nu)}",
                    )
            elif value != L.meet(a, b):
                return Verdict(
                    False,
                    f"(C3): [{L.pstr(a)}, {L.pstr(b)}] = {L.pstr(value)} != "
                    f"{L.pstr(L.meet(a, b))}",
                )
    return Verdict(True)


def neut_char_si(algebra, lattice=None, table=None) -> bool:
    """Equivalent SI characterization: (C1), radical comparable with all
    congruences, radical abelian, neutral above the radical."""
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    monolith(L)  # SI precondition
    if not T.satisfies_c1():
        return False
    rho = T.solvable_radical(L.zero_index)
    for x in range(L.size):
        if not (L.is_leq(x, rho) or L.is_leq(rho, x)):
            return False
    if not T.is_abelian_over(L.zero_index, rho):
        return False
    return T.is_neutral_above(rho)


def _si_quotient_check(ctx: AnalysisContext, delta: int, theta: int) -> Verdict:
    """Neutrabelian-SI conditions for the quotient at a meet irreducible,
    evaluated inside the interval above it: the quotient commutator of
    images is the image of the commutator joined with delta."""
    L, T = ctx.lattice, ctx.table
    interval = lattice_interval(L, delta, L.one_index)
    candidates = [g for g in interval if L.is_leq(T.delta(g, theta), delta)]
    nu = L.join_all(candidates)
    if not L.is_leq(T.delta(nu, theta), delta):
        return Verdict(
            False,
            f"quotient at {L.pstr(delta)}: join of monolith-centralizing "
            "congruences does not centralize the monolith (non-modular behavior)",
        )
    for x in interval:
        if not (L.is_leq(x, nu) or L.is_leq(nu, x)):
            return Verdict(
                False,
                f"quotient at {L.pstr(delta)}: {L.pstr(x)} incomparable with "
                f"monolith centralizer {L.pstr(nu)}",
            )
    for a in interval:
        for b in interval:
            pushed = L.join(T.delta(a, b), delta)
            if L.is_leq(a, nu) and L.is_leq(b, nu):
                if pushed != delta:
                    return Verdict(
                        False,
                        f"quotient at {L.pstr(delta)}: (C4) fails for "
                        f"[{L.pstr(a)}, {L.pstr(b)}]",
                    )
            elif pushed != L.meet(a, b):
                return Verdict(
                    False,
                    f"quotient at {L.pstr(delta)}: (C3) fails for "
                    f"[{L.pstr(a)}, {L.pstr(b)}]",
                )
    return Verdict(True)


def _si_quotient_check_slow(algebra: FiniteAlgebra, delta_part: Partition) -> Verdict:
    """Reference path: materialize the quotient algebra and recompute from
    scratch.  Used by the test suite to validate the interval path."""
    quotient, _ = quotient_algebra(algebra, delta_part)
    verdict = is_neutrabelian_si(quotient)
    if verdict.ok:
        return verdict
    return Verdict(False, f"quotient at {delta_part}: {verdict.witness}")


def is_neutrabelian(algebra, lattice=None, table=None, slow: bool = False) -> Verdict:
    """Every SI quotient (one per completely meet irreducible congruence)
    must be a neutrabelian SI.  Vacuously true without meet irreducibles."""
    ctx = _ctx(algebra, lattice, table)
    L = ctx.lattice
    for delta, theta in meet_irreducibles(L):
        if slow:
            verdict = _si_quotient_check_slow(algebra, L.elements[delta])
        else:
            verdict = _si_quotient_check(ctx, delta, theta)
        if not verdict.ok:
            return verdict
    return Verdict(True)


def relevant_triples(algebra, lattice=None, table=None) -> list[RelevantTriple]:
    """Triples (delta, theta, nu) over the meet irreducibles whose prime
    quotient theta/delta is abelian, i.e. theta <= nu."""
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    out = []
    for delta, theta in meet_irreducibles(L):
        nu = T.centralizer(delta, theta)
        if L.is_leq(theta, nu):
            out.append(RelevantTriple(delta, theta, nu))
    return out


def find_split_at_zero(
    algebra, lattice, triple: RelevantTriple, mode: str = "exhaustive", table=None
):
    """First (alpha, beta) splitting the triple at 0, or None.

    Exhaustive mode scans all pairs in lexicographic (alpha, beta) index
    order and defines the semantics; guided mode fixes beta = [nu, nu] and
    scans alpha below the solvable radical only.
    """
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    zero = L.zero_index
    if mode == "exhaustive":
        beta_pool = [b for b in range(L.size) if L.is_leq(b, triple.delta)]
        for alpha in range(L.size):
            if T.delta(alpha, alpha) != zero:
                continue
            for beta in beta_pool:
                if (
                    L.meet(alpha, beta) == zero
                    and L.join(alpha, beta) == triple.nu
                ):
                    return SplitCertificate(triple, alpha, beta)
        return None
    if mode == "guided":
        beta = T.delta(triple.nu, triple.nu)
        if not L.is_leq(beta, triple.delta):
            return None
        rho = T.solvable_radical(zero)
        for alpha in range(L.size):
            if not L.is_leq(alpha, rho):
                continue
            if (
                L.meet(alpha, beta) == zero
                and L.join(alpha, beta) == triple.nu
                and T.delta(alpha, alpha) == zero
            ):
                return SplitCertificate(triple, alpha, beta)
        return None
    raise ValueError(f"unknown split mode {mode!r}")


def centralizers_split_at_zero(
    algebra, mode: str = "exhaustive", lattice=None, table=None
) -> SplitResult:
    """True iff every relevant triple is split at 0; carries per-triple
    certificates, or the first triple without one."""
    ctx = _ctx(algebra, lattice, table)
    certs = []
    for triple in relevant_triples(algebra, ctx):
        cert = find_split_at_zero(algebra, ctx, triple, mode=mode)
        if cert is None:
            return SplitResult(False, tuple(certs), triple, mode)
        certs.append(cert)
    return SplitResult(True, tuple(certs), None, mode)


def transfer_check(algebra, lattice=None, table=None) -> Verdict:
    """No 3-element interval whose lower covering is nonabelian while the
    upper covering is abelian."""
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    for a in range(L.size):
        for b in L.covers[a]:
            for c in L.covers[b]:
                if len(lattice_interval(L, a, c)) != 3:
                    continue
                lower_abelian = L.is_leq(T.delta(b, b), a)
                upper_abelian = L.is_leq(T.delta(c, c), b)
                if not lower_abelian and upper_abelian:
                    return Verdict(
                        False,
                        f"interval {L.pstr(a)} < {L.pstr(b)} < {L.pstr(c)} is "
                        "nonabelian then abelian",
                    )
    return Verdict(True)


@dataclass
class LemmaSuiteReport:
    checks: dict[str, Verdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.checks.values())

    def __bool__(self) -> bool:
        return self.ok


def lemma_invariant_suite(
    algebra,
    lattice=None,
    table=None,
    *,
    certified: bool | None = None,
    split_result: SplitResult | None = None,
) -> LemmaSuiteReport:
    """Consequence checks that must hold once the algebra is neutrabelian
    or split at 0 and its CM hypothesis is certified; errors out when that
    gate is not met."""
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    if certified is None:
        certified = cm_certification(algebra).certified
    neutrabelian = is_neutrabelian(algebra, ctx)
    if split_result is None:
        split_result = centralizers_split_at_zero(algebra, lattice=ctx)
    if not certified or not (neutrabelian.ok or split_result.ok):
        raise GateNotSatisfiedError(
            "invariant suite requires a CM-certified algebra that is "
            "neutrabelian or has centralizers split at 0"
        )

    checks: dict[str, Verdict] = {}
    zero = L.zero_index
    witness = T.c1_witness()
    checks["c1"] = Verdict(witness is None, witness)
    checks["transfer"] = transfer_check(algebra, ctx)

    rho = T.solvable_radical(zero)
    largest_ok = T.is_abelian_over(zero, rho) and all(
        L.is_leq(g, rho)
        for g in range(L.size)
        if T.is_abelian_over(zero, g)
    )
    checks["radical_largest_abelian"] = Verdict(
        largest_ok, None if largest_ok else f"radical {L.pstr(rho)}"
    )
    neutral_ok = T.is_neutral_above(rho)
    checks["neutral_above_radical"] = Verdict(
        neutral_ok, None if neutral_ok else f"radical {L.pstr(rho)}"
    )

    bad_tau = None
    for tau in range(L.size):
        expected = L.join(rho, tau)
        if T.solvable_radical(tau) != expected:
            bad_tau = f"radical over {L.pstr(tau)} is not radical v tau"
            break
        if not T.is_abelian_over(tau, expected):
            bad_tau = f"interval above {L.pstr(tau)} up to its radical not abelian"
            break
        if not T.is_neutral_above(expected):
            bad_tau = f"interval above the radical of {L.pstr(tau)} not neutral"
            break
    checks["relative_radicals"] = Verdict(bad_tau is None, bad_tau)

    bad_split = None
    for cert in split_result.certificates:
        nu_sq = T.delta(cert.triple.nu, cert.triple.nu)
        for tau, _ in meet_irreducibles(L):
            if L.is_leq(cert.alpha, tau):
                continue
            if L.is_leq(nu_sq, tau) and L.is_leq(
                cert.triple.nu, L.join(tau, rho)
            ):
                continue
            bad_split = (
                f"meet irreducible {L.pstr(tau)} neither contains alpha "
                f"{L.pstr(cert.alpha)} nor [nu, nu] with tau v radical above nu"
            )
            break
        if bad_split:
            break
    checks["meet_irreducible_dichotomy"] = Verdict(bad_split is None, bad_split)

    if T.is_neutral_above(zero):
        distr = is_distributive(L)
        checks["neutral_distributive"] = Verdict(
            distr, None if distr else "neutral but congruence lattice not distributive"
        )
    return LemmaSuiteReport(checks)


# ----- Maltsev term detection ---------------------------------------------


def has_maltsev_basic_op(algebra: FiniteAlgebra):
    """Name of a basic ternary operation m with m(x,y,y) = x = m(y,y,x)."""
    n = algebra.size
    for op in algebra.operations:
        if op.arity != 3:
            continue
        tab = op.table
        ok = True
        for x in range(n):
            for y in range(n):
                if tab[(x * n + y) * n + y] != x or tab[(y * n + y) * n + x] != x:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return op.name
    return None


@dataclass(frozen=True)
class MaltsevResult:
    """found is True/False for a definite answer, None when a resource cap
    stopped the search (verdict unknown)."""

    found: bool | None
    term: tuple | None = None

    @property
    def term_str(self) -> str | None:
        return term_to_str(self.term) if self.term is not None else None


def term_to_str(term) -> str:
    kind = term[0]
    if kind == "var":
        return term[1]
    if kind == "const":
        return term[1]
    _, name, children = term
    return f"{name}({', '.join(term_to_str(c) for c in children)})"


def evaluate_term(algebra: FiniteAlgebra, term, env: dict[str, int]) -> int:
    kind = term[0]
    if kind == "var":
        return env[term[1]]
    if kind == "const":
        return algebra.operations[algebra.op_index(term[1])].table[0]
    _, name, children = term
    op = algebra.operations[algebra.op_index(name)]
    idx = 0
    for child in children:
        idx = idx * algebra.size + evaluate_term(algebra, child, env)
    return op.table[idx]


def maltsev_term_exists(algebra: FiniteAlgebra, want_term: bool = True) -> MaltsevResult:
    """Search for a ternary term m with m(x,y,y) = x = m(y,y,x).

    The three generators list, per pair (a, b) of elements, the arguments
    the two identities feed to the term, once for m(a,b,b) and once for
    m(b,b,a); the term exists iff the vector that answers `a` everywhere
    lies in the generated subpower.
    """
    n = algebra.size
    width = 2 * n * n
    g1 = np.empty(width, dtype=np.int16)
    g2 = np.empty(width, dtype=np.int16)
    g3 = np.empty(width, dtype=np.int16)
    target = np.empty(width, dtype=np.int16)
    for a in range(n):
        for b in range(n):
            i = a * n + b
            j = n * n + i
            g1[i], g2[i], g3[i] = a, b, b      # arguments of m(a, b, b)
            g1[j], g2[j], g3[j] = b, b, a      # arguments of m(b, b, a)
            target[i] = target[j] = a
    element_cap, combo_cap = _power_caps()
    result = close_in_power(
        algebra,
        width,
        [g1, g2, g3],
        target=target,
        track_parents=want_term,
        element_cap=element_cap,
        combo_cap=combo_cap,
    )
    if result.target_index is not None:
        term = None
        if want_term:
            term = _reconstruct_term(algebra, result.parents, result.target_index)
        return MaltsevResult(True, term)
    if result.capped:
        return MaltsevResult(None)
    return MaltsevResult(False)


def _reconstruct_term(algebra, parents, index):
    memo: dict[int, tuple] = {}
    variables = ("x", "y", "z")

    def build(i: int) -> tuple:
        hit = memo.get(i)
        if hit is not None:
            return hit
        node = parents[i]
        if node[0] == "gen":
            term = ("var", variables[node[1]])
        elif node[0] == "const":
            term = ("const", algebra.operations[node[1]].name)
        else:
            op_index, args = node
            term = (
                "op",
                algebra.operations[op_index].name,
                tuple(build(a) for a in args),
            )
        memo[i] = term
        return term

    return build(index)


# ----- hereditary checks and dualizability ---------------------------------


def hereditary_neutrabelian(algebra: FiniteAlgebra) -> Verdict:
    """is_neutrabelian on the algebra induced on every subuniverse."""
    for sub in enumerate_subuniverses(algebra):
        verdict = is_neutrabelian(induced_algebra(algebra, sub))
        if not verdict.ok:
            return Verdict(
                False, f"subuniverse {sorted(sub)}: {verdict.witness}"
            )
    return Verdict(True)


def dualizability_verdict(
    algebra: FiniteAlgebra,
    *,
    maltsev: MaltsevResult | None = None,
    hereditary: Verdict | None = None,
    certified: bool | None = None,
) -> str:
    """One-directional sufficient criterion: a Maltsev term plus the
    hereditary neutrabelian property yields "dualizable"; a hereditary
    failure under a certified CM hypothesis yields "not-by-this-criterion";
    anything else is "unknown"."""
    if maltsev is None:
        maltsev = maltsev_term_exists(algebra, want_term=False)
    if hereditary is None:
        hereditary = hereditary_neutrabelian(algebra)
    if certified is None:
        certified = cm_certification(algebra).certified
    if maltsev.found is True and hereditary.ok:
        return "dualizable"
    if not hereditary.ok and certified:
        return "not-by-this-criterion"
    return "unknown"


# ----- CM certification and the equivalence check ---------------------------


@dataclass(frozen=True)
class CMCertificate:
    """How the congruence-modular-variety hypothesis was established.

    Modularity of Con(A) alone never certifies; a Maltsev witness (basic
    operation or derived term) or an explicit user assertion is required.
    """

    certified: bool
    kind: str | None = None  # "basic-op" | "term" | "assertion"
    detail: str | None = None


def cm_certification(algebra: FiniteAlgebra, assert_cm: bool = False) -> CMCertificate:
    basic = has_maltsev_basic_op(algebra)
    if basic is not None:
        return CMCertificate(True, "basic-op", basic)
    if assert_cm:
        return CMCertificate(True, "assertion", "user assertion")
    result = maltsev_term_exists(algebra)
    if result.found is True:
        return CMCertificate(True, "term", result.term_str)
    return CMCertificate(False)


@dataclass(frozen=True)
class EquivalenceOutcome:
    verdict: str  # agree | disagree | uncertified-agree | uncertified-disagree
    neutrabelian: Verdict
    split: SplitResult
    certified: bool
    dump: str | None = None


def _disagreement_dump(ctx: AnalysisContext, neutrabelian, split) -> str:
    L, T = ctx.lattice, ctx.table
    lines = [f"algebra {ctx.algebra.name} size {ctx.algebra.size}"]
    lines.append("congruences:")
    for i, p in enumerate(L.elements):
        lines.append(f"  {i}: {p}")
    lines.append("commutator table (pair-algebra route):")
    for a in range(L.size):
        row = " ".join(str(T.delta(a, b)) for b in range(L.size))
        lines.append(f"  {a}: {row}")
    lines.append(f"neutrabelian: {neutrabelian.ok} witness={neutrabelian.witness}")
    lines.append(f"split-at-0: {split.ok} failing={split.failing}")
    return "\n".join(lines)


def verify_equivalence(
    algebra,
    lattice=None,
    table=None,
    *,
    certified: bool | None = None,
    mode: str = "exhaustive",
) -> EquivalenceOutcome:
    """Compare the neutrabelian and split-at-0 verdicts.  Certified
    disagreement is the fuzz target and comes with a full dump."""
    ctx = _ctx(algebra, lattice, table)
    if certified is None:
        certified = cm_certification(algebra).certified
    neutrabelian = is_neutrabelian(algebra, ctx)
    split = centralizers_split_at_zero(algebra, mode=mode, lattice=ctx)
    agree = neutrabelian.ok == split.ok
    verdict = ("" if certified else "uncertified-") + ("agree" if agree else "disagree")
    dump = None if agree else _disagreement_dump(ctx, neutrabelian, split)
    return EquivalenceOutcome(verdict, neutrabelian, split, certified, dump)


# ----- full analysis reports -------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    """Deterministic, serializable summary of one algebra's analysis."""

    algebra: str
    size: int
    cm_certified: bool
    cm_witness_kind: str | None
    cm_witness: str | None
    con_size: int
    modular: bool
    neutrabelian: bool
    neutrabelian_witness: str | None
    split_at_zero: bool
    split_mode: str
    split_certificates: tuple
    split_failing_triple: str | None
    radical: str
    c1: bool
    transfer: bool
    theorem: str
    hereditary: bool | None = None
    dualizability: str | None = None


def _certificate_record(L: CongruenceLattice, cert: SplitCertificate) -> tuple:
    return (
        ("delta", L.pstr(cert.triple.delta)),
        ("theta", L.pstr(cert.triple.theta)),
        ("nu", L.pstr(cert.triple.nu)),
        ("alpha", L.pstr(cert.alpha)),
        ("beta", L.pstr(cert.beta)),
    )


def analyze(
    algebra: FiniteAlgebra,
    *,
    assert_cm: bool = False,
    mode: str = "exhaustive",
    hereditary: bool = False,
    slow_quotients: bool = False,
    lattice=None,
    table=None,
) -> AnalysisReport:
    """Full analysis of one algebra.

    Raises TheoremViolationError when a CM-certified algebra produces
    disagreeing neutrabelian and split-at-0 verdicts; that state is an
    artifact bug and is never reported silently.
    """
    ctx = _ctx(algebra, lattice, table)
    L, T = ctx.lattice, ctx.table
    cert = cm_certification(algebra, assert_cm=assert_cm)
    neutrabelian = is_neutrabelian(algebra, ctx, slow=slow_quotients)
    split = centralizers_split_at_zero(algebra, mode=mode, lattice=ctx)
    agree = neutrabelian.ok == split.ok
    if cert.certified and not agree:
        dump = _disagreement_dump(ctx, neutrabelian, split)
        raise TheoremViolationError(
            f"certified algebra {algebra.name}: neutrabelian={neutrabelian.ok} "
            f"but split-at-0={split.ok}",
            dump=dump,
        )
    theorem = ("" if cert.certified else "uncertified-") + (
        "agree" if agree else "disagree"
    )
    rho = T.solvable_radical(L.zero_index)
    hered: Verdict | None = None
    dual: str | None = None
    if hereditary:
        maltsev = maltsev_term_exists(algebra, want_term=False)
        hered = hereditary_neutrabelian(algebra)
        dual = dualizability_verdict(
            algebra, maltsev=maltsev, hereditary=hered, certified=cert.certified
        )
    failing = None
    if split.failing is not None:
        failing = (
            f"delta={L.pstr(split.failing.delta)} "
            f"theta={L.pstr(split.failing.theta)} nu={L.pstr(split.failing.nu)}"
        )
    return AnalysisReport(
        algebra=algebra.name,
        size=algebra.size,
        cm_certified=cert.certified,
        cm_witness_kind=cert.kind,
        cm_witness=cert.detail,
        con_size=L.size,
        modular=L.modular,
        neutrabelian=neutrabelian.ok,
        neutrabelian_witness=neutrabelian.witness,
        split_at_zero=split.ok,
        split_mode=mode,
        split_certificates=tuple(_certificate_record(L, c) for c in split.certificates),
        split_failing_triple=failing,
        radical=L.pstr(rho),
        c1=T.satisfies_c1(),
        transfer=transfer_check(algebra, ctx).ok,
        theorem=theorem,
        hereditary=None if hered is None else hered.ok,
        dualizability=dual,
    )
