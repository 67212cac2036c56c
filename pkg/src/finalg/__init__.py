"""Congruence lattices, modular commutators, and commutator-condition
analysis for finite algebras given as operation tables."""

from .algebra import (
    FiniteAlgebra,
    Operation,
    enumerate_subuniverses,
    evaluate,
    induced_algebra,
    pair_algebra,
    quotient_algebra,
    subuniverse_closure,
)
from .analysis import (
    AnalysisReport,
    MaltsevResult,
    RelevantTriple,
    SplitCertificate,
    SplitResult,
    Verdict,
    analyze,
    centralizers_split_at_zero,
    cm_certification,
    dualizability_verdict,
    find_split_at_zero,
    hereditary_neutrabelian,
    is_neutrabelian,
    is_neutrabelian_si,
    lemma_invariant_suite,
    maltsev_term_exists,
    monolith,
    neut_char_si,
    relevant_triples,
    transfer_check,
    verify_equivalence,
)
from .commutator import (
    CommutatorTable,
    centrality_holds,
    centralizer,
    commutator_delta,
    commutator_oracle,
    derived_series,
    is_abelian_over,
    is_neutral_above,
    satisfies_c1,
    solvable_radical,
)
from .congruence import (
    CongruenceLattice,
    congruence_lattice,
    generate_congruence,
    lattice_interval,
    meet_irreducibles,
)
from .dot import export_lattice_dot
from .fixtures import builtin_fixtures, fixture
from .fuzz import FuzzConfig, fuzz_corpus, random_maltsev_algebra, run_fuzz_campaign
from .io import load_algebra, parse_algebra, save_algebra, serialize_algebra
from .partition import Partition

__all__ = [
    "AnalysisReport",
    "CommutatorTable",
    "CongruenceLattice",
    "FiniteAlgebra",
    "FuzzConfig",
    "MaltsevResult",
    "Operation",
    "Partition",
    "RelevantTriple",
    "SplitCertificate",
    "SplitResult",
    "Verdict",
    "analyze",
    "builtin_fixtures",
    "centralizer",
    "centralizers_split_at_zero",
    "centrality_holds",
    "cm_certification",
    "commutator_delta",
    "commutator_oracle",
    "congruence_lattice",
    "derived_series",
    "dualizability_verdict",
    "enumerate_subuniverses",
    "evaluate",
    "export_lattice_dot",
    "find_split_at_zero",
    "fixture",
    "fuzz_corpus",
    "generate_congruence",
    "hereditary_neutrabelian",
    "induced_algebra",
    "is_abelian_over",
    "is_neutrabelian",
    "is_neutrabelian_si",
    "is_neutral_above",
    "lattice_interval",
    "lemma_invariant_suite",
    "load_algebra",
    "maltsev_term_exists",
    "meet_irreducibles",
    "monolith",
    "neut_char_si",
    "pair_algebra",
    "parse_algebra",
    "quotient_algebra",
    "random_maltsev_algebra",
    "relevant_triples",
    "run_fuzz_campaign",
    "satisfies_c1",
    "save_algebra",
    "serialize_algebra",
    "solvable_radical",
    "subuniverse_closure",
    "transfer_check",
    "verify_equivalence",
]
