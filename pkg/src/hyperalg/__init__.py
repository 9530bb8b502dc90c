"""Hypergraphs defined by finite groups and semigroups.

Cayley-table algebras, the commuting / power / enhanced power / generating
/ identity hypergraph constructions, divisor-chain counting, matroid
exchange checking, and a registry-driven verification suite.
"""

from .algebra import (
    FiniteAlgebra,
    GuardExceeded,
    SpecParseError,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    frattini_subgroup,
    from_spec,
    full_transformation,
    klein,
    mult_mod,
    quaternion,
    quotient_group,
    symmetric,
    zero_and_zero_divisors,
)
from .constructions import (
    HYPERGRAPH_KINDS,
    CheckReport,
    IncompatibleKindError,
    build_hypergraph,
    commuting_graph,
    commuting_hypergraph,
    enhanced_power_hypergraph,
    epower_pairwise_probe,
    generating_hypergraph,
    identity_hypergraph,
    power_graph,
    power_hypergraph,
    rho_partition,
    verify_component_structure,
    verify_degree_not_two,
)
from .hypergraph import (
    ComponentPartition,
    Graph,
    Hypergraph,
    LooseWalk,
    SearchBudgetExceeded,
    StrictWalk,
    connected_components,
    find_hamiltonian_cycle_loose,
    find_hamiltonian_cycle_strict,
    is_connected,
    maximal_cliques,
    neighborhood_coincidence,
    neighborhoods_coincide,
)
from .matroid import (
    BurnsideReport,
    ExchangeReport,
    ReferenceMatroid,
    burnside_correspondence,
    check_exchange_axiom,
    is_basis_family,
    match_s3_model,
    reference_matroid,
    verify_exchange_witness,
)
from .numtheory import (
    chain_edge_cardinality,
    count_chains_from_exponents,
    count_maximal_chains,
    euler_phi,
    factorize,
    maximal_chains,
    predicted_power_hypergraph,
    smallest_n_exceeding_chain_count,
)
from .registry import build_registry, default_registry
from .verify import THEOREMS, Verdict, run_theorems, theorem_ids

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
