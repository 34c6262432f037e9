"""Factorization sets, Betti graphs, and Betti elements of Puiseux monoids.

Exact computation for finitely generated monoids; truncation-plus-certificate
semantics for atomized (infinitely generated) monoids.
"""

from .betti import (
    BettiGraph,
    BettiVerdict,
    betti_graph,
    betti_scan_atomized,
    betti_set_fg,
    betti_set_fg_atomgraph_oracle,
    betti_set_geometric,
    classify_atomized,
    is_betti_fg,
    is_uufm_upto,
)
from .errors import (
    DomainError,
    NotAMember,
    PrefixTooSmall,
    TruncatedInput,
    TruncationTooSmall,
    ValidationError,
)
from .factorizations import (
    CanonicalDecomposition,
    Factorization,
    FactorizationSet,
    canonical_decomposition,
    enumerate_atomized,
    enumerate_fg,
    enumerate_geometric,
    gcd_fact,
    member,
)
from .invariants import (
    LengthSet,
    catenary_degree_element,
    catenary_degree_monoid_upto,
    delta_set,
    length_set,
)
from .presentations import (
    Atomized,
    CyclicList,
    FinitelyGenerated,
    Geometric,
    MonoidSpec,
    UnitFractionGeometric,
    atom,
    atoms_up_to_value,
    base_member,
    base_properties,
    construct_geometric,
    construct_grams,
    construct_prop44,
    construct_reciprocal,
    load_spec,
    save_spec,
    spec_from_dict,
    spec_to_dict,
    validate,
)
from .rationals import (
    format_rational,
    make_rational,
    parse_rational,
    v_p,
)

__version__ = "0.1.0"
