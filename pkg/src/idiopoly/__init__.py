"""Exact-arithmetic toolkit for idiosyncratic polynomials of digraphs.

The package computes characteristic polynomials of generalized adjacency
matrices A + y*(J - A - I) + z*A^T over arbitrary-precision integers and
mechanically verifies the reconstruction statements built on them:
3-subset polynomial decks of flag-free digraphs, tournament determinant
parity for the classic hypomorphic family, the one-arc-reversal
counterexample, and the Seidel-spectrum identities of canonical
orientations.
"""

from .digraph import (
    Digraph,
    DigraphClass,
    NotBipartiteError,
    NotConnectedError,
    NotSymmetricError,
    canonical_orientations,
    classify,
    complement,
    converse,
    find_flags,
    format_digraph,
    induced,
    invert_module,
    is_flag_free,
    is_module,
    modules,
    nu,
    parse_digraph,
)
from .poly import (
    ExactDivisionError,
    GaussPoly,
    MPoly,
    PolyMatrix,
    charpoly,
    charpoly_faddeev,
    det_int,
    determinant,
    gaussian_identity_check,
)
from .spectral import (
    Deck,
    adjacency_charpoly,
    deck3_pointwise_equal,
    generalized_adjacency,
    idio_deck,
    idio_equal,
    idio_value,
    idiosyncratic,
    seidel_charpoly,
    seidel_matrix,
    spectral_consequences_check,
)
from .hemimorphy import (
    InversionTrace,
    Lemma3Report,
    MainTheoremVerdict,
    ThreeClass,
    are_hemimorphic,
    are_isomorphic,
    classify3,
    find_inversion_sequence,
    isomorphism,
    k_hemimorphic,
    lemma_3idio_check,
    main_theorem_verify,
)
from .stockmeyer import (
    HamiltonianCensus,
    adjacency_determinant,
    hamiltonian_census,
    hypomorphy_check,
    mirror_bijection_check,
    odd_part,
    parity_check,
    pouzet_identity_check,
    remark1_check,
    stockmeyer_A,
    stockmeyer_B,
    stockmeyer_C,
    stockmeyer_table,
)
from .coates import (
    CounterexampleReport,
    LinearSubdigraph,
    LoopDigraph,
    bordered_matrix,
    coates_determinant,
    counterexample_pair,
    hlowey_check,
    linear_subdigraphs,
    partition_by_arcs,
    verify_counterexample,
)

__version__ = "0.1.0"
