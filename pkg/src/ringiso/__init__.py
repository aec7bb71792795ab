"""ringiso: Stanley-Reisner, facet, and edge ideals of complexes and graphs,
validation of quotient-ring isomorphism pairs, and extraction of the
underlying vertex bijection from a validated pair."""

from .complexes import (
    Bijection,
    Graph,
    SimplicialComplex,
    brute_force_iso,
    edge_ideal,
    facet_ideal,
    is_graph_isomorphism,
    is_isomorphism,
    reconstruct_facet_complex,
    reconstruct_graph,
    reconstruct_sr_complex,
    stanley_reisner_ideal,
    strip_zero_dim_facets,
)
from .errors import (
    ExtractionFailure,
    GuardError,
    InternalContradictionError,
    MismatchError,
    ParseError,
    RingIsoError,
    ValidationError,
)
from .extraction import (
    ExtractionResult,
    TransversalMatrix,
    build_M,
    extract_isomorphism,
    find_nonzero_transversal,
    verify_theorem2_minimality,
)
from .fields import QQ, GFElement, PrimeField, RationalField, field_from_descriptor
from .instances import (
    CannedPair,
    ElemAdd,
    InstanceBundle,
    Permute,
    Scale,
    generate_bundle,
    negative_instances,
    random_complex,
    random_gl_pair,
    random_graph,
    scrambled_iso,
)
from .parsing import format_monomial, format_polynomial, parse_polynomial
from .polynomials import Monomial, MonomialIdeal, Polynomial, normal_form, substitute
from .ringmaps import (
    AlgebraMap,
    CheckReport,
    IsoPair,
    LinearPartData,
    QuotientPresentation,
    Violation,
    check_inverse_pair,
    check_well_defined,
    compose_maps,
    compose_pairs,
    constant_free_check,
    lemma1_check,
    lemma2_check,
    linear_parts,
)
from .rng import SplitMix64

__version__ = "0.1.0"
