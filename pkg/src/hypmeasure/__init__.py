"""Constructive bicomplex and hyperbolic measure theory on finite spaces.

The package models measures whose values live in the bicomplex ring
(or its hyperbolic subring), everything stored as atom-indexed tables:
arithmetic and the partial order on the scalars, measures with total
variation, Lebesgue-style integration with a dominated-convergence
harness, the classical decompositions (Jordan, Hahn, polar,
Lebesgue/Radon-Nikodym) in exact atomwise form, push-forward dynamics
with invariant-measure search, and a seeded verification suite runner
behind both a Python API and a JSON command line.
"""

from .codec import (
    bicomplex_to_obj,
    dumps_canonical,
    function_to_obj,
    hyperbolic_to_obj,
    map_to_obj,
    mask_to_obj,
    measure_to_obj,
    parse_bicomplex,
    parse_function,
    parse_hyperbolic,
    parse_map,
    parse_mask,
    parse_measure,
    parse_space,
    space_to_obj,
)
from .decomposition import (
    HahnPartition,
    HahnResult,
    JordanPair,
    LatticeReport,
    LRNResult,
    TvOfIndefinite,
    abs_continuous,
    check_lattice_properties,
    epsilon_delta_witness,
    hahn,
    is_concentrated,
    jordan,
    lebesgue_radon_nikodym,
    lrn_pair_is_valid,
    mutually_singular,
    polar_density,
    tv_of_indefinite_integral,
)
from .dynamics import (
    CesaroTrace,
    ContinuityProbe,
    CovCheck,
    PointMap,
    cesaro_invariant,
    change_of_variables_check,
    continuity_probe,
    convex_combine,
    in_invariant_hull,
    invariant_basis_bruteforce,
    is_invariant,
    pushforward,
    pushforward_iter,
)
from .errors import InternalInvariantError, SchemaError
from .integration import (
    DCTReport,
    ModulusCheck,
    TFunction,
    check_linearity,
    check_modulus_inequality,
    dct_run,
    in_l1,
    indefinite_integral,
    integrate,
    unimodular_factor,
)
from .measures import (
    MeasureKind,
    TMeasure,
    dominates,
    normalize_to_probability,
    probability_variant,
    range_in_plus_minus_cones,
    subset_sums,
    total_variation_bruteforce,
    variation_measure,
)
from .numbers import (
    E1,
    E2,
    J,
    ONE,
    ZERO,
    Bicomplex,
    Hyperbolic,
    Order,
    SeriesWitness,
    check_convergence,
    check_series,
    compare_d,
    leq_d,
    lt_d,
    sup_d,
)
from .spaces import FiniteSpace, SetMask, all_subsets, set_partitions
from .verify import SuiteResult, VerifyReport, run_suite, run_verify, suite_names

__version__ = "0.1.0"

__all__ = [
    "Bicomplex",
    "CesaroTrace",
    "ContinuityProbe",
    "CovCheck",
    "DCTReport",
    "E1",
    "E2",
    "FiniteSpace",
    "HahnPartition",
    "HahnResult",
    "Hyperbolic",
    "InternalInvariantError",
    "J",
    "JordanPair",
    "LRNResult",
    "LatticeReport",
    "MeasureKind",
    "ModulusCheck",
    "ONE",
    "Order",
    "PointMap",
    "SchemaError",
    "SeriesWitness",
    "SetMask",
    "SuiteResult",
    "TFunction",
    "TMeasure",
    "TvOfIndefinite",
    "VerifyReport",
    "ZERO",
    "abs_continuous",
    "all_subsets",
    "bicomplex_to_obj",
    "cesaro_invariant",
    "change_of_variables_check",
    "check_convergence",
    "check_lattice_properties",
    "check_linearity",
    "check_modulus_inequality",
    "check_series",
    "compare_d",
    "continuity_probe",
    "convex_combine",
    "dct_run",
    "dominates",
    "dumps_canonical",
    "epsilon_delta_witness",
    "function_to_obj",
    "hahn",
    "hyperbolic_to_obj",
    "in_invariant_hull",
    "in_l1",
    "indefinite_integral",
    "integrate",
    "invariant_basis_bruteforce",
    "is_concentrated",
    "is_invariant",
    "jordan",
    "lebesgue_radon_nikodym",
    "leq_d",
    "lrn_pair_is_valid",
    "lt_d",
    "map_to_obj",
    "mask_to_obj",
    "measure_to_obj",
    "mutually_singular",
    "normalize_to_probability",
    "parse_bicomplex",
    "parse_function",
    "parse_hyperbolic",
    "parse_map",
    "parse_mask",
    "parse_measure",
    "parse_space",
    "polar_density",
    "probability_variant",
    "pushforward",
    "pushforward_iter",
    "range_in_plus_minus_cones",
    "run_suite",
    "run_verify",
    "set_partitions",
    "space_to_obj",
    "subset_sums",
    "suite_names",
    "sup_d",
    "total_variation_bruteforce",
    "tv_of_indefinite_integral",
    "unimodular_factor",
    "variation_measure",
]
