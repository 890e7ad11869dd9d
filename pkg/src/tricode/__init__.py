"""Verification toolkit for a triple-error-correcting binary cyclic code.

The package checks, end to end and by independent routes, that the cyclic
code with zeros {1, 3, 13} corrects three errors and shares its weight
distribution with the classical two-three-five zero set: exhaustive dual
trace-code enumeration, MacWilliams transforms, carry-sequence
divisibility bounds, and a finite digraph argument about constrained
closed walks.
"""

from .carry import (
    CarryComputation,
    GainSequence,
    GainSweepSummary,
    add_with_carry,
    check_total_bound,
    check_window_hypothesis,
    gain_sequence,
    gold_closed_form,
    max_weight_gain,
    max_weight_gain_witness,
    sweep_gain_properties,
)
from .cyclic import (
    CyclicCode,
    SpectrumSequence,
    codeword_mask,
    define_code,
    determinant,
    dft_spectrum,
    enumerate_min_distance,
    enumerate_weight_distribution,
    linear_complexity,
    verify_det_identities,
    word_weight_via_spectrum,
)
from .field import (
    PRIMITIVE_POLY,
    CosetPartition,
    Field,
    bit_weight,
    build_field,
    coset_partition,
    cyclotomic_coset,
    exponent_equivalent,
)
from .graph import (
    ENVELOPES,
    TERMINAL_VERTICES,
    Arc,
    Digraph,
    Vertex,
    WalkState,
    arc_weight_histogram,
    build_digraph,
    classified_arcs,
    constrained_successors,
    expand_segments,
    search_closed_walks,
    validate_all_carry_walks,
    walk_from_carry_data,
    zero_outdegree_vertices,
)
from .weights import (
    REPORTED_EQUAL_PAIRS,
    ApnReport,
    WeightDistribution,
    apn_check,
    apn_family_exponents,
    dual_trace_distribution,
    enumerate_weight_counts,
    macwilliams_transform,
    table_harness,
    two_power_divisibility,
)

__all__ = [
    "ApnReport",
    "Arc",
    "CarryComputation",
    "CosetPartition",
    "CyclicCode",
    "Digraph",
    "ENVELOPES",
    "Field",
    "GainSequence",
    "GainSweepSummary",
    "PRIMITIVE_POLY",
    "REPORTED_EQUAL_PAIRS",
    "SpectrumSequence",
    "TERMINAL_VERTICES",
    "Vertex",
    "WalkState",
    "WeightDistribution",
    "add_with_carry",
    "apn_check",
    "apn_family_exponents",
    "arc_weight_histogram",
    "bit_weight",
    "build_digraph",
    "build_field",
    "check_total_bound",
    "check_window_hypothesis",
    "classified_arcs",
    "codeword_mask",
    "constrained_successors",
    "coset_partition",
    "cyclotomic_coset",
    "define_code",
    "determinant",
    "dft_spectrum",
    "dual_trace_distribution",
    "enumerate_min_distance",
    "enumerate_weight_counts",
    "enumerate_weight_distribution",
    "expand_segments",
    "exponent_equivalent",
    "gain_sequence",
    "gold_closed_form",
    "linear_complexity",
    "macwilliams_transform",
    "max_weight_gain",
    "max_weight_gain_witness",
    "search_closed_walks",
    "sweep_gain_properties",
    "table_harness",
    "two_power_divisibility",
    "validate_all_carry_walks",
    "verify_det_identities",
    "walk_from_carry_data",
    "word_weight_via_spectrum",
    "zero_outdegree_vertices",
]

__version__ = "0.1.0"
