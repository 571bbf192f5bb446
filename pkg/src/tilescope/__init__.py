"""Exact arithmetic for integer self-similar tile digit sets.

Decides tile-digit-set status through a finite carry automaton, extracts
residue-class (skew product form) decompositions of digit expansions,
runs the cyclotomic (T1)/(T2) machinery with explicit spectra, verifies
Hadamard-triple spectral data, and bounds tile measure by exact interval
covers.  No floating point in any decision path.
"""

from .core import (
    DigitSet,
    ExpandedDigits,
    ExpansionLimitError,
    PeriodicSet,
    direct_sum_complete,
    expand,
    max_expansion_level,
    normalize,
    residues_mod,
)
from .cyclotomic import (
    IntPolynomial,
    PrimePowerSupport,
    RationalSpectrum,
    check_t1,
    check_t2,
    cyclotomic_poly,
    divides,
    euler_phi,
    laba_spectrum,
    mask_poly,
    prime_power_root,
    support,
    vanishes_at,
)
from .geometry import (
    IntervalUnion,
    MeasureReport,
    approx,
    hull,
    intervals_json,
    measure_report,
    tower_svg,
)
from .report import analyze_digit_set, report_to_json
from .skewform import (
    SkewDecomposition,
    gen_product_form,
    gen_weak_product_form,
    lift_stage,
    skew_decompose,
    verify_decomposition,
)
from .spectral import (
    AnLaiReport,
    HadamardTriple,
    SpectralConditionError,
    build_spectral_data,
    is_hadamard,
    truncated_spectrum,
    unitarity_residual,
)
from .tiling import (
    CarryAutomaton,
    ReplicatingChain,
    TileWitness,
    is_tile,
    is_tile_oracle,
    replicating_chain,
    self_replicating_tiling,
    stabilization_exponent,
    tile_measure,
    verify_self_replicating,
)

__version__ = "0.1.0"

__all__ = [
    "AnLaiReport",
    "CarryAutomaton",
    "DigitSet",
    "ExpandedDigits",
    "ExpansionLimitError",
    "HadamardTriple",
    "IntPolynomial",
    "IntervalUnion",
    "MeasureReport",
    "PeriodicSet",
    "PrimePowerSupport",
    "RationalSpectrum",
    "SkewDecomposition",
    "SpectralConditionError",
    "TileWitness",
    "ReplicatingChain",
    "analyze_digit_set",
    "approx",
    "build_spectral_data",
    "check_t1",
    "check_t2",
    "cyclotomic_poly",
    "direct_sum_complete",
    "divides",
    "euler_phi",
    "expand",
    "gen_product_form",
    "gen_weak_product_form",
    "hull",
    "intervals_json",
    "is_hadamard",
    "is_tile",
    "is_tile_oracle",
    "laba_spectrum",
    "lift_stage",
    "mask_poly",
    "max_expansion_level",
    "measure_report",
    "normalize",
    "prime_power_root",
    "replicating_chain",
    "report_to_json",
    "residues_mod",
    "self_replicating_tiling",
    "skew_decompose",
    "stabilization_exponent",
    "support",
    "tile_measure",
    "tower_svg",
    "truncated_spectrum",
    "unitarity_residual",
    "vanishes_at",
    "verify_decomposition",
    "verify_self_replicating",
]
