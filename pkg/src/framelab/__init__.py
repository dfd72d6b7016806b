"""Finite frames, POVMs, frame functions, and CAZAC sequences.

The package is organized around four objects.  Frames are finite
vector systems in R^d or C^d with the Parseval property as the
distinguished special case.  POVMs are the measurement-theoretic face
of the same data.  Frame functions are maps on the sphere or ball
whose sums over orthonormal bases or Parseval frames are constant,
together with the classical low-dimensional counterexamples showing
when they fail to come from operators.  CAZAC sequences are
unimodular vectors with vanishing autocorrelation, whose translates
and modulates form tight Gabor frames with provably small coherence.
"""

from .errors import (
    BadAlphasError,
    BadCardinalityError,
    BadEpsilonError,
    BadFamilySizeError,
    BadNError,
    BadPartitionError,
    BadSelectorError,
    BadWeightError,
    BasisNotOrthonormalError,
    DimMismatchError,
    FramelabError,
    InputError,
    NoConvergenceError,
    NotAFrameError,
    NotHermitianError,
    NotParsevalError,
    NotPovmError,
    NotPrimeError,
    NotSquareError,
    NotUnimodularError,
    NotUnitNormError,
    OutOfBallError,
    PreconditionError,
    SingularOrIndefiniteError,
    TooFewVectorsError,
    TooSmallError,
)
from .frames import (
    Frame,
    FrameReport,
    analyze_frame,
    canonical_parseval,
    coherence,
    frame_bounds,
    frame_operator,
    frame_potential,
    harmonic_frame,
    is_equiangular,
    is_parseval,
    project_frame,
    random_onb,
    random_parseval,
    simplex_etf,
    standard_onb,
    welch_bound,
    with_zeros,
)
from .gleason import (
    FitResult,
    GleasonFn,
    LadderReport,
    ScalingReport,
    VerificationReport,
    cos_counterexample,
    custom_gleason,
    degree_ladder_experiment,
    epsilon_1d_counterexample,
    expnorm_gleason,
    fit_quadratic,
    gleason_from_effect_measure,
    homogeneity_check,
    partition_scaling_check,
    periodic_extension_gleason,
    quadratic_gleason,
    quadratic_zero_count_s1,
    rational_indicator_counterexample,
    rational_scaling_check,
    verify_onb_gleason,
    verify_parseval_gleason,
)
from .linalg import (
    DEFAULT_TOL,
    HermitianEig,
    hermitian_eig,
    outer,
    psd_inv_sqrt,
    random_hermitian,
    trace,
)
from .povm import (
    FrameFromPovm,
    MeasureCheckReport,
    Povm,
    born_probabilities,
    check_generalized_measure,
    check_povm,
    frame_from_povm,
    is_effect,
    povm_from_frame,
    povm_from_frame_grouped,
    random_density,
)
from .rng import SplitMix64
from .serialize import (
    ambiguity_to_csv,
    canonical_json,
    frame_from_json,
    frame_to_json,
    load_json,
    parse_json,
    povm_from_json,
    povm_to_json,
    sequence_from_json,
    sequence_to_json,
    sniff_kind,
    write_json,
)
from .waveforms import (
    AmbiguityTable,
    CazacReport,
    ambiguity,
    bjorck,
    bjorck_peak_bound,
    gabor_frame,
    is_cazac,
    legendre_symbol,
    quadratic_phase,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityTable",
    "BadAlphasError",
    "BadCardinalityError",
    "BadEpsilonError",
    "BadFamilySizeError",
    "BadNError",
    "BadPartitionError",
    "BadSelectorError",
    "BadWeightError",
    "BasisNotOrthonormalError",
    "CazacReport",
    "DEFAULT_TOL",
    "DimMismatchError",
    "FitResult",
    "Frame",
    "FrameFromPovm",
    "FrameReport",
    "FramelabError",
    "GleasonFn",
    "HermitianEig",
    "InputError",
    "LadderReport",
    "MeasureCheckReport",
    "NoConvergenceError",
    "NotAFrameError",
    "NotHermitianError",
    "NotParsevalError",
    "NotPovmError",
    "NotPrimeError",
    "NotSquareError",
    "NotUnimodularError",
    "NotUnitNormError",
    "OutOfBallError",
    "Povm",
    "PreconditionError",
    "ScalingReport",
    "SingularOrIndefiniteError",
    "SplitMix64",
    "TooFewVectorsError",
    "TooSmallError",
    "VerificationReport",
    "ambiguity",
    "ambiguity_to_csv",
    "analyze_frame",
    "bjorck",
    "bjorck_peak_bound",
    "born_probabilities",
    "canonical_json",
    "canonical_parseval",
    "check_generalized_measure",
    "check_povm",
    "coherence",
    "cos_counterexample",
    "custom_gleason",
    "degree_ladder_experiment",
    "epsilon_1d_counterexample",
    "expnorm_gleason",
    "fit_quadratic",
    "frame_bounds",
    "frame_from_json",
    "frame_from_povm",
    "frame_operator",
    "frame_potential",
    "frame_to_json",
    "gabor_frame",
    "gleason_from_effect_measure",
    "harmonic_frame",
    "hermitian_eig",
    "homogeneity_check",
    "is_cazac",
    "is_effect",
    "is_equiangular",
    "is_parseval",
    "legendre_symbol",
    "load_json",
    "outer",
    "parse_json",
    "partition_scaling_check",
    "periodic_extension_gleason",
    "povm_from_frame",
    "povm_from_frame_grouped",
    "povm_from_json",
    "povm_to_json",
    "project_frame",
    "psd_inv_sqrt",
    "quadratic_gleason",
    "quadratic_phase",
    "quadratic_zero_count_s1",
    "random_density",
    "random_hermitian",
    "random_onb",
    "random_parseval",
    "rational_indicator_counterexample",
    "rational_scaling_check",
    "sequence_from_json",
    "sequence_to_json",
    "simplex_etf",
    "sniff_kind",
    "standard_onb",
    "trace",
    "write_json",
    "verify_onb_gleason",
    "verify_parseval_gleason",
    "welch_bound",
    "with_zeros",
]
