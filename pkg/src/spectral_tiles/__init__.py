"""Spectra, local translation groups and tilings of finite integer sets.

The library decides spectrality of finite subsets of Z with exact
root-of-unity arithmetic, builds the associated local translation matrices
and one-parameter unitary groups, derives tiling complements from the
obstruction set of matrix powers, simulates the continuum group on unions
of unit intervals, and packages the small-cardinality classification
results.  A FastAPI service (``spectral_tiles.api``) and a CLI
(``spectral-tiles``) expose every operation over JSON/CSV.
"""

from .cyclotomic import CycloSum, RootOfUnity, exp_sum
from .errors import (
    DegenerateEigenvalue,
    DimensionMismatch,
    HypothesisViolation,
    NoComplementPossible,
    NotAHadamardPair,
    NotASpectrum,
    NotLocalTranslation,
    SpectralTilesError,
    UnsupportedCardinality,
    ZeroSpectrum,
)
from .matrices import RootTable, is_unitary, mat_adjoint, mat_mul, mat_pow
from .spectra import (
    HadamardPair,
    IntSet,
    Spectrum,
    first_nonorthogonal_pair,
    fourier_matrix,
    is_spectrum,
    make_hadamard_pair,
    search_spectra,
)
from .translations import (
    LocalTranslationMatrix,
    diagonal_modulation,
    eigencheck,
    local_group,
    local_translation_matrix,
    rescale,
    spectrum_from_matrix,
    verify_local_translation,
)
from .tiling import (
    LatticeDescriptor,
    ThetaSet,
    TilingCertificate,
    lattice_of_spectrum,
    period_check,
    theta_set,
    tiling_complements,
    verify_tiling,
)
from .continuum import (
    SampledFunction,
    TrajectoryFrame,
    indicator,
    sample_exponential,
    trajectory,
    trajectory_to_csv,
    trajectory_to_records,
    translate,
)
from .classification import (
    ClassificationVerdict,
    FugledeRecord,
    FugledeReport,
    N4Params,
    classify_small,
    fuglede_zn,
    match_n4,
)

__version__ = "0.1.0"

__all__ = [
    "CycloSum",
    "RootOfUnity",
    "exp_sum",
    "RootTable",
    "is_unitary",
    "mat_mul",
    "mat_adjoint",
    "mat_pow",
    "IntSet",
    "Spectrum",
    "HadamardPair",
    "is_spectrum",
    "first_nonorthogonal_pair",
    "fourier_matrix",
    "search_spectra",
    "make_hadamard_pair",
    "LocalTranslationMatrix",
    "diagonal_modulation",
    "local_translation_matrix",
    "local_group",
    "verify_local_translation",
    "eigencheck",
    "spectrum_from_matrix",
    "rescale",
    "LatticeDescriptor",
    "ThetaSet",
    "TilingCertificate",
    "lattice_of_spectrum",
    "theta_set",
    "tiling_complements",
    "verify_tiling",
    "period_check",
    "SampledFunction",
    "TrajectoryFrame",
    "indicator",
    "sample_exponential",
    "translate",
    "trajectory",
    "trajectory_to_csv",
    "trajectory_to_records",
    "ClassificationVerdict",
    "N4Params",
    "classify_small",
    "match_n4",
    "FugledeRecord",
    "FugledeReport",
    "fuglede_zn",
    "SpectralTilesError",
    "DimensionMismatch",
    "NotASpectrum",
    "NotAHadamardPair",
    "NotLocalTranslation",
    "DegenerateEigenvalue",
    "ZeroSpectrum",
    "HypothesisViolation",
    "NoComplementPossible",
    "UnsupportedCardinality",
]
