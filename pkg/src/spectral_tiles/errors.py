"""Exception hierarchy shared by all modules.

Every error carries a stable machine-readable ``code`` so the service and
the CLI can emit ``{"error": code, "detail": ...}`` objects.
"""


class SpectralTilesError(Exception):
    """Base class; ``code`` is the wire-format error identifier."""

    code = "error"

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.__class__.__name__)
        self.detail = detail


class DimensionMismatch(SpectralTilesError):
    code = "dimension_mismatch"


class NotASpectrum(SpectralTilesError):
    code = "not_a_spectrum"


class NotAHadamardPair(SpectralTilesError):
    code = "not_a_hadamard_pair"

    def __init__(self, detail: str = "", witness=None):
        super().__init__(detail)
        self.witness = witness


class NotLocalTranslation(SpectralTilesError):
    code = "not_local_translation"

    def __init__(self, detail: str = "", witness=None):
        super().__init__(detail)
        self.witness = witness


class DegenerateEigenvalue(SpectralTilesError):
    code = "degenerate_eigenvalue"


class ZeroSpectrum(SpectralTilesError):
    code = "zero_spectrum"


class HypothesisViolation(SpectralTilesError):
    code = "hypothesis_violation"


class NoComplementPossible(SpectralTilesError):
    code = "no_complement_possible"


class UnsupportedCardinality(SpectralTilesError):
    code = "unsupported_cardinality"
