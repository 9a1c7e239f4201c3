"""Exception hierarchy. Every validation failure raises a subclass of AontLabError."""


class AontLabError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(AontLabError):
    """Array has the wrong row count or row width for the declared (v, s)."""


class UnknownSymbolError(AontLabError):
    """A token cannot be decoded against the alphabet."""


class OversizedColumnSetError(AontLabError):
    """A projection was requested on more than s columns."""


class InvalidParametersError(AontLabError):
    """Structural parameters out of range (e.g. t_i, t_o not 1 <= t_i <= t_o <= s)."""


class MassSumError(AontLabError):
    """Probability masses do not sum to exactly 1."""


class ArityMismatchError(AontLabError):
    """A distribution has the wrong tuple length or alphabet size for its slot."""


class BlockRangeError(AontLabError):
    """Dependent-block column indices fall outside {1..s}."""


class BlockColumnError(AontLabError):
    """Per-column entropy was requested for a column inside the dependent block."""


class BlockTooLargeError(AontLabError):
    """The dependent block exceeds the protection parameter t."""


class TooManyNonuniformError(AontLabError):
    """More than t columns are non-uniform, so the exact closed form does not apply."""


class FormulaPreconditionError(AontLabError):
    """The closed-form conditional entropy was invoked outside its hypothesis."""


class OutputEntropyRangeError(AontLabError):
    """A supplied H(Y) value lies outside [0, (s - t_o) * log2(v)]."""


class ClassificationMismatchError(AontLabError):
    """The array's verified class is too weak for the requested bound family."""


class SingularMatrixError(AontLabError):
    """The transform matrix is not invertible modulo v."""


class NonPrimeModulusError(AontLabError):
    """Linear constructions require a prime alphabet size."""


class SearchSpaceError(AontLabError):
    """The requested matrix search exceeds the enumeration cap."""


class UnknownNameError(AontLabError):
    """No built-in array is registered under the given name."""
