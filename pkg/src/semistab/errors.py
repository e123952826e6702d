"""Exception hierarchy shared by all semistab modules."""


class SemistabError(Exception):
    """Base class for all errors raised by this library."""


class OutOfRange(SemistabError):
    """An index or parameter lies outside its admissible range."""


class TrivialSubgroup(SemistabError):
    """The one-parameter subgroup has all weights equal (no flag)."""


class MalformedFiltration(SemistabError):
    """Ranks are not strictly increasing or a weight is not positive."""


class SingularMatrix(SemistabError):
    """A group element was expected but the matrix is not invertible."""


class DimensionMismatch(SemistabError):
    """Vector or weight lengths do not agree."""


class TooLarge(SemistabError):
    """The requested enumeration exceeds the supported size cap."""


class ProfileMismatch(SemistabError):
    """A nonvanishing profile does not fit the given filtration."""


class InvalidDelta(SemistabError):
    """The stability parameter is not positive (or negative where >= 0 is required)."""


class MalformedFlag(SemistabError):
    """A subsheaf flag is inconsistent with the ambient model."""


class DegenerateFlag(SemistabError):
    """Generic ranks of the flag steps collapse."""


class NotCoordinateFlag(SemistabError):
    """The operation is only defined for coordinate (summand-subset) flags."""


class InvalidRank(SemistabError):
    """The rank is not admissible for the given Dynkin family."""


class NotExceptional(SemistabError):
    """The query is only defined for exceptional Dynkin types."""
