"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """Base class for invalid inputs to the exact-arithmetic layers."""


class MixedFieldsError(AlgebraError):
    """Operands belong to different coefficient fields."""


class DegreeCeilingError(AlgebraError):
    """Polynomial degree exceeds the supported factorization ceiling."""


class ReducibleInputError(AlgebraError):
    """An operation required an irreducible polynomial."""


class DimensionTooLargeError(AlgebraError):
    """Matrix dimension exceeds a brute-force oracle guard."""


class NotNilpotentError(AlgebraError):
    """A nilpotent matrix was required."""


class NotAPermutationError(AlgebraError):
    """The supplied data does not describe a permutation."""


class DocumentError(AlgebraError):
    """A matrix document failed to parse or validate."""
