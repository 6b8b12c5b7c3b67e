"""Exception types; each maps to a CLI exit code."""


class IsograssError(Exception):
    exit_code = 4


class ParseError(IsograssError, ValueError):
    exit_code = 2


class NotIsotropicError(IsograssError, ValueError):
    exit_code = 3


class InvalidTupleError(IsograssError, ValueError):
    exit_code = 2


class InconsistencyError(IsograssError, AssertionError):
    """An internal cross-check disagreed."""

    exit_code = 4


class WitnessNotFound(IsograssError):
    """No witness defined over the base field was found."""

    exit_code = 4


class DifferentOrbitsError(IsograssError, ValueError):
    """Witness requested for subspaces with different invariants."""

    exit_code = 3
