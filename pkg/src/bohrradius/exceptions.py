"""Exception types raised by :mod:`bohrradius`."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(ValueError):
    """Numerical knobs (sample counts, radii, tolerances) are inconsistent."""


class PreconditionError(ValueError):
    """Input violates a structural hypothesis, e.g. ``g(0) != 0``."""


class SolverError(RuntimeError):
    """The root solver failed on an input where a root is guaranteed."""
