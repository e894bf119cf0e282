"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A parameter is outside its documented domain."""


class InvalidProfileError(ValueError):
    """A selection profile violates its structural invariants."""


class InstanceTooLargeError(ValueError):
    """An exact-enumeration request exceeds the size guard."""


class SweepError(RuntimeError):
    """A Monte Carlo sweep aborted; the message names the failing cell."""
