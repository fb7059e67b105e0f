"""Exception hierarchy shared by every layer of the package."""


class DualPairError(Exception):
    """Base class for all errors raised by dualpair."""


class ContractViolation(DualPairError, ValueError):
    """An operation was called with arguments outside its contract."""


class ConstructionError(DualPairError, ValueError):
    """A ring, module or pairing failed validation.

    ``witness`` carries the offending data (a triple of ring elements, a pair
    of module elements, ...) so callers can report exactly what broke.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceError(DualPairError):
    """An enumeration would exceed the configured cardinality cap."""


class UnsupportedError(DualPairError):
    """The requested construction is not available for this ring backend."""


class HypothesisError(DualPairError):
    """A result was invoked on an instance that fails its hypothesis."""


class ConsistencyError(DualPairError, AssertionError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
