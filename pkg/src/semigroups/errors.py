"""
Exception hierarchy for the package.

Every error carries a `witness`: a tuple of element indices or a small dict
that the command line serializes into reports, so a failure can always be
reproduced by hand from the Cayley table.
"""


class SemigroupError(Exception):
    """
    Base class of all domain errors.
    Args:
        message (str): Human readable description.
        witness: Machine-readable data pinpointing the failure.
    """
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

    def to_dict(self):
        witness = self.witness
        if isinstance(witness, tuple):
            witness = list(witness)
        return {"error": type(self).__name__, "message": str(self), "witness": witness}


class NonAssociative(SemigroupError):
    pass


class IndexOutOfRange(SemigroupError):
    pass


class CayleyFormatError(SemigroupError):
    pass


class CapExceeded(SemigroupError):
    def __init__(self, cap, limit, requested):
        super().__init__(
            f"cap '{cap}' exceeded: requested {requested}, limit {limit}",
            witness={"cap": cap, "limit": limit, "requested": requested},
        )
        self.cap = cap
        self.limit = limit
        self.requested = requested


class NotRegular(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    pass


class InvalidBiorder(SemigroupError):
    pass


class NotRegularBiorder(SemigroupError):
    pass


class NotChainRelated(SemigroupError):
    pass


class DomainConditionFailed(SemigroupError):
    pass


class InvalidChain(SemigroupError):
    pass


class InvalidCategory(SemigroupError):
    pass


class FactorizationNotFound(SemigroupError):
    pass


class WellDefinednessViolation(SemigroupError):
    pass


class TheoremViolation(SemigroupError):
    """Raised when a checked theorem fails; always an implementation bug."""
    pass
