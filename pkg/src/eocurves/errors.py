"""Shared exception types."""


class InvalidModelError(ValueError):
    """Curve model violates a structural invariant (zero discriminant, bad monodromy, ...)."""


class ParseError(ValueError):
    """Malformed curve description or CLI input."""


class SizeGuardError(ValueError):
    """Requested enumeration exceeds the hard size guard."""


class PairingSupportError(ValueError):
    """Orthogonal complement requested for a subspace not comparable with H^0."""


class InternalInvariantError(RuntimeError):
    """A mathematically guaranteed invariant failed; signals an implementation bug."""
