"""Exceptions shared across the package."""


class NonPrimitiveWeights(ValueError):
    """All four weights share a common factor; the caller must rescale."""


class PreconditionError(ValueError):
    """An operation was called on input outside its stated domain."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug upstream."""


class CatalogIntegrityError(InvariantViolation):
    """The embedded reference data is inconsistent with itself."""
