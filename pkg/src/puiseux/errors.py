"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class ValidationError(ValueError):
    """A monoid description violates one of its structural conditions."""


class TruncationTooSmall(ValueError):
    """The requested truncation window cannot contain a forced atom."""


class PrefixTooSmall(ValueError):
    """The validated prefix cannot decide a prime's membership in the rule."""


class NotAMember(ValueError):
    """The element does not belong to the monoid."""


class TruncatedInput(ValueError):
    """An exact invariant was requested from a truncated factorization set."""
