"""Exception types raised across the package."""


class AllPayError(ValueError):
    pass


class InvalidParameter(AllPayError):
    """A distribution builder or bound received out-of-range arguments."""


class InvalidMixture(AllPayError):
    pass


class InvalidValuation(AllPayError):
    pass


class InvalidValuations(AllPayError):
    """The pair violates v1 >= v2 > 0."""


class ConstraintViolation(AllPayError):
    """Equilibrium parameters fall outside the feasible region."""
