"""Exception hierarchy.

Validation problems derive from :class:`ValidationError` (also a
``ValueError``); violations of the exact-quadrature contract derive from
:class:`NumericalContractError`.
"""


class AspectSearchError(Exception):
    """Base class for all library errors."""


class ValidationError(AspectSearchError, ValueError):
    """Input rejected before any computation."""


class RangeViolation(ValidationError):
    """A detection profile leaves [0, 1] beyond tolerance."""


class EmptyCoefficients(ValidationError):
    pass


class NonPositive(ValidationError):
    pass


class NonPositiveModulus(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class FixedPointQuery(ValidationError):
    """The reflection map is undefined at its own centre."""


class NotCoprime(ValidationError):
    pass


class ProblemTooLarge(ValidationError):
    pass


class NumericalContractError(AspectSearchError):
    pass


class InsufficientNodes(NumericalContractError):
    """Quadrature node count is below the exactness bound."""

    def __init__(self, node_count, required):
        self.node_count = node_count
        self.required = required
        super().__init__(
            f"quadrature with {node_count} nodes is not exact here; "
            f"need at least {required}"
        )
