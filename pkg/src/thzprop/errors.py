"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An input is outside the physical or numerical domain of an operation."""


class ConvergenceError(RuntimeError):
    """A series evaluation failed to converge within its term budget.

    Carries the partial sum and the last tail bound so callers can decide
    whether the partial result is usable.
    """

    def __init__(self, message, partial_sum, tail_bound, terms_used):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.tail_bound = tail_bound
        self.terms_used = terms_used


class MaterialLoadError(ValueError):
    """A material database source failed to parse or validate."""


class KirchhoffValidityWarning(UserWarning):
    """The requested roughness regime is outside the tangent-plane model's
    comfort zone (steep slopes or very large phase variance); results are
    computed as written but may not be physical."""
