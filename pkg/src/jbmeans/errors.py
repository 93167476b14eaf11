"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was called with arguments outside its domain.

    Raised for descriptor mismatches, invalid parameters (weights outside
    [0, 1], non-positive spectral bounds, ...) and unsupported algebra kinds.
    """


class SpectrumDomainError(DomainError):
    """The spectrum of an element violates a scalar function's domain.

    Carries the offending eigenvalue so callers (and the CLI) can report
    exactly which hypothesis failed.
    """

    def __init__(self, message: str, offending_eigenvalue: float):
        super().__init__(f"{message} (offending eigenvalue {offending_eigenvalue:.17g})")
        self.offending_eigenvalue = float(offending_eigenvalue)


class QuadratureError(RuntimeError):
    """An adaptive integral failed to converge within the allowed levels.

    The best estimate and its error bound are attached so callers can decide
    whether the partial result is still usable.
    """

    def __init__(self, message: str, estimate, error_bound: float):
        super().__init__(f"{message} (best estimate available, error bound {error_bound:.3e})")
        self.estimate = estimate
        self.error_bound = float(error_bound)
