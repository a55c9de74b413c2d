"""Exception hierarchy shared by the library and the CLI."""


class WeightMultError(Exception):
    """Base class for all library errors."""


class ValidationError(WeightMultError, ValueError):
    """Bad input: unknown algebra, rank out of range, non-dominant weight, ..."""


class MethodUnavailable(WeightMultError, RuntimeError):
    """A computation method cannot handle the requested case."""


class WeylGroupTooLarge(MethodUnavailable):
    def __init__(self, cap, order=None):
        self.cap = cap
        self.order = order
        msg = f"Weyl group too large: order exceeds cap {cap}"
        if order is not None:
            msg += f" (order {order})"
        super().__init__(msg)


class NoChamberFormula(MethodUnavailable):
    """No closed-form polytope is known for the chamber of a highest weight."""
