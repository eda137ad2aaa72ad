"""Exception hierarchy shared by every module."""


class UmbralHypError(Exception):
    pass


class DomainError(UmbralHypError, ValueError):
    """Arguments outside the region where the requested quantity is defined."""


class PoleError(DomainError):
    """The value is genuinely infinite (a Gamma pole with no cancellation)."""


class NoConvergence(UmbralHypError, ArithmeticError):
    """A series or quadrature hit its work cap before meeting its tolerance.

    The best partial result, when one exists, is kept on ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NonFinite(UmbralHypError, ArithmeticError):
    """An intermediate quantity overflowed or an integrand returned inf/nan."""


class PochhammerDomainWarning(UserWarning):
    pass
