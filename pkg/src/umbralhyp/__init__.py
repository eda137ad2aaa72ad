"""Generalized hypergeometric functions through umbral moments, with closed-form
integrals checked against quadrature."""

from ._backend import BACKEND
from .errors import (DomainError, NoConvergence, NonFinite, PochhammerDomainWarning, PoleError,
                     UmbralHypError)
from .hyperseries import (EvalResult, FoxWrightParams, HypergeometricParams, SeriesControl,
                          classify_convergence, eval_appell, eval_fox_wright, eval_pfq, pfq)
from .pochhammer import pochhammer
from .umbral import UmbralSymbol, umbral_exp_eval, vacuum_moment

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DomainError", "EvalResult", "FoxWrightParams", "HypergeometricParams",
    "NoConvergence", "NonFinite", "PochhammerDomainWarning", "PoleError", "SeriesControl",
    "UmbralHypError", "UmbralSymbol", "classify_convergence", "eval_appell", "eval_fox_wright",
    "eval_pfq", "pfq", "pochhammer", "umbral_exp_eval", "vacuum_moment",
]
