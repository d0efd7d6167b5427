"""Skew information, SLD Fisher information and their difference.

The package evaluates the Wigner-Yanase skew information ``I_W``, the SLD
quantum Fisher information ``I_F`` and the Fisher discord ``C = I_F - I_W``
for finite-dimensional and truncated single-mode states, together with a
catalogue of analytic values for the standard bosonic families.
"""

__version__ = "0.1.0"

from .closed_forms import FormulaFamily, closed_form, evaluate_closed_form, family_ids, lambda0
from .config import DEFAULT_TOL, Tolerances
from .errors import (
    DomainError,
    FisherDiscordError,
    InvariantViolation,
    NumericalError,
    TruncationWarning,
)
from .fock import FockConfig
from .measures import (
    DiscordReport,
    fisher_discord,
    skew_information,
    sld_fisher,
    sld_operator,
)
from .optimize import extremum
from .pairing import spectral_report

__all__ = [
    "DEFAULT_TOL",
    "DiscordReport",
    "DomainError",
    "FisherDiscordError",
    "FockConfig",
    "FormulaFamily",
    "InvariantViolation",
    "NumericalError",
    "Tolerances",
    "TruncationWarning",
    "closed_form",
    "evaluate_closed_form",
    "extremum",
    "family_ids",
    "fisher_discord",
    "lambda0",
    "skew_information",
    "sld_fisher",
    "sld_operator",
    "spectral_report",
    "__version__",
]
