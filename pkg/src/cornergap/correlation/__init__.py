"""Gap-corner correlation: double sums, moments, closed forms, images."""

from .expansion import MonomialCoefficients, expand_coefficients
from .finite import e_ratio_finite, e_ratio_limit, finite_n_correlation
from .images import ImageConfiguration, distance_product_check, image_configuration
from .moments import MomentValue, moment_closed, moment_direct
from .omega import omega_asymptotic, omega_double_sum, omega_exact
from .report import CorrelationReport, build_report

__all__ = [
    "CorrelationReport",
    "ImageConfiguration",
    "MomentValue",
    "MonomialCoefficients",
    "build_report",
    "distance_product_check",
    "e_ratio_finite",
    "e_ratio_limit",
    "expand_coefficients",
    "finite_n_correlation",
    "image_configuration",
    "moment_closed",
    "moment_direct",
    "omega_asymptotic",
    "omega_double_sum",
    "omega_exact",
]
