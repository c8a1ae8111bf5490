"""Interpolated multiple zeta values: exact algebra, finite (mod p) and numeric checks."""
from __future__ import annotations

from .arith import ModPPoly, RatPoly, bernoulli, binom, reduce_mod_p
from .finite import frak_Z_A, mhs_mod_p, zeta_A_t
from .indices import (
    InvalidIndex,
    arrow_down,
    arrow_right,
    arrow_up,
    dual,
    hoffman_dual,
    is_admissible,
    oplus,
)
from .interp import G_poly, IndexSum, f_coeff, g_poly, h_poly, interpolate, ohno_rhs
from .numeric import NumericValue, mzsv_numeric, mzv_numeric
from .words import NCSeries, X_series, sigma, tau

__all__ = [
    "G_poly", "IndexSum", "InvalidIndex", "ModPPoly", "NCSeries", "NumericValue", "RatPoly",
    "X_series", "arrow_down", "arrow_right", "arrow_up", "bernoulli", "binom", "dual",
    "f_coeff", "frak_Z_A", "g_poly", "h_poly", "hoffman_dual", "interpolate", "is_admissible",
    "mhs_mod_p", "mzsv_numeric", "mzv_numeric", "ohno_rhs", "oplus", "reduce_mod_p",
    "sigma", "tau", "zeta_A_t",
]
