"""Exact and numeric engine for wheel-graph Feynman periods.

Everything lives in the compiled extension; this package just re-exports it.
"""

from wheelzeta._core import (  # noqa: F401
    __version__,
    DomainError,
    PrecisionError,
    UsageError,
    binomial,
    broadhurst_coeff,
    casimirs,
    catalan,
    class_table,
    closed_form_N,
    contains_forbidden_pattern,
    dual,
    exponent_slopes,
    factorial,
    gegenbauer,
    mc_full_residue,
    min_class_representative,
    min_fraction,
    n_sigma,
    permutations,
    pl_series_residue,
    polylog,
    quad_sector_integral,
    radial_kernel,
    reflect,
    s1_generate,
    sextuplet,
    twist,
    verify,
    wheel_residue,
    zeta_odd,
)
