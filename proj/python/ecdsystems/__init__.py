"""Exponentiated-Chen component and system lifetimes.

Thin re-export of the compiled core. Build the `_ecd` module with CMake and
put its directory on PYTHONPATH next to this package (the `python_smoke`
ctest target wires this up automatically).
"""

from _ecd import (
    Params,
    cdf,
    sf,
    pdf,
    log_cdf,
    log_sf,
    hazard,
    reversed_hazard,
    quantile,
    system_sf,
    system_cdf,
    order_check,
    sample_system,
    majorizes,
)

__all__ = [
    "Params",
    "cdf",
    "sf",
    "pdf",
    "log_cdf",
    "log_sf",
    "hazard",
    "reversed_hazard",
    "quantile",
    "system_sf",
    "system_cdf",
    "order_check",
    "sample_system",
    "majorizes",
]
