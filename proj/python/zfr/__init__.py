"""Certified numerics for an explicit Vinogradov-Korobov zero-free region.

Thin re-export of the pybind11 core; every returned number is an interval
endpoint pair of decimal strings so no rigor is lost crossing the boundary.
"""

try:
    from ._zfr import (  # noqa: F401
        best_width,
        corollary_sweep,
        cosine_poly,
        hurwitz_zeta,
        kernel_constants,
        mertens_E,
        region_width,
        suite_names,
        verify,
        zeta,
        __version__,
    )
except ImportError:  # running against a build tree where _zfr is top-level
    from _zfr import (  # noqa: F401
        best_width,
        corollary_sweep,
        cosine_poly,
        hurwitz_zeta,
        kernel_constants,
        mertens_E,
        region_width,
        suite_names,
        verify,
        zeta,
        __version__,
    )

__all__ = [
    "best_width",
    "corollary_sweep",
    "cosine_poly",
    "hurwitz_zeta",
    "kernel_constants",
    "mertens_E",
    "region_width",
    "suite_names",
    "verify",
    "zeta",
    "__version__",
]
