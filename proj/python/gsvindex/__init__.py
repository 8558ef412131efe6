"""Exact Poincare-Hopf and GSV indices of polynomial vector fields."""

try:
    from ._gsvindex import *  # noqa: F401,F403
    from ._gsvindex import MathError
except ImportError:  # in-tree build: the extension sits next to the build outputs
    from _gsvindex import *  # type: ignore # noqa: F401,F403
    from _gsvindex import MathError  # type: ignore

__all__ = [
    "MathError",
    "algebra",
    "curve_gsv",
    "degree",
    "elk_index",
    "elk_report",
    "expand",
    "gsv_report",
    "hamiltonian",
    "sigma_report",
]
