"""Conformable fractional power series, series ODE solver and Hermite polynomials.

Rational values are exchanged as :class:`fractions.Fraction`; ``int`` and
``"p/q"`` strings are accepted wherever a rational is expected.
"""

from ._confrac import *  # noqa: F401,F403
from ._confrac import (  # noqa: F401
    AlphaSeries,
    ConfracError,
    hermite_from_ode,
    solve_series,
)

__version__ = "0.1.0"
