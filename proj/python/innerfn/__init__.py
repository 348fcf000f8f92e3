"""Inner analytic functions built from real functions on the unit circle.

Fourier coefficients of a real function on [-pi, pi], the Taylor series of
the analytic function they define on the open unit disk, radial recovery of
the boundary values, angular derivative/primitive chains, and a numerical
soft/hard classifier for boundary points.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
