"""Python bindings for the ogglab C++ library.

Integers are exact Python ints, matrices are lists of rows and polynomials
are coefficient lists with the constant term first.
"""

from ._ogglab import *  # noqa: F401,F403
from ._ogglab import __doc__  # noqa: F401

__version__ = "0.1.0"
