"""Kazhdan-Lusztig-Stanley polynomials of weakly ranked posets.

Polynomials are lists of integer coefficients, lowest degree first.
Table keys are "x<y" strings of element labels.
"""

from ._kls import *  # noqa: F401,F403
from ._kls import KlsError, __doc__  # noqa: F401
