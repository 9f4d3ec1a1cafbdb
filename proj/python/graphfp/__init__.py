"""Weighted-graph path algebras: exact free-probability moments and densities.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._graphfp import *  # noqa: F401,F403
from ._graphfp import __version__  # noqa: F401
