"""Distance-preserving graph toolkit.

Thin package over the compiled extension; everything lives in ``_core``.
"""

from dpgraph._core import *  # noqa: F401,F403
from dpgraph._core import __version__  # noqa: F401
