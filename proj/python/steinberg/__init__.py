"""Jordan-Hoelder factors of locally analytic Steinberg representations.

Exact Weyl-group and Kazhdan-Lusztig combinatorics over a C++ core; see the
project README for the full surface.
"""

from ._steinberg import *  # noqa: F401,F403
from ._steinberg import __doc__ as _core_doc  # noqa: F401
