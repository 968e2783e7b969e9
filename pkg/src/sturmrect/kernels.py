"""Kernel selection: the compiled extension when it imports, else the Python twin.

Set ``STURMRECT_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("STURMRECT_PURE_PYTHON"):
    from ._pykernels import *  # noqa: F401,F403
    from ._pykernels import IMPLEMENTATION
else:
    try:
        from ._kernels import *  # noqa: F401,F403
        from ._kernels import IMPLEMENTATION
    except ImportError:
        from ._pykernels import *  # noqa: F401,F403
        from ._pykernels import IMPLEMENTATION

from . import _pykernels as python  # noqa: E402,F401

__all__ = [
    "IMPLEMENTATION",
    "lf_sign_raw",
    "floor_table",
    "scan_weights",
    "count_raw",
    "oracle_counts",
]
