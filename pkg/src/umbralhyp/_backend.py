"""Select the compiled kernels when built, the pure-Python twin otherwise.

Set ``UMBRALHYP_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _core_py

if os.environ.get("UMBRALHYP_PURE_PYTHON"):
    core = _core_py
else:
    try:
        from . import _core as core
    except ImportError:
        core = _core_py

BACKEND = core.BACKEND
