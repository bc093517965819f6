"""State-enumeration kernels.

``state_histogram`` comes from the compiled extension when it was built and
from the pure-Python module otherwise. Set ``PERIODICA_PURE=1`` to force the
fallback.
"""

import os

from . import _pykernel

pure_histogram = _pykernel.state_histogram

compiled_histogram = None
if not os.environ.get("PERIODICA_PURE"):
    try:
        from ._ckernel import state_histogram as compiled_histogram
    except ImportError:  # extension not built
        compiled_histogram = None

state_histogram = compiled_histogram or pure_histogram
BACKEND = "cython" if compiled_histogram is not None and state_histogram is compiled_histogram else "python"

__all__ = ["state_histogram", "pure_histogram", "compiled_histogram", "BACKEND"]
