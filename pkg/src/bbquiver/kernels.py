"""Select the compiled kernels when available, else the pure-Python ones.

Set ``BBQ_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_backend

if os.environ.get("BBQ_PURE_PYTHON", "") not in ("", "0"):
    backend = python_backend
else:
    try:
        from . import _ckernels as backend  # type: ignore[attr-defined]
    except ImportError:
        backend = python_backend

BACKEND = backend.BACKEND
enumerate_colorings = backend.enumerate_colorings
state_sum = backend.state_sum
bracket_violations = backend.bracket_violations
search_chunk = backend.search_chunk


def compiled_backend():
    """The compiled module, or None if it was not built."""
    try:
        from . import _ckernels  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _ckernels
