"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module is used. Set ``LATTICECOUNT_PURE_PYTHON=1`` to force the fallback.
Both backends are importable directly (``python_backend`` and
``compiled_backend``, the latter ``None`` when unavailable) for benchmarking.
"""
import os

from . import _pykernels as python_backend

try:
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

if compiled_backend is not None and not os.environ.get("LATTICECOUNT_PURE_PYTHON"):
    _impl = compiled_backend
    BACKEND = "compiled"
else:
    _impl = python_backend
    BACKEND = "python"

delannoy_grid = _impl.delannoy_grid
central_grid = _impl.central_grid
delannoy_binomial_sum = _impl.delannoy_binomial_sum
central_recurrence = _impl.central_recurrence
walk_layers = _impl.walk_layers
strip_absorption = _impl.strip_absorption


def backends():
    """Available backends as ``{name: module}``."""
    out = {"python": python_backend}
    if compiled_backend is not None:
        out["compiled"] = compiled_backend
    return out
