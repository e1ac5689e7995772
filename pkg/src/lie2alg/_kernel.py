"""Backend selection for the elimination kernel.

The compiled extension is preferred when present; ``LIE2_PURE=1`` forces the
pure-Python kernel (useful for benchmarking and debugging).
"""

import os

if os.environ.get("LIE2_PURE"):
    from . import _pykernel as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

echelon = _impl.echelon
BACKEND = _impl.BACKEND
