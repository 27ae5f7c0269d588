"""Select the integer polynomial kernel backend at import time.

The compiled module is used when it is importable; setting the environment
variable ``REQHO_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

if os.environ.get("REQHO_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as K
    BACKEND = "python"
else:
    try:
        from . import _ckernels as K  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        from . import _pykernels as K
        BACKEND = "python"

__all__ = ["K", "BACKEND"]
