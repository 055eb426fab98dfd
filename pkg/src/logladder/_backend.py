"""Select the kernel backend at import time.

Preference order: the compiled extension if it imported cleanly, else the
pure-Python fallback.  ``LOGLADDER_BACKEND=python`` or ``=compiled`` forces
one side (forcing the compiled side raises if the build is absent, rather
than silently benchmarking the wrong thing).
"""

import os

from . import _kernels_py

_forced = os.environ.get("LOGLADDER_BACKEND", "").strip().lower()

if _forced == "python":
    kernels = _kernels_py
elif _forced == "compiled":
    from . import _kernels as kernels  # ImportError here is intentional
elif _forced:
    raise ValueError(
        f"LOGLADDER_BACKEND must be 'python' or 'compiled', not {_forced!r}")
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py


def backend_name():
    """'compiled' when the extension is active, else 'python'."""
    return "python" if kernels is _kernels_py else "compiled"
