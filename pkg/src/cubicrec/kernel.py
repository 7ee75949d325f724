"""Backend selection for the companion-matrix kernel.

The compiled GMP kernel is used when it imports; otherwise the pure-Python
one. Set ``CUBICREC_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernel

if os.environ.get("CUBICREC_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        _impl = _pykernel

BACKEND = "python" if _impl is _pykernel else "gmp"

companion_power = _impl.companion_power
seq_forward = _impl.seq_forward
