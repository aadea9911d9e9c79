"""Kernel backend selection.

The hot kernels (Jacobi eigensolver sweeps, integer-box scans, structure
factors) exist twice: compiled Cython in ``framekit._core`` and pure NumPy
in ``framekit._corepy``. The compiled module is preferred when it imported
cleanly; set ``FRAMEKIT_BACKEND=python`` to force the fallback, or
``FRAMEKIT_BACKEND=compiled`` to fail loudly when the extension is missing.
"""

from __future__ import annotations

import os

from framekit import _corepy

_FORCED = os.environ.get("FRAMEKIT_BACKEND", "").strip().lower()

try:
    from framekit import _core  # type: ignore[attr-defined]
except ImportError:
    _core = None

if _FORCED == "python":
    kernels = _corepy
elif _FORCED == "compiled":
    if _core is None:
        raise ImportError(
            "FRAMEKIT_BACKEND=compiled but framekit._core is not built; "
            "reinstall with a C compiler available"
        )
    kernels = _core
else:
    kernels = _core if _core is not None else _corepy

#: name of the active backend, for diagnostics and benchmarks
ACTIVE = "compiled" if kernels is _core and _core is not None else "python"


def available_backends():
    names = ["python"]
    if _core is not None:
        names.insert(0, "compiled")
    return names


def get_backend(name):
    """Return a kernel module by name ('compiled' or 'python')."""
    if name == "python":
        return _corepy
    if name == "compiled":
        if _core is None:
            raise ImportError("framekit._core is not built")
        return _core
    raise ValueError(f"unknown backend {name!r}")
