"""Select the elimination backend: compiled extension or pure Python.

The Cython extension ``_kernels_cy`` is used when it imported cleanly and
the environment variable ``SYMPSPIN_BACKEND`` does not force ``python``.
Both backends implement the same ``rref`` / ``reduce_row`` interface and
produce identical output.
"""

import os

from . import _kernels_py

_choice = os.environ.get("SYMPSPIN_BACKEND", "").strip().lower()

if _choice in ("", "cython"):
    try:
        from . import _kernels_cy as _impl
    except ImportError:
        if _choice == "cython":
            raise ImportError(
                "SYMPSPIN_BACKEND=cython but the compiled extension is "
                "not available; build the package or unset the variable")
        _impl = _kernels_py
elif _choice == "python":
    _impl = _kernels_py
else:
    raise ValueError("SYMPSPIN_BACKEND must be 'cython' or 'python', got %r"
                     % _choice)

rref = _impl.rref
reduce_row = _impl.reduce_row
BACKEND_NAME = _impl.BACKEND_NAME


def available_backends():
    names = ["python"]
    try:
        from . import _kernels_cy  # noqa: F401
        names.insert(0, "cython")
    except ImportError:
        pass
    return names
