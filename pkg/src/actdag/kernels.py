"""Kernel backend selection: compiled extension if available, else pure Python.

Set the environment variable ``ACTDAG_PURE=1`` before import to force the
pure-Python fallback (used by the benchmark and the parity tests).
"""

import os

from . import _purekernels

if os.environ.get("ACTDAG_PURE") == "1":
    _impl = _purekernels
else:
    try:
        from . import _fastkernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purekernels

BACKEND = "pure" if _impl is _purekernels else "compiled"

lex_bfs_csr = _impl.lex_bfs_csr
greedy_color_csr = _impl.greedy_color_csr
components_csr = _impl.components_csr
check_peo_csr = _impl.check_peo_csr
