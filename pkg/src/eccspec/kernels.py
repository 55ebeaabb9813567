"""Kernel backend selection: compiled extension if importable, else pure Python.

Set ECCSPEC_KERNELS=py to force the pure-Python fallback (used by the
benchmark and the parity tests).
"""

import os

if os.environ.get("ECCSPEC_KERNELS") == "py":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
UNREACHABLE = _impl.UNREACHABLE

all_pairs_dist = _impl.all_pairs_dist
bfs_dist_row = _impl.bfs_dist_row
is_connected = _impl.is_connected
canon_bits = _impl.canon_bits
children_canon = _impl.children_canon
census_stats = _impl.census_stats
