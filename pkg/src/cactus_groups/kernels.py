"""Kernel backend selection.

Imports the compiled Cython kernels when the extension was built, falling
back to the pure-Python twin otherwise.  ``CACTUS_GROUPS_PURE=1`` in the
environment forces the fallback (useful for benchmarking and debugging).
``BACKEND`` names the selected implementation.
"""

from __future__ import annotations

import os

if os.environ.get("CACTUS_GROUPS_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND

commutes = _impl.commutes
is_lean = _impl.is_lean
lean_reduce = _impl.lean_reduce
lex_least = _impl.lex_least
canonical_if_lean = _impl.canonical_if_lean
bfs_reach = _impl.bfs_reach
reachable_class = _impl.reachable_class
swap_class = _impl.swap_class
component_ids = _impl.component_ids
