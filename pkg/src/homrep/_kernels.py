"""Backend selection for the permutation-search kernel.

Prefers the compiled extension when it imported cleanly; otherwise the
pure-Python twin.  Graphs with more than 64 vertices always take the
pure path (the compiled kernel packs adjacency rows into one word).
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _speedups
    BACKEND = "cython"
except ImportError:
    _speedups = None
    BACKEND = "python"


def search_automorphisms(n: int, adj_masks: list[int], stop_at: int) -> list[tuple[int, ...]]:
    if _speedups is not None and n <= 64:
        return _speedups.search_automorphisms(n, adj_masks, stop_at)
    return _kernels_py.search_automorphisms(n, adj_masks, stop_at)
