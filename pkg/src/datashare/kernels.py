"""Backend selection for the grid scans.

The compiled extension is used when it was built; otherwise the numpy
fallback is imported.  ``BACKEND`` names the one in use.
"""

from __future__ import annotations

try:
    from ._kernels import leader_scan, onpath_utility

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._fallback import leader_scan, onpath_utility

    BACKEND = "numpy"

__all__ = ["BACKEND", "leader_scan", "onpath_utility"]
