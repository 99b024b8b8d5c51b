"""Backend selection for the hot loops.

The compiled extension is preferred; if it cannot be imported the
pure-Python implementation is used.  ``BACKEND`` records the choice.
"""

from __future__ import annotations

try:
    from ._speedups import agm_ke, log_series_2f1, series_2f1
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    from ._purekernels import agm_ke, log_series_2f1, series_2f1
    BACKEND = "python"

__all__ = ["BACKEND", "agm_ke", "log_series_2f1", "series_2f1"]
