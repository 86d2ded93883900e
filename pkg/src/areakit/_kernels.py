"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure Python twin.
AREAKIT_BACKEND=python or AREAKIT_BACKEND=c forces a backend; forcing
"c" raises if the extension was not built.  Both backends are
bit-identical, so the choice only affects speed.
"""

from __future__ import annotations

import os

_forced = os.environ.get("AREAKIT_BACKEND", "").strip().lower()

if _forced == "python":
    from . import _pykernels as _impl
elif _forced == "c":
    from . import _ckernels as _impl  # type: ignore[no-redef]
elif _forced:
    raise ImportError(f"AREAKIT_BACKEND must be 'c' or 'python', got {_forced!r}")
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND

neumaier_sum = _impl.neumaier_sum
neumaier_csum = _impl.neumaier_csum
weighted_abs2_sum = _impl.weighted_abs2_sum
weighted_conj_dot = _impl.weighted_conj_dot
eval_series = _impl.eval_series
eval_series_many = _impl.eval_series_many
double_contour_sum = _impl.double_contour_sum
binomial_square_scan = _impl.binomial_square_scan
