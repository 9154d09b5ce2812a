"""Kernel backend selection.

The compiled extension is used when present; setting FORCEPS_PURE_PYTHON=1
(or a failed build) selects the pure Python twin.  Both expose identical
functions with identical results.
"""

import os

if os.environ.get("FORCEPS_PURE_PYTHON"):
    from . import _pykernel as kernel
else:
    try:
        from . import _ckernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as kernel

BACKEND = kernel.BACKEND
closure_mask = kernel.closure_mask
closure_async_mask = kernel.closure_async_mask
first_failing_leaks = kernel.first_failing_leaks
search_min_superset = kernel.search_min_superset
is_fort_mask = kernel.is_fort_mask
minimal_fort_masks = kernel.minimal_fort_masks
