"""Backend selection for the counting kernels.

At import time this module binds the hot kernels from the compiled
extension (``permavoid._speedups``) when it is available, and from the
pure-Python twin (``permavoid._kernels_py``) otherwise.  Setting the
environment variable ``PERMAVOID_PURE=1`` forces the pure backend even
when the extension is built — useful for debugging and benchmarking.

``BACKEND`` is ``"compiled"`` or ``"python"``.

Contract honoured by callers (enforced in the wrapper modules, not
here):

  * matrix kernels on the compiled backend need ncols <= 64 and a copy
    total guaranteed to fit in a signed 64-bit integer; wider or riskier
    inputs go straight to the pure twin, which counts in Python ints;
  * edge kernels assume a pattern of length >= 1.

``enumerate_occurrences`` builds Python tuples either way, so it is
only implemented once, in the pure module.
"""

from __future__ import annotations

import os

from . import _kernels_py

enumerate_occurrences = _kernels_py.enumerate_occurrences

if os.environ.get("PERMAVOID_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

contains = _impl.contains
count_occurrences = _impl.count_occurrences
copy_count_histogram = _impl.copy_count_histogram
hits_edge = _impl.hits_edge
count_edge_hits = _impl.count_edge_hits
count_avoiders = _impl.count_avoiders
count_matrix_copies = _impl.count_matrix_copies
matrix_contains_perm = _impl.matrix_contains_perm

# The pure twin stays importable under stable names so tests and the
# benchmark can compare the two backends directly.
pure = _kernels_py
