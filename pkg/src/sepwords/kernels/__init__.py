"""Hot inner loops, compiled when possible.

The Cython build is used when it has been compiled and imports cleanly;
otherwise the pure-Python module is loaded. Setting the environment
variable ``SEPWORDS_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels as python

if os.environ.get("SEPWORDS_PURE_PYTHON", "") not in ("", "0"):
    _impl = python
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = python

BACKEND = _impl.BACKEND

border_array = _impl.border_array
find_occurrences = _impl.find_occurrences
run_dfa = _impl.run_dfa
residue_counts = _impl.residue_counts
first_residue_difference = _impl.first_residue_difference
separating_dfa_search = _impl.separating_dfa_search
sparse_abs_eval = _impl.sparse_abs_eval
horner_abs_eval = _impl.horner_abs_eval


def compiled():
    """Return the compiled kernel module, or ``None`` if it is unavailable."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels
