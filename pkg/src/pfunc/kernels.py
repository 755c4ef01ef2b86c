"""Kernel backend selection.

The compiled extension is used when it was built; otherwise, or when
``PFUNC_PURE_PYTHON=1`` is set, the pure-Python kernels are used.
"""

import os

if os.environ.get("PFUNC_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

NOT_P_FUNCTION = _impl.NOT_P_FUNCTION
EXACT = _impl.EXACT
CONSERVATIVE = _impl.CONSERVATIVE

level_groups = _impl.level_groups
cumulative_masses = _impl.cumulative_masses
is_canonic = _impl.is_canonic
classify = _impl.classify
tail_mass = _impl.tail_mass
scaled_min = _impl.scaled_min
