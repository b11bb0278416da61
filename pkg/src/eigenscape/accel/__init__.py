"""Backend selection for the numeric hot loops.

The environment variable ``EIGENSCAPE_ACCEL`` picks the implementation:

* ``numba``: require the jit backend (ImportError if numba is absent),
* ``numpy``: force the pure-numpy fallback,
* unset/empty: numba when importable, numpy otherwise.

Both backends expose ``bisect_times``, ``heat_pair_sums``, ``oracle_inner``
and a ``BACKEND`` name string.
"""

import os


def _load():
    choice = os.environ.get("EIGENSCAPE_ACCEL", "").strip().lower()
    if choice == "numpy":
        from . import _numpy as impl
        return impl
    if choice == "numba":
        from . import _numba as impl
        return impl
    if choice:
        raise ValueError(
            f"EIGENSCAPE_ACCEL={choice!r}: expected 'numba', 'numpy' or unset"
        )
    try:
        from . import _numba as impl
    except ImportError:
        from . import _numpy as impl
    return impl


_impl = _load()

BACKEND = _impl.BACKEND
bisect_times = _impl.bisect_times
heat_pair_sums = _impl.heat_pair_sums
oracle_inner = _impl.oracle_inner
