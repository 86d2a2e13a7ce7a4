"""Kernel backend selection.

KSWAP_BACKEND=numba forces the @njit kernels (ImportError if numba is
missing), KSWAP_BACKEND=numpy forces the pure-numpy fallback.  Unset,
numba is used when importable.  benchmarks/compare_backends.py times
one against the other.
"""
from __future__ import annotations

import os

_CHOICE = os.environ.get("KSWAP_BACKEND", "").strip().lower()

if _CHOICE not in ("", "numba", "numpy"):
    raise ImportError(
        f"KSWAP_BACKEND={_CHOICE!r} is not recognized (use 'numba' or 'numpy')"
    )

if _CHOICE == "numpy":
    from . import numpy_backend as _impl
elif _CHOICE == "numba":
    from . import numba_backend as _impl
else:
    try:
        from . import numba_backend as _impl
    except ImportError:
        from . import numpy_backend as _impl

BACKEND_NAME = _impl.BACKEND_NAME

popcount = _impl.popcount
bit_indices = _impl.bit_indices
degrees_in = _impl.degrees_in
build_table = _impl.build_table
pack_chunk = _impl.pack_chunk
fvs_qe = _impl.fvs_qe
scan_join = _impl.scan_join
sd_won_trace = _impl.sd_won_trace
ld_bin = _impl.ld_bin
build_candidates = _impl.build_candidates
exists_improvement = _impl.exists_improvement
apply_improvement = _impl.apply_improvement


def get_backend(name: str):
    """Import a backend module by name ('numba' or 'numpy')."""
    if name == "numpy":
        from . import numpy_backend
        return numpy_backend
    if name == "numba":
        from . import numba_backend
        return numba_backend
    raise ValueError(f"unknown kernel backend {name!r}")
