"""Backend selection for the scan kernels.

The compiled extension is used when importable; set ``HVSEQ_PURE=1`` to force
the pure fallback. All wrappers coerce arguments to the dtypes both backends
expect, so callers can pass plain lists or arrays.
"""

import os

import numpy as np

from . import _pure

try:
    if os.environ.get("HVSEQ_PURE"):
        raise ImportError("pure backend forced")
    from . import _ext as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pure
    BACKEND = "python"


def _i32(a):
    return np.ascontiguousarray(a, dtype=np.int32)


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def csr_overlap(indptr, indices, mask, impl=None):
    """Per-row count of active indices that are set in ``mask``."""
    impl = impl or _impl
    return impl.csr_overlap(_i64(indptr), _i32(indices), np.ascontiguousarray(mask, dtype=np.uint8))


def levenshtein_batch(query, flat, indptr, impl=None):
    impl = impl or _impl
    return impl.levenshtein_batch(_i32(query), _i32(flat), _i64(indptr))


def symov_batch(query, offset, flat, indptr, radius, impl=None):
    """Scaled symbolic overlap of ``query`` (placed at ``offset``) against each row."""
    impl = impl or _impl
    return impl.symov_batch(_i32(query), int(offset), _i32(flat), _i64(indptr), int(radius))


def hinge_sgd_epoch(indptr, indices, y, order, w, state, lam, impl=None):
    impl = impl or _impl
    impl.hinge_sgd_epoch(
        _i64(indptr), _i32(indices), np.ascontiguousarray(y, dtype=np.float64),
        _i64(order), w, state, float(lam),
    )


def codes(s):
    """Code points of a string as int32."""
    return np.fromiter(map(ord, s), dtype=np.int32, count=len(s))


def pack_strings(strings):
    """Flatten strings into (codes, indptr) CSR form."""
    lengths = np.fromiter(map(len, strings), dtype=np.int64, count=len(strings))
    indptr = np.zeros(len(strings) + 1, dtype=np.int64)
    np.cumsum(lengths, out=indptr[1:])
    flat = codes("".join(strings))
    return flat, indptr
