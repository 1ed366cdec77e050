"""Pure numpy/Python versions of the scan kernels in ``_ext.pyx``.

Used when the compiled extension is unavailable or ``HVSEQ_PURE=1``.
Results are identical to the compiled versions; only speed differs.
"""

import numpy as np


def csr_overlap(indptr, indices, mask):
    hits = np.concatenate(([0], np.cumsum(mask[indices], dtype=np.int64)))
    return (hits[indptr[1:]] - hits[indptr[:-1]]).astype(np.int32)


def _lev(a, b):
    row = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        diag, row[0] = row[0], i
        ai = a[i - 1]
        for j in range(1, len(b) + 1):
            up = row[j]
            row[j] = min(diag + (ai != b[j - 1]), up + 1, row[j - 1] + 1)
            diag = up
    return row[-1]


def levenshtein_batch(query, flat, indptr):
    q = query.tolist()
    f = flat.tolist()
    bounds = indptr.tolist()
    return np.array(
        [_lev(q, f[bounds[i]:bounds[i + 1]]) for i in range(len(bounds) - 1)],
        dtype=np.int32,
    )


def symov_batch(query, offset, flat, indptr, radius):
    q = query.tolist()
    f = flat.tolist()
    bounds = indptr.tolist()
    out = np.empty(len(bounds) - 1, dtype=np.int64)
    for i in range(len(bounds) - 1):
        base, lb = bounds[i], bounds[i + 1] - bounds[i]
        s = 0
        for p, sym in enumerate(q):
            c = p + offset
            for j in range(max(0, c - radius), min(lb - 1, c + radius) + 1):
                if f[base + j] == sym:
                    s += radius - abs(c - j)
        out[i] = s
    return out


def hinge_sgd_epoch(indptr, indices, y, order, w, state, lam):
    """One Pegasos pass; ``state`` holds (scale, bias, t) and is updated in place."""
    scale, bias, t = float(state[0]), float(state[1]), float(state[2])
    for r in order.tolist():
        t += 1.0
        eta = 1.0 / (lam * t)
        yi = y[r]
        idx = indices[indptr[r]:indptr[r + 1]]
        score = scale * w[idx].sum() + bias
        scale *= 1.0 - eta * lam
        if yi * score < 1.0:
            w[idx] += eta * yi / scale
            bias += eta * yi
        if scale < 1e-9:
            w *= scale
            scale = 1.0
    state[0], state[1], state[2] = scale, bias, t
