"""Similarity of binary hypervectors, with and without a window of shifts."""

from __future__ import annotations

from enum import Enum

import numpy as np

from .encoding import Permutation, SparseHV, _check_dims, shift_hv
from .errors import InvalidParameter


class SimType(str, Enum):
    OVERLAP = "overlap"
    COSINE = "cos"
    JACCARD = "jac"
    SIMPSON = "simp"

    @classmethod
    def parse(cls, value) -> "SimType":
        if isinstance(value, SimType):
            return value
        aliases = {"cosine": "cos", "jaccard": "jac", "simpson": "simp"}
        try:
            return cls(aliases.get(str(value).lower(), str(value).lower()))
        except ValueError:
            raise InvalidParameter(f"unknown similarity type {value!r}") from None


def shift_set(window) -> tuple[int, ...]:
    """Expand a shift window into shifts ordered by tie-breaking priority.

    An int ``s`` means ``{-s, ..., s}``; an iterable is taken as an explicit
    set. The order is by ``(|shift|, shift)``, so a running strict maximum
    prefers the smallest magnitude, then the negative shift.
    """
    if isinstance(window, (int, np.integer)):
        if window < 0:
            raise InvalidParameter(f"shift radius must be >= 0, got {window}")
        shifts = set(range(-int(window), int(window) + 1))
    else:
        shifts = {int(s) for s in window}
    if not shifts:
        raise InvalidParameter("empty shift set")
    return tuple(sorted(shifts, key=lambda s: (abs(s), s)))


def overlap(a: SparseHV, b: SparseHV) -> int:
    """``|a AND b|``, by binary search of the smaller active list in the larger."""
    _check_dims(a.dim, b.dim)
    small, big = (a.active, b.active) if a.active.size <= b.active.size else (b.active, a.active)
    if not small.size:
        return 0
    pos = np.searchsorted(big, small)
    pos[pos == big.size] = 0
    return int(np.count_nonzero(big[pos] == small))


def normalize(ov, na, nb, t: SimType):
    """Normalized similarity from overlap and cardinalities; 0 where undefined.

    Works elementwise on numpy arrays as well as on scalars.
    """
    t = SimType.parse(t)
    if t is SimType.OVERLAP:
        return ov
    ov = np.asarray(ov, dtype=np.float64)
    na = np.asarray(na, dtype=np.float64)
    nb = np.asarray(nb, dtype=np.float64)
    if t is SimType.COSINE:
        den = np.sqrt(na * nb)
    elif t is SimType.JACCARD:
        den = na + nb - ov
    else:
        den = np.minimum(na, nb)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(den > 0, ov / np.where(den > 0, den, 1.0), 0.0)
    return float(out) if out.ndim == 0 else out


def sim(a: SparseHV, b: SparseHV, t="cos"):
    t = SimType.parse(t)
    ov = overlap(a, b)
    if t is SimType.OVERLAP:
        return ov
    return normalize(ov, len(a), len(b), t)


def sim_shiftmax(p: Permutation, a: SparseHV, b: SparseHV, shifts, t="cos"):
    """Max of ``sim(perm^s(a), b)`` over the shift set; returns ``(value, best_shift)``.

    Shifted vectors come from permuting ``a`` (equivariance), never re-encoding.
    """
    _check_dims(a.dim, b.dim)
    best_val, best_s = None, None
    for s in shift_set(shifts):
        v = sim(shift_hv(p, a, s), b, t)
        if best_val is None or v > best_val:
            best_val, best_s = v, s
    return best_val, best_s

