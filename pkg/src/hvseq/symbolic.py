"""String similarity measures that need no hypervectors.

``symov`` counts pairs of equal symbols within the similarity radius ``R``,
each weighted ``1 - |i - j| / R``. It is what the hypervector overlap would be
if symbol vectors were summed instead of OR-ed and atomic vectors never
collided. All ``symov`` sums are kept as integers scaled by ``R``.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from . import kernels
from .errors import InvalidInput, InvalidParameter
from .similarity import SimType, normalize, shift_set


@dataclass(frozen=True)
class PositionedString:
    """Symbols at consecutive positions ``start, start + 1, ...``."""

    symbols: str
    start: int = 0

    def __len__(self) -> int:
        return len(self.symbols)

    def shifted(self, s: int) -> "PositionedString":
        return PositionedString(self.symbols, self.start + s)


StringLike = Union[str, PositionedString]


def as_positioned(x: StringLike) -> PositionedString:
    return x if isinstance(x, PositionedString) else PositionedString(x, 0)


def symov_scaled(a: StringLike, b: StringLike, radius: int) -> int:
    """``R * symov(a, b, R)``, an exact nonnegative integer."""
    if radius < 1:
        raise InvalidParameter(f"radius must be >= 1, got {radius}")
    a, b = as_positioned(a), as_positioned(b)
    buckets = defaultdict(list)
    for t, ch in enumerate(b.symbols):
        buckets[ch].append(b.start + t)
    total = 0
    for t, ch in enumerate(a.symbols):
        where = buckets.get(ch)
        if not where:
            continue
        pa = a.start + t
        lo = bisect.bisect_left(where, pa - radius)
        hi = bisect.bisect_right(where, pa + radius)
        for pb in where[lo:hi]:
            total += radius - abs(pa - pb)
    return total


def symov(a: StringLike, b: StringLike, radius: int) -> Fraction:
    return Fraction(symov_scaled(a, b, radius), radius)


def symov_norm(x: StringLike, radius: int) -> Fraction:
    return symov(x, x, radius)


def sim_sym(a: StringLike, b: StringLike, radius: int, t="cos"):
    """Normalized symbolic similarity; 0 when either string is empty.

    For ``t="overlap"`` the exact :class:`~fractions.Fraction` is returned.
    """
    t = SimType.parse(t)
    s = symov_scaled(a, b, radius)
    if t is SimType.OVERLAP:
        return Fraction(s, radius)
    na = symov_scaled(a, a, radius)
    nb = symov_scaled(b, b, radius)
    # the common factor R cancels in every normalized type
    return normalize(s, na, nb, t)


def sim_sym_shiftmax(a: StringLike, b: StringLike, radius: int, shifts, t="cos"):
    """Max of ``sim_sym`` over shifted copies of ``a``; returns ``(value, best_shift)``."""
    a, b = as_positioned(a), as_positioned(b)
    best_val, best_s = None, None
    for s in shift_set(shifts):
        v = sim_sym(a.shifted(s), b, radius, t)
        if best_val is None or v > best_val:
            best_val, best_s = v, s
    return best_val, best_s


def levenshtein(a: str, b: str, normalized: bool = False):
    """Unit-cost edit distance; ``normalized`` divides by the longer length (0/0 = 0)."""
    flat = kernels.codes(b)
    d = int(kernels.levenshtein_batch(kernels.codes(a), flat, np.array([0, len(b)]))[0])
    if not normalized:
        return d
    longest = max(len(a), len(b))
    return d / longest if longest else 0.0


HAMMING_MODES = ("sim_matches", "dist_mismatches", "shift_distance")


def hamming_and_shift(a: str, b: str, mode: str = "dist_mismatches") -> int:
    if len(a) != len(b):
        raise InvalidInput(f"length mismatch: {len(a)} != {len(b)}")
    if mode == "sim_matches":
        return sum(x == y for x, y in zip(a, b))
    if mode == "dist_mismatches":
        return sum(x != y for x, y in zip(a, b))
    if mode == "shift_distance":
        if not a:
            return 0
        return min(
            sum(x != y for x, y in zip(a[k:] + a[:k], b)) for k in range(len(a))
        )
    raise InvalidParameter(f"unknown mode {mode!r}; expected one of {HAMMING_MODES}")
