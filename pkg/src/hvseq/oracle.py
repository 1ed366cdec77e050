"""Block-disjoint "ideal" encoder used as ground truth.

Symbol number ``a`` owns index block ``[a*m, (a+1)*m)`` and the permutation is
a cyclic shift by ``A*m``, so the atomic vector of ``(a, i)`` is block
``a + i*A``. Within a window of ``L`` positions no two atomic vectors share an
index. With additive superposition the dot product of two sequence vectors
then equals ``m * R * symov`` exactly.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .encoding import CountHV, Encoder, EncoderConfig, ItemMemory, SparseHV, _check_dims
from .errors import InvalidParameter, OutOfWindowError


def block_disjoint_config(alphabet: Sequence[str], window: int, m: int, radius: int,
                          superposition: str = "disjunction"):
    """Return ``(config, memory)`` for the block-disjoint construction.

    ``window`` must be at least 2 so the cyclic step ``A*m`` stays below ``D``.
    """
    alphabet = list(alphabet)
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise InvalidParameter("alphabet must be nonempty with distinct symbols")
    if m < 1 or radius < 1 or window < radius or window < 2:
        raise InvalidParameter(f"need m >= 1 and window >= max(radius, 2) >= 1 "
                               f"(m={m}, window={window}, radius={radius})")
    step = len(alphabet) * m
    cfg = EncoderConfig(
        dim=step * window, m=m, radius=radius, seed=0,
        perm_kind="cyclic", perm_step=step, superposition=superposition,
    )
    prefill = {
        sym: SparseHV(cfg.dim, np.arange(a * m, (a + 1) * m), _trusted=True)
        for a, sym in enumerate(alphabet)
    }
    return cfg, ItemMemory(cfg, prefill=prefill, frozen=True)


def oracle_window(cfg: EncoderConfig) -> int:
    """Number of positions in the window of an oracle config."""
    return cfg.dim // cfg.perm_step


def counting_encode(cfg: EncoderConfig, mem: ItemMemory, items: Iterable[tuple]) -> CountHV:
    """Additive superposition of ``(symbol, position)`` items inside the window."""
    items = list(items)
    window = oracle_window(cfg)
    for sym, pos in items:
        if pos < 0 or pos + cfg.radius > window:
            raise OutOfWindowError(
                f"{sym!r}@{pos} leaves the window [0, {window}) for radius {cfg.radius}"
            )
    counting = cfg.with_(superposition="counting")
    return Encoder(counting, mem, counting.permutation()).encode(items)


def counting_encode_string(cfg: EncoderConfig, mem: ItemMemory, s: str, start: int = 0) -> CountHV:
    return counting_encode(cfg, mem, ((ch, start + t) for t, ch in enumerate(s)))


def count_dot(x: CountHV, y: CountHV) -> int:
    _check_dims(x.dim, y.dim)
    _, ix, iy = np.intersect1d(x.indices, y.indices, assume_unique=True, return_indices=True)
    return int(np.dot(x.counts[ix], y.counts[iy]))
