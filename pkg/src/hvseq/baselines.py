"""Partial-permutation position encoding (similarity-preserving, not shift-equivariant).

For position ``i = q*R + r`` the atomic vector is fully permuted ``q`` times,
then the ``ceil(r*m/R)`` active indices ranked highest by a fixed seeded
priority order are moved one permutation step further. Within a block the
moved set only grows with ``r``, so similarity decays roughly as ``1 - |i-j|/R``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .encoding import EncoderConfig, ItemMemory, Permutation, SparseHV, apply_perm_power
from .errors import InvalidParameter

_PRIORITY_TAG = 0x70726931


@dataclass(frozen=True)
class PartialPermConfig:
    dim: int = 10000
    m: int = 100
    radius: int = 4
    seed: int = 0

    def __post_init__(self):
        if self.m < 1 or self.dim < self.m or self.radius < 1:
            raise InvalidParameter("need 1 <= m <= dim and radius >= 1")

    @property
    def encoder_config(self) -> EncoderConfig:
        return EncoderConfig(dim=self.dim, m=self.m, radius=self.radius, seed=self.seed)

    @cached_property
    def priority(self) -> np.ndarray:
        """``priority[d]`` is the rank of dimension ``d``; higher moves first."""
        rng = np.random.default_rng([self.seed & ((1 << 64) - 1), _PRIORITY_TAG])
        ranks = rng.permutation(self.dim)
        ranks.flags.writeable = False
        return ranks


def moved_count(position: int, m: int, radius: int) -> int:
    return -(-(position % radius) * m // radius)


def partial_perm_symbol_hv(cfg: PartialPermConfig, p: Permutation, mem: ItemMemory,
                           symbol, position: int) -> SparseHV:
    if position < 0:
        raise InvalidParameter(f"partial permutation needs position >= 0, got {position}")
    base = apply_perm_power(p, position // cfg.radius, mem[symbol])
    k = moved_count(position, cfg.m, cfg.radius)
    if k == 0:
        return base
    order = np.argsort(-cfg.priority[base.active], kind="stable")
    idx = base.active.astype(np.int64).copy()
    chosen = order[:k]
    idx[chosen] = p.forward[idx[chosen]]
    return SparseHV(cfg.dim, idx)


def partial_perm_encode(cfg: PartialPermConfig, p: Permutation, mem: ItemMemory,
                        string: str, start: int = 0) -> SparseHV:
    if start < 0:
        raise InvalidParameter(f"partial permutation needs start >= 0, got {start}")
    out = np.concatenate(
        [np.empty(0, dtype=np.int32)]
        + [partial_perm_symbol_hv(cfg, p, mem, ch, start + t).active for t, ch in enumerate(string)]
    )
    return SparseHV(cfg.dim, out)


class PartialPermEncoder:
    """Bundles the permutation and item memory for one :class:`PartialPermConfig`."""

    def __init__(self, cfg: PartialPermConfig):
        self.config = cfg
        enc_cfg = cfg.encoder_config
        self.perm = enc_cfg.permutation()
        self.memory = ItemMemory(enc_cfg)

    def symbol_hv(self, symbol, position: int) -> SparseHV:
        return partial_perm_symbol_hv(self.config, self.perm, self.memory, symbol, position)

    def encode_string(self, s: str, start: int = 0) -> SparseHV:
        return partial_perm_encode(self.config, self.perm, self.memory, s, start)
