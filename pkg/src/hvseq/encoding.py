"""Sparse binary hypervectors, permutations and the shift-equivariant encoder.

A symbol ``a`` at position ``i`` is encoded as the disjunction of ``R``
consecutive permutation powers of its atomic vector::

    a_i = perm^i(e_a) | perm^(i+1)(e_a) | ... | perm^(i+R-1)(e_a)

and a sequence is the disjunction (or, for the counting path, the sum) of its
symbol vectors. Because a permutation distributes over both, shifting a whole
sequence by ``s`` positions is exactly ``perm^s`` applied to its hypervector.
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput, InvalidParameter

PERM_KINDS = ("random", "cyclic")
SUPERPOSITIONS = ("disjunction", "counting")

_SEED_MASK = (1 << 64) - 1
_PERM_TAG = 0x7065726D
_ATOM_TAG = 0x61746F6D


class SparseHV:
    """A binary hypervector of dimension ``dim`` stored as its sorted active indices."""

    __slots__ = ("dim", "active")

    def __init__(self, dim: int, active=(), *, _trusted: bool = False):
        arr = np.asarray(active, dtype=np.int32)
        if not _trusted:
            arr = np.unique(arr)
            if arr.size and (arr[0] < 0 or arr[-1] >= dim):
                raise InvalidInput(f"active index out of range for dim={dim}")
        arr.flags.writeable = False
        self.dim = int(dim)
        self.active = arr

    @classmethod
    def zeros(cls, dim: int) -> "SparseHV":
        return cls(dim, np.empty(0, dtype=np.int32), _trusted=True)

    def __len__(self) -> int:
        return int(self.active.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseHV):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.active, other.active)

    def __hash__(self) -> int:
        return hash((self.dim, self.active.tobytes()))

    def __repr__(self) -> str:
        shown = self.active[:8].tolist()
        tail = ", ..." if self.active.size > 8 else ""
        return f"SparseHV(dim={self.dim}, |x|={len(self)}, active={shown}{tail})"

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.uint8)
        out[self.active] = 1
        return out

    def union(self, other: "SparseHV") -> "SparseHV":
        _check_dims(self.dim, other.dim)
        return SparseHV(self.dim, np.union1d(self.active, other.active), _trusted=True)


class CountHV:
    """A nonnegative integer hypervector kept sparse: sorted indices plus positive counts."""

    __slots__ = ("dim", "indices", "counts")

    def __init__(self, dim: int, indices, counts):
        self.dim = int(dim)
        self.indices = np.asarray(indices, dtype=np.int32)
        self.counts = np.asarray(counts, dtype=np.int64)

    @property
    def mass(self) -> int:
        return int(self.counts.sum())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountHV):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.counts, other.counts)
        )

    def __repr__(self) -> str:
        return f"CountHV(dim={self.dim}, nnz={self.indices.size}, mass={self.mass})"

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        out[self.indices] = self.counts
        return out

    def support(self) -> SparseHV:
        return SparseHV(self.dim, self.indices, _trusted=True)


def _check_dims(a: int, b: int) -> None:
    if a != b:
        raise InvalidInput(f"dimension mismatch: {a} != {b}")


class Permutation:
    """A bijection on ``range(dim)`` with a cycle table for O(1) power lookup.

    ``members`` lists the elements cycle by cycle; element ``x`` lives in cycle
    ``cycle_of[x]`` at ``offset[x]``, so ``perm^k(x)`` is the member ``k`` steps
    further along the same cycle.
    """

    def __init__(self, forward):
        forward = np.asarray(forward, dtype=np.int64)
        dim = forward.size
        if dim < 1 or not np.array_equal(np.sort(forward), np.arange(dim)):
            raise InvalidParameter("forward is not a bijection on range(dim)")
        self.dim = dim
        self.forward = forward
        self.forward.flags.writeable = False

        fwd = forward.tolist()
        members = []
        cycle_of = [0] * dim
        offset = [0] * dim
        starts, lengths = [], []
        seen = [False] * dim
        for x in range(dim):
            if seen[x]:
                continue
            cid = len(starts)
            starts.append(len(members))
            k, y = 0, x
            while not seen[y]:
                seen[y] = True
                members.append(y)
                cycle_of[y] = cid
                offset[y] = k
                k += 1
                y = fwd[y]
            lengths.append(k)
        self.members = np.asarray(members, dtype=np.int32)
        self.cycle_of = np.asarray(cycle_of, dtype=np.int32)
        self.offset = np.asarray(offset, dtype=np.int64)
        self.cycle_start = np.asarray(starts, dtype=np.int64)
        self.cycle_len = np.asarray(lengths, dtype=np.int64)
        for arr in (self.members, self.cycle_of, self.offset, self.cycle_start, self.cycle_len):
            arr.flags.writeable = False

    def power_indices(self, idx, k) -> np.ndarray:
        """Images of ``idx`` under ``perm^k``; ``idx`` and ``k`` broadcast."""
        idx = np.asarray(idx, dtype=np.int64)
        cid = self.cycle_of[idx]
        length = self.cycle_len[cid]
        pos = np.mod(self.offset[idx] + np.asarray(k, dtype=np.int64), length)
        return self.members[self.cycle_start[cid] + pos]

    def __call__(self, x: SparseHV, k: int = 1) -> SparseHV:
        return apply_perm_power(self, k, x)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.forward, other.forward)


def gen_permutation(seed: int, dim: int, kind: str = "random", step: int = 1) -> Permutation:
    if dim < 1:
        raise InvalidParameter(f"dim must be >= 1, got {dim}")
    if kind == "random":
        rng = np.random.default_rng([int(seed) & _SEED_MASK, _PERM_TAG])
        return Permutation(rng.permutation(dim))
    if kind == "cyclic":
        if not 0 < step < dim:
            raise InvalidParameter(f"cyclic step must be in (0, {dim}), got {step}")
        return Permutation((np.arange(dim) + step) % dim)
    raise InvalidParameter(f"unknown permutation kind {kind!r}")


def apply_perm_power(p: Permutation, k: int, x: SparseHV) -> SparseHV:
    _check_dims(p.dim, x.dim)
    if k == 0 or not len(x):
        return x
    return SparseHV(x.dim, np.sort(p.power_indices(x.active, k)).astype(np.int32), _trusted=True)


def shift_hv(p: Permutation, h: SparseHV, s: int) -> SparseHV:
    """Hypervector of the sequence shifted by ``s`` positions."""
    return apply_perm_power(p, s, h)


@dataclass(frozen=True)
class EncoderConfig:
    dim: int = 10000
    m: int = 11
    radius: int = 7
    seed: int = 0
    perm_kind: str = "random"
    perm_step: int = 1
    superposition: str = "disjunction"

    def __post_init__(self):
        if self.m < 1 or self.dim < self.m:
            raise InvalidParameter(f"need 1 <= m <= dim, got m={self.m}, dim={self.dim}")
        if self.radius < 1:
            raise InvalidParameter(f"radius must be >= 1, got {self.radius}")
        if self.perm_kind not in PERM_KINDS:
            raise InvalidParameter(f"perm_kind must be one of {PERM_KINDS}")
        if self.superposition not in SUPERPOSITIONS:
            raise InvalidParameter(f"superposition must be one of {SUPERPOSITIONS}")

    def with_(self, **changes) -> "EncoderConfig":
        return replace(self, **changes)

    def permutation(self) -> Permutation:
        return _cached_permutation(self.seed, self.dim, self.perm_kind, self.perm_step)


@functools.lru_cache(maxsize=16)
def _cached_permutation(seed, dim, kind, step) -> Permutation:
    return gen_permutation(seed, dim, kind, step)


def _symbol_key(symbol) -> int:
    if isinstance(symbol, str) and len(symbol) == 1:
        return ord(symbol)
    raise InvalidInput(f"symbols are single characters, got {symbol!r}")


class ItemMemory:
    """Lazily grown symbol -> atomic hypervector table.

    Each atomic vector depends only on ``(seed, code point)``, so concurrent
    lookups may race on insertion without ever changing stored content.
    """

    def __init__(self, config: EncoderConfig, prefill: dict | None = None, frozen: bool = False):
        self.config = config
        self.frozen = frozen
        self._table: dict[str, SparseHV] = {}
        self._lock = threading.Lock()
        for sym, hv in (prefill or {}).items():
            if len(hv) != config.m or hv.dim != config.dim:
                raise InvalidParameter(f"prefilled vector for {sym!r} has wrong shape")
            self._table[sym] = hv

    def _generate(self, symbol) -> SparseHV:
        cfg = self.config
        rng = np.random.default_rng([cfg.seed & _SEED_MASK, _ATOM_TAG, _symbol_key(symbol)])
        return SparseHV(cfg.dim, rng.choice(cfg.dim, size=cfg.m, replace=False))

    def __getitem__(self, symbol) -> SparseHV:
        hv = self._table.get(symbol)
        if hv is None:
            if self.frozen:
                raise InvalidInput(f"symbol {symbol!r} is not in the item memory")
            hv = self._generate(symbol)
            with self._lock:
                hv = self._table.setdefault(symbol, hv)
        return hv

    def __contains__(self, symbol) -> bool:
        return symbol in self._table

    def __len__(self) -> int:
        return len(self._table)

    def atoms(self, symbols: Sequence) -> np.ndarray:
        """``(len(symbols), m)`` matrix of atomic active indices."""
        if not len(symbols):
            return np.empty((0, self.config.m), dtype=np.int32)
        return np.stack([self[s].active for s in symbols])


def atomic_hv(mem: ItemMemory, symbol) -> SparseHV:
    return mem[symbol]


@dataclass
class HVIndex:
    """Encoded strings in CSR form: row ``i`` holds the active indices of ``words[i]``."""

    config: EncoderConfig
    words: list
    indptr: np.ndarray
    indices: np.ndarray

    def __len__(self) -> int:
        return len(self.words)

    def row(self, i: int) -> SparseHV:
        return SparseHV(
            self.config.dim, self.indices[self.indptr[i]:self.indptr[i + 1]], _trusted=True
        )

    @property
    def sizes(self) -> np.ndarray:
        return np.diff(self.indptr)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HVIndex):
            return NotImplemented
        return (
            self.config == other.config
            and list(self.words) == list(other.words)
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )


class Encoder:
    """Encodes symbols and sequences under one :class:`EncoderConfig`."""

    def __init__(self, config: EncoderConfig, memory: ItemMemory | None = None,
                 permutation: Permutation | None = None):
        self.config = config
        self.memory = memory if memory is not None else ItemMemory(config)
        self.perm = permutation if permutation is not None else config.permutation()
        if self.perm.dim != config.dim:
            raise InvalidParameter("permutation dimension does not match config")
        self._radius_steps = np.arange(config.radius, dtype=np.int64)

    @property
    def dim(self) -> int:
        return self.config.dim

    def _raw_indices(self, symbols: Sequence, positions) -> np.ndarray:
        # (items, R, m) active indices, before superposition
        atoms = self.memory.atoms(symbols).astype(np.int64)
        powers = np.asarray(positions, dtype=np.int64)[:, None] + self._radius_steps[None, :]
        return self.perm.power_indices(atoms[:, None, :], powers[:, :, None])

    def symbol_hv(self, symbol, position: int) -> SparseHV:
        raw = self._raw_indices([symbol], [position])
        return SparseHV(self.dim, np.unique(raw).astype(np.int32), _trusted=True)

    def encode(self, items: Iterable[tuple]):
        """Superpose ``(symbol, position)`` items.

        Returns a :class:`SparseHV` for disjunction, a :class:`CountHV` for the
        counting superposition.
        """
        items = list(items)
        counting = self.config.superposition == "counting"
        if not items:
            return CountHV(self.dim, [], []) if counting else SparseHV.zeros(self.dim)
        symbols = [s for s, _ in items]
        positions = [p for _, p in items]
        raw = self._raw_indices(symbols, positions).ravel()
        if counting:
            idx, cnt = np.unique(raw, return_counts=True)
            return CountHV(self.dim, idx, cnt)
        return SparseHV(self.dim, np.unique(raw).astype(np.int32), _trusted=True)

    def encode_string(self, s: str, start: int = 0):
        return self.encode((ch, start + t) for t, ch in enumerate(s))

    def shift(self, h: SparseHV, s: int) -> SparseHV:
        return shift_hv(self.perm, h, s)

    def encode_many(self, strings: Sequence[str], start: int = 0, chunk: int = 4096) -> HVIndex:
        """Disjunction-encode many strings at ``start`` into an :class:`HVIndex`."""
        dim = self.dim
        indptr = [0]
        pieces = []
        for lo in range(0, len(strings), chunk):
            batch = strings[lo:lo + chunk]
            lengths = np.fromiter(map(len, batch), dtype=np.int64, count=len(batch))
            text = "".join(batch)
            if not text:
                indptr.extend([indptr[-1]] * len(batch))
                continue
            row_of = np.repeat(np.arange(len(batch), dtype=np.int64), lengths)
            first = np.concatenate(([0], np.cumsum(lengths)[:-1]))
            pos = np.arange(len(text), dtype=np.int64) - np.repeat(first, lengths) + start
            raw = self._raw_indices(list(text), pos)
            keys = np.unique(row_of[:, None, None] * dim + raw)
            rows = keys // dim
            pieces.append((keys - rows * dim).astype(np.int32))
            counts = np.bincount(rows, minlength=len(batch))
            indptr.extend((indptr[-1] + np.cumsum(counts)).tolist())
        indices = np.concatenate(pieces) if pieces else np.empty(0, dtype=np.int32)
        return HVIndex(self.config, list(strings), np.asarray(indptr, dtype=np.int64), indices)


def symbol_hv(enc: Encoder, symbol, position: int) -> SparseHV:
    return enc.symbol_hv(symbol, position)


def encode_sequence(enc: Encoder, items):
    return enc.encode(items)


def encode_string(enc: Encoder, s: str, start: int = 0):
    return enc.encode_string(s, start)
