"""Corpus loaders and the binary hypervector index format.

Index layout (little-endian)::

    b"HVSQ1"
    u32 dim, u32 m, u32 R, u64 seed, u8 perm kind (0 random, 1 cyclic), u32 step
    varint n_entries
    per entry: varint len(word utf-8), word bytes, varint n_active,
               n_active varints of successive index deltas
"""

from __future__ import annotations

import logging
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .encoding import EncoderConfig, HVIndex
from .errors import FormatError, IndexVersionError

log = logging.getLogger(__name__)

MAGIC = b"HVSQ1"
_HEADER = struct.Struct("<IIIQBI")
_PERM_CODES = {"random": 0, "cyclic": 1}

SPLICE_LABELS = {"EI": "EI", "IE": "IE", "N": "N", "NEITHER": "N"}


@dataclass(frozen=True)
class SpellQuery:
    query: str
    correct: str


@dataclass(frozen=True)
class LabeledSequence:
    label: str
    name: str
    sequence: str


def _read_lines(path) -> list[str]:
    return Path(path).read_text(encoding="utf-8").splitlines()


def _fold(word: str) -> str:
    # ASCII-only case folding; other characters pass through verbatim
    return word.translate(_ASCII_LOWER)


_ASCII_LOWER = str.maketrans("ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz")


def load_dictionary(path) -> list[str]:
    """One word per line; trimmed, lowercased, deduplicated in first-seen order."""
    seen = {}
    for line in _read_lines(path):
        word = _fold(line.strip())
        if word:
            seen.setdefault(word, None)
    return list(seen)


def detect_misspelling_format(path) -> str:
    for line in _read_lines(path):
        if line.strip():
            return "dollar" if line.lstrip().startswith("$") else "tab"
    return "tab"


def load_misspellings(path, format: str = "auto", swap_columns: bool = False) -> list[SpellQuery]:
    """Parse a misspelling test set.

    ``tab``: ``misspelling<TAB>correct`` per line (``swap_columns`` for the
    reverse order). ``dollar``: ``$correct`` lines, each followed by its
    misspellings. ``auto`` picks ``dollar`` when the first non-blank line
    starts with ``$``.
    """
    if format == "auto":
        format = detect_misspelling_format(path)
    if format not in ("tab", "dollar"):
        raise FormatError(f"unknown misspelling format {format!r}")
    queries = []
    skipped = 0
    correct = None
    for line in _read_lines(path):
        text = line.strip()
        if not text:
            continue
        if format == "tab":
            fields = [f.strip() for f in line.split("\t")]
            if len(fields) != 2 or not fields[0] or not fields[1]:
                skipped += 1
                continue
            wrong, right = fields[::-1] if swap_columns else fields
            queries.append(SpellQuery(_fold(wrong), _fold(right)))
        elif text.startswith("$"):
            correct = _fold(text[1:].strip()) or None
        elif correct is None:
            skipped += 1
        else:
            queries.append(SpellQuery(_fold(text), correct))
    if skipped:
        log.warning("skipped %d malformed line(s) in %s", skipped, path)
    if not queries:
        raise FormatError(f"no misspelling queries parsed from {path}")
    return queries


def load_splice(path) -> list[LabeledSequence]:
    """Parse UCI ``splice.data``: ``LABEL, NAME, SEQUENCE`` per line."""
    records = []
    for lineno, line in enumerate(_read_lines(path), 1):
        if not line.strip():
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise FormatError(f"{path}:{lineno}: expected 3 comma-separated fields")
        label = SPLICE_LABELS.get(parts[0].upper())
        if label is None:
            raise FormatError(f"{path}:{lineno}: unknown label {parts[0]!r}")
        seq = "".join(parts[2].split()).upper()
        if not seq:
            raise FormatError(f"{path}:{lineno}: empty sequence")
        records.append(LabeledSequence(label, parts[1], seq))
    lengths = {len(r.sequence) for r in records}
    if len(lengths) > 1:
        log.warning("splice sequences have mixed lengths %s", sorted(lengths))
    return records


def encode_varints(values) -> bytes:
    out = bytearray()
    for v in values:
        v = int(v)
        if v < 0:
            raise ValueError("varints are unsigned")
        while v >= 0x80:
            out.append((v & 0x7F) | 0x80)
            v >>= 7
        out.append(v)
    return bytes(out)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise FormatError("truncated index file")
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def varint(self) -> int:
        shift = value = 0
        while True:
            b = self.take(1)[0]
            value |= (b & 0x7F) << shift
            if b < 0x80:
                return value
            shift += 7


def delta_encode(active) -> list[int]:
    active = np.asarray(active, dtype=np.int64)
    return np.diff(active, prepend=0).tolist()


def save_index(path, index: HVIndex) -> None:
    cfg = index.config
    buf = bytearray(MAGIC)
    buf += _HEADER.pack(cfg.dim, cfg.m, cfg.radius, cfg.seed & ((1 << 64) - 1),
                        _PERM_CODES[cfg.perm_kind], cfg.perm_step)
    buf += encode_varints([len(index)])
    for i, word in enumerate(index.words):
        raw = word.encode("utf-8")
        row = index.indices[index.indptr[i]:index.indptr[i + 1]]
        buf += encode_varints([len(raw)])
        buf += raw
        buf += encode_varints([row.size])
        buf += encode_varints(delta_encode(row))
    Path(path).write_bytes(bytes(buf))


def load_index(path, expected: EncoderConfig | None = None) -> HVIndex:
    """Read an index; raise :class:`IndexVersionError` on a bad magic or config mismatch."""
    r = _Reader(Path(path).read_bytes())
    if r.take(len(MAGIC)) != MAGIC:
        raise IndexVersionError(f"{path} is not an HVSQ1 index")
    dim, m, radius, seed, kind, step = _HEADER.unpack(r.take(_HEADER.size))
    kinds = {v: k for k, v in _PERM_CODES.items()}
    if kind not in kinds:
        raise IndexVersionError(f"unknown permutation kind code {kind}")
    cfg = EncoderConfig(dim=dim, m=m, radius=radius, seed=seed, perm_kind=kinds[kind], perm_step=step)
    if expected is not None:
        ours = expected.with_(superposition="disjunction")
        if ours.with_(seed=ours.seed & ((1 << 64) - 1)) != cfg:
            raise IndexVersionError(f"index config {cfg} does not match {expected}")
    n = r.varint()
    words, indptr, chunks = [], [0], []
    for _ in range(n):
        words.append(r.take(r.varint()).decode("utf-8"))
        k = r.varint()
        deltas = [r.varint() for _ in range(k)]
        chunks.append(np.cumsum(deltas, dtype=np.int64))
        indptr.append(indptr[-1] + k)
    if r.pos != len(r.data):
        raise FormatError(f"{path}: trailing bytes after index entries")
    indices = np.concatenate(chunks).astype(np.int32) if chunks else np.empty(0, dtype=np.int32)
    if indices.size and indices.max() >= dim:
        raise FormatError(f"{path}: active index out of range")
    return HVIndex(cfg, words, np.asarray(indptr, dtype=np.int64), indices)
