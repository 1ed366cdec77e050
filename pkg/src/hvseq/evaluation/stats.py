"""Pearson correlation and the prime/target timing harness."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..encoding import Encoder, EncoderConfig
from ..errors import FormatError, InvalidInput, UndefinedCorrelationError
from ..similarity import sim_shiftmax
from ..symbolic import levenshtein, sim_sym_shiftmax


def pearson(xs, ys) -> float:
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise InvalidInput("pearson needs two 1-d sequences of equal length")
    if x.size < 2:
        raise InvalidInput("pearson needs at least two points")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelationError("zero variance")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class PrimePair:
    prime: str
    target: str
    time: float


def load_pairs(path) -> list[PrimePair]:
    """CSV with header ``prime,target,time``."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"prime", "target", "time"} <= set(reader.fieldnames):
            raise FormatError(f"{path}: expected header prime,target,time")
        pairs = [PrimePair(r["prime"].strip(), r["target"].strip(), float(r["time"])) for r in reader]
    if len(pairs) < 2:
        raise FormatError(f"{path}: need at least two pairs")
    return pairs


@dataclass
class CorrReport:
    per_realization: list

    @property
    def mean(self) -> float:
        return float(np.mean(self.per_realization))

    @property
    def std(self) -> float:
        return float(np.std(self.per_realization))


def pair_similarities(pairs, mode: str, config: EncoderConfig, shifts, simtype) -> list:
    if mode == "hv":
        enc = Encoder(config)
        return [
            sim_shiftmax(enc.perm, enc.encode_string(p.prime), enc.encode_string(p.target),
                         shifts, simtype)[0]
            for p in pairs
        ]
    if mode == "sym":
        return [sim_sym_shiftmax(p.prime, p.target, config.radius, shifts, simtype)[0] for p in pairs]
    if mode == "lev":
        return [levenshtein(p.prime, p.target) for p in pairs]
    if mode == "lev-max":
        return [levenshtein(p.prime, p.target, normalized=True) for p in pairs]
    raise InvalidInput(f"unknown mode {mode!r}")


def corr_eval(pairs, config: EncoderConfig, shifts=0, simtype="cos", mode: str = "hv",
              realizations: int = 1) -> CorrReport:
    """Pearson r between pair similarities and times; HV mode repeats over seeds ``seed + r``."""
    times = [p.time for p in pairs]
    runs = realizations if mode == "hv" else 1
    rs = [
        pearson(pair_similarities(pairs, mode, config.with_(seed=config.seed + r), shifts, simtype), times)
        for r in range(runs)
    ]
    return CorrReport(rs)


def write_pairs(path, pairs) -> None:
    with open(Path(path), "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["prime", "target", "time"])
        for p in pairs:
            w.writerow([p.prime, p.target, p.time])
