"""Top-n spellcheck evaluation by exhaustive similarity scan of a dictionary."""

from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .. import kernels
from ..encoding import Encoder, EncoderConfig, HVIndex
from ..errors import InvalidInput
from ..similarity import SimType, normalize, shift_set
from ..symbolic import symov_scaled


class HVScorer:
    """Shift-max hypervector similarity; the shift set is applied to the query only."""

    def __init__(self, config: EncoderConfig, shifts=0, simtype="cos"):
        self.config = config
        self.shifts = shift_set(shifts)
        self.simtype = SimType.parse(simtype)
        self.encoder = Encoder(config)
        self.index: HVIndex | None = None

    def fit(self, words: Sequence[str], index: HVIndex | None = None) -> "HVScorer":
        if index is not None:
            if index.config.with_(superposition="disjunction") != self.config.with_(
                superposition="disjunction"
            ) or list(index.words) != list(words):
                raise InvalidInput("prebuilt index does not match the scorer config or words")
            self.index = index
        else:
            self.index = self.encoder.encode_many(list(words))
        self._sizes = self.index.sizes
        return self

    def score(self, query: str) -> np.ndarray:
        q = self.encoder.encode_string(query, 0)
        best = None
        mask = np.zeros(self.config.dim, dtype=np.uint8)
        for s in self.shifts:
            hv = self.encoder.shift(q, s)
            mask[:] = 0
            mask[hv.active] = 1
            ov = kernels.csr_overlap(self.index.indptr, self.index.indices, mask)
            vals = np.asarray(normalize(ov, len(hv), self._sizes, self.simtype), dtype=np.float64)
            best = vals if best is None else np.maximum(best, vals)
        return best


class SymScorer:
    """Shift-max symbolic similarity against every dictionary word."""

    def __init__(self, radius: int, shifts=0, simtype="cos"):
        self.radius = int(radius)
        self.shifts = shift_set(shifts)
        self.simtype = SimType.parse(simtype)

    def fit(self, words: Sequence[str]) -> "SymScorer":
        self.flat, self.indptr = kernels.pack_strings(list(words))
        self.norms = np.array([symov_scaled(w, w, self.radius) for w in words], dtype=np.int64)
        return self

    def score(self, query: str) -> np.ndarray:
        q = kernels.codes(query)
        nq = symov_scaled(query, query, self.radius)
        best = None
        for s in self.shifts:
            ov = kernels.symov_batch(q, s, self.flat, self.indptr, self.radius)
            if self.simtype is SimType.OVERLAP:
                vals = ov / self.radius
            else:
                vals = np.asarray(normalize(ov, nq, self.norms, self.simtype), dtype=np.float64)
            best = vals if best is None else np.maximum(best, vals)
        return best


class LevScorer:
    """Negated Levenshtein distance, optionally divided by the longer length."""

    def __init__(self, normalized: bool = False):
        self.normalized = normalized

    def fit(self, words: Sequence[str]) -> "LevScorer":
        self.flat, self.indptr = kernels.pack_strings(list(words))
        self.lengths = np.diff(self.indptr)
        return self

    def score(self, query: str) -> np.ndarray:
        d = kernels.levenshtein_batch(kernels.codes(query), self.flat, self.indptr).astype(np.float64)
        if self.normalized:
            longest = np.maximum(self.lengths, len(query)).astype(np.float64)
            d = np.where(longest > 0, d / np.where(longest > 0, longest, 1.0), 0.0)
        return -d


@dataclass
class QueryTrace:
    query: str
    correct: str
    rank: int | None
    best: str

    @property
    def in_dictionary(self) -> bool:
        return self.rank is not None


@dataclass
class TopNReport:
    ns: tuple
    t: int
    hits: dict
    traces: list = field(default_factory=list)

    @property
    def accuracy(self) -> dict:
        return {n: 100.0 * self.hits[n] / self.t if self.t else 0.0 for n in self.ns}

    @property
    def missing(self) -> int:
        return sum(1 for tr in self.traces if not tr.in_dictionary)

    def top_mean(self) -> float:
        """Average of Top-1..Top-10 from the traces."""
        ranks = [tr.rank for tr in self.traces]
        return float(np.mean([
            100.0 * sum(1 for r in ranks if r is not None and r < n) / self.t for n in range(1, 11)
        ]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("n,hits,t,top_n\n")
        for n in self.ns:
            buf.write(f"{n},{self.hits[n]},{self.t},{self.accuracy[n]:.6g}\n")
        return buf.getvalue()

    def traces_csv(self) -> str:
        buf = io.StringIO()
        buf.write("query,correct,rank,best,in_dictionary\n")
        for tr in self.traces:
            rank = "" if tr.rank is None else tr.rank + 1
            buf.write(f"{tr.query},{tr.correct},{rank},{tr.best},{int(tr.in_dictionary)}\n")
        return buf.getvalue()


def _rank_query(scorer, query, correct_idx, lex_rank):
    scores = scorer.score(query)
    top = scores.max()
    tied = np.flatnonzero(scores == top)
    best = int(tied[np.argmin(lex_rank[tied])])
    if correct_idx is None:
        return None, best
    sc = scores[correct_idx]
    ahead = np.count_nonzero(scores > sc)
    ahead += np.count_nonzero((scores == sc) & (lex_rank < lex_rank[correct_idx]))
    return int(ahead), best


def topn_eval(words: Sequence[str], queries, ns=(1, 3, 5, 10), scorer=None,
              workers: int = 1, fitted: bool = False) -> TopNReport:
    """Rank the dictionary for each query and count Top-n hits.

    Ranking is by descending score, ties by ascending lexicographic word order.
    Queries whose correct word is absent from the dictionary count as misses
    and carry ``rank=None`` in the trace.
    """
    words = list(words)
    if not words:
        raise InvalidInput("dictionary is empty")
    if not fitted:
        scorer.fit(words)
    ns = tuple(sorted(set(int(n) for n in ns)))
    lex_rank = np.empty(len(words), dtype=np.int64)
    lex_rank[np.argsort(np.array(words, dtype=object), kind="stable")] = np.arange(len(words))
    where = {w: i for i, w in enumerate(words)}

    def run(q):
        return _rank_query(scorer, q.query, where.get(q.correct), lex_rank)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, queries))
    else:
        results = [run(q) for q in queries]

    traces = [QueryTrace(q.query, q.correct, rank, words[best])
              for q, (rank, best) in zip(queries, results)]
    hits = {n: sum(1 for tr in traces if tr.rank is not None and tr.rank < n) for n in ns}
    return TopNReport(ns, len(traces), hits, traces)
