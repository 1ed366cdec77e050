"""Sequence classification by kNN, class prototypes and one-vs-rest linear SVM."""

from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .. import kernels
from ..encoding import Encoder, EncoderConfig
from ..errors import InvalidInput, InvalidParameter
from ..similarity import SimType, normalize, shift_set
from ..symbolic import symov_scaled


def knn_vote(sims, labels: Sequence, k: int):
    """Majority label of the ``k`` most similar items.

    Equal similarities rank by ascending item index; a tied vote goes to the
    tied label whose best item ranks first.
    """
    n = len(labels)
    if n == 0:
        raise InvalidInput("empty training set")
    if not 1 <= k <= n:
        raise InvalidParameter(f"need 1 <= k <= {n}, got {k}")
    order = np.argsort(-np.asarray(sims, dtype=np.float64), kind="stable")[:k]
    votes: dict = {}
    for i in order:
        votes[labels[i]] = votes.get(labels[i], 0) + 1
    top = max(votes.values())
    for i in order:
        if votes[labels[i]] == top:
            return labels[i]


def knn_classify(train, query, k: int, similarity):
    """``train`` is a list of ``(item, label)``; ``similarity(item, query)`` scores items."""
    if not train:
        raise InvalidInput("empty training set")
    sims = [similarity(item, query) for item, _ in train]
    return knn_vote(sims, [label for _, label in train], k)


def _csr(index) -> sp.csr_matrix:
    data = np.ones(index.indices.size, dtype=np.float64)
    return sp.csr_matrix((data, index.indices, index.indptr), shape=(len(index), index.config.dim))


def prototype_scores(train: sp.csr_matrix, train_labels, test: sp.csr_matrix, classes):
    """Cosine between each test row and each class's summed training rows."""
    for c in classes:
        if not np.any(np.asarray(train_labels) == c):
            raise InvalidInput(f"class {c!r} has no training items")
    protos = np.vstack([
        np.asarray(train[np.flatnonzero(np.asarray(train_labels) == c)].sum(axis=0)).ravel()
        for c in classes
    ])
    dots = np.asarray(test @ protos.T)
    pnorm = np.sqrt((protos ** 2).sum(axis=1))
    qnorm = np.sqrt(np.asarray(test.sum(axis=1)).ravel())
    den = qnorm[:, None] * pnorm[None, :]
    return np.where(den > 0, dots / np.where(den > 0, den, 1.0), 0.0)


def prototype_classify(train, query_hv, classes=None):
    """``train`` is a list of ``(SparseHV, label)``; ties go to the first label in ``classes``."""
    if not train:
        raise InvalidInput("empty training set")
    labels = [label for _, label in train]
    classes = sorted(set(labels)) if classes is None else list(classes)
    dim = query_hv.dim
    rows = [hv.active for hv, _ in train]
    indptr = np.concatenate(([0], np.cumsum([r.size for r in rows])))
    X = sp.csr_matrix((np.ones(indptr[-1]), np.concatenate(rows), indptr), shape=(len(rows), dim))
    q = sp.csr_matrix((np.ones(len(query_hv)), query_hv.active, [0, len(query_hv)]), shape=(1, dim))
    return classes[int(np.argmax(prototype_scores(X, labels, q, classes)[0]))]


@dataclass
class LinearModel:
    classes: list
    weights: np.ndarray
    bias: np.ndarray
    C: float
    epochs: int
    seed: int

    def decision(self, X: sp.csr_matrix) -> np.ndarray:
        return np.asarray(X @ self.weights.T) + self.bias[None, :]

    def predict(self, X: sp.csr_matrix) -> list:
        return [self.classes[i] for i in np.argmax(self.decision(X), axis=1)]


def train_linear(X: sp.csr_matrix, labels: Sequence, C: float = 100.0, epochs: int = 10,
                 seed: int = 0) -> LinearModel:
    """One-vs-rest hinge-loss models trained by seeded Pegasos subgradient descent.

    ``X`` holds binary rows; regularization is ``lambda = 1 / (C * n)``.
    """
    labels = np.asarray(labels)
    classes = sorted(set(labels.tolist()))
    if len(classes) < 2:
        raise InvalidInput("need at least two classes")
    if C <= 0 or epochs < 1:
        raise InvalidParameter("need C > 0 and epochs >= 1")
    X = sp.csr_matrix(X)
    n, dim = X.shape
    lam = 1.0 / (C * n)
    weights = np.zeros((len(classes), dim))
    bias = np.zeros(len(classes))
    for ci, c in enumerate(classes):
        y = np.where(labels == c, 1.0, -1.0)
        rng = np.random.default_rng([seed & ((1 << 64) - 1), ci])
        w = np.zeros(dim)
        state = np.array([1.0, 0.0, 1.0])
        for _ in range(epochs):
            kernels.hinge_sgd_epoch(X.indptr, X.indices, y, rng.permutation(n), w, state, lam)
        weights[ci] = w * state[0]
        bias[ci] = state[1]
    return LinearModel(classes, weights, bias, C, epochs, seed)


class Method:
    """A classifier that featurizes all sequences once, then fits per fold."""

    def prepare(self, sequences: Sequence[str]) -> None:
        raise NotImplementedError

    def fit_predict(self, train_idx, train_labels, test_idx, fold: int) -> list:
        raise NotImplementedError


class _HVMethod(Method):
    def __init__(self, config: EncoderConfig):
        self.config = config

    def prepare(self, sequences):
        self.X = _csr(Encoder(self.config).encode_many(list(sequences)))
        self.sizes = np.asarray(self.X.sum(axis=1)).ravel()


class HVKnn(_HVMethod):
    def __init__(self, config: EncoderConfig, k: int, simtype="cos"):
        super().__init__(config)
        self.k = k
        self.simtype = SimType.parse(simtype)

    def fit_predict(self, train_idx, train_labels, test_idx, fold):
        ov = np.asarray((self.X[test_idx] @ self.X[train_idx].T).todense())
        sims = normalize(ov, self.sizes[test_idx][:, None], self.sizes[train_idx][None, :], self.simtype)
        return [knn_vote(row, train_labels, self.k) for row in np.atleast_2d(sims)]


class HVPrototypes(_HVMethod):
    def fit_predict(self, train_idx, train_labels, test_idx, fold):
        classes = sorted(set(train_labels))
        scores = prototype_scores(self.X[train_idx], train_labels, self.X[test_idx], classes)
        return [classes[i] for i in np.argmax(scores, axis=1)]


class HVSvm(_HVMethod):
    def __init__(self, config: EncoderConfig, C: float = 100.0, epochs: int = 10, seed: int = 0):
        super().__init__(config)
        self.C, self.epochs, self.seed = C, epochs, seed

    def fit_predict(self, train_idx, train_labels, test_idx, fold):
        model = train_linear(self.X[train_idx], train_labels, self.C, self.epochs, self.seed + fold)
        return model.predict(self.X[test_idx])


class SymKnn(Method):
    def __init__(self, radius: int, k: int, shifts=0, simtype="cos"):
        self.radius, self.k = radius, k
        self.shifts = shift_set(shifts)
        self.simtype = SimType.parse(simtype)

    def prepare(self, sequences):
        self.seqs = list(sequences)
        self.norms = np.array([symov_scaled(s, s, self.radius) for s in self.seqs], dtype=np.int64)

    def fit_predict(self, train_idx, train_labels, test_idx, fold):
        flat, indptr = kernels.pack_strings([self.seqs[i] for i in train_idx])
        norms = self.norms[train_idx]
        out = []
        for i in test_idx:
            q = kernels.codes(self.seqs[i])
            best = None
            for s in self.shifts:
                ov = kernels.symov_batch(q, s, flat, indptr, self.radius)
                vals = np.asarray(normalize(ov, self.norms[i], norms, self.simtype), dtype=np.float64)
                best = vals if best is None else np.maximum(best, vals)
            out.append(knn_vote(best, train_labels, self.k))
        return out


class LevKnn(Method):
    def __init__(self, k: int):
        self.k = k

    def prepare(self, sequences):
        self.seqs = list(sequences)

    def fit_predict(self, train_idx, train_labels, test_idx, fold):
        flat, indptr = kernels.pack_strings([self.seqs[i] for i in train_idx])
        return [
            knn_vote(-kernels.levenshtein_batch(kernels.codes(self.seqs[i]), flat, indptr).astype(float),
                     train_labels, self.k)
            for i in test_idx
        ]


METHODS = ("knn", "proto", "svm", "sym-knn", "lev-knn")


def make_method(name: str, radius: int = 1, k: int = 1, m: int = 11, dim: int = 10000,
                seed: int = 0, C: float = 100.0, shifts=0, epochs: int = 10) -> Method:
    cfg = EncoderConfig(dim=dim, m=m, radius=radius, seed=seed)
    if name == "knn":
        return HVKnn(cfg, k)
    if name == "proto":
        return HVPrototypes(cfg)
    if name == "svm":
        return HVSvm(cfg, C=C, epochs=epochs, seed=seed)
    if name == "sym-knn":
        return SymKnn(radius, k, shifts)
    if name == "lev-knn":
        return LevKnn(k)
    raise InvalidParameter(f"unknown method {name!r}; expected one of {METHODS}")


def stratified_folds(labels: Sequence, folds: int, seed: int) -> np.ndarray:
    """Fold number per item: each class is shuffled by the seed and dealt round-robin."""
    if folds < 2:
        raise InvalidParameter(f"need folds >= 2, got {folds}")
    labels = list(labels)
    out = np.empty(len(labels), dtype=np.int64)
    rng = np.random.default_rng(seed & ((1 << 64) - 1))
    for c in sorted(set(labels)):
        members = np.array([i for i, lab in enumerate(labels) if lab == c])
        if members.size < folds:
            raise InvalidParameter(f"class {c!r} has {members.size} items, fewer than {folds} folds")
        out[members[rng.permutation(members.size)]] = np.arange(members.size) % folds
    return out


@dataclass
class ClassReport:
    classes: list
    total: float
    per_class: dict
    confusion: np.ndarray
    folds: np.ndarray
    seed: int
    fold_totals: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("metric,value\n")
        buf.write(f"total,{self.total:.6g}\n")
        for c in self.classes:
            buf.write(f"{c},{self.per_class[c]:.6g}\n")
        for f, acc in enumerate(self.fold_totals):
            buf.write(f"fold{f},{acc:.6g}\n")
        buf.write("\ntrue\\pred," + ",".join(self.classes) + "\n")
        for c, row in zip(self.classes, self.confusion):
            buf.write(c + "," + ",".join(str(int(v)) for v in row) + "\n")
        return buf.getvalue()


def crossval(data, folds: int, seed: int, method: Method, workers: int = 1) -> ClassReport:
    """Seeded stratified k-fold CV; accuracies (percent) are means over folds."""
    sequences = [d.sequence for d in data]
    labels = [d.label for d in data]
    classes = sorted(set(labels))
    assign = stratified_folds(labels, folds, seed)
    method.prepare(sequences)
    lab = np.asarray(labels)

    def run(f):
        train_idx = np.flatnonzero(assign != f)
        test_idx = np.flatnonzero(assign == f)
        pred = method.fit_predict(train_idx, lab[train_idx].tolist(), test_idx, f)
        return test_idx, pred

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(folds)))
    else:
        results = [run(f) for f in range(folds)]

    pos = {c: i for i, c in enumerate(classes)}
    confusion = np.zeros((len(classes), len(classes)), dtype=np.int64)
    fold_totals, fold_class = [], {c: [] for c in classes}
    for test_idx, pred in results:
        truth = lab[test_idx]
        pred = np.asarray(pred)
        fold_totals.append(100.0 * float(np.mean(truth == pred)))
        for c in classes:
            sel = truth == c
            fold_class[c].append(100.0 * float(np.mean(pred[sel] == c)))
        for t, p in zip(truth, pred):
            confusion[pos[t], pos[p]] += 1
    return ClassReport(
        classes=classes,
        total=float(np.mean(fold_totals)),
        per_class={c: float(np.mean(v)) for c, v in fold_class.items()},
        confusion=confusion,
        folds=assign,
        seed=seed,
        fold_totals=fold_totals,
    )
