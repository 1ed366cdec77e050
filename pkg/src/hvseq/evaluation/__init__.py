from .classify import (
    ClassReport,
    LinearModel,
    Method,
    crossval,
    knn_classify,
    knn_vote,
    make_method,
    prototype_classify,
    stratified_folds,
    train_linear,
)
from .profile import emit_profile, profile_csv
from .spellcheck import HVScorer, LevScorer, SymScorer, TopNReport, topn_eval
from .stats import corr_eval, load_pairs, pearson

__all__ = [
    "ClassReport",
    "HVScorer",
    "LevScorer",
    "LinearModel",
    "Method",
    "SymScorer",
    "TopNReport",
    "corr_eval",
    "crossval",
    "emit_profile",
    "knn_classify",
    "knn_vote",
    "load_pairs",
    "make_method",
    "pearson",
    "profile_csv",
    "prototype_classify",
    "stratified_folds",
    "topn_eval",
    "train_linear",
]
