"""Command-line entry point: ``hvseq <subcommand> ...``.

Negative range bounds must be attached with ``=``, e.g. ``--shifts=-5..5``.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys

import numpy as np

from . import data_io
from .encoding import Encoder, EncoderConfig
from .errors import HVSeqError
from .evaluation import (
    HVScorer,
    corr_eval,
    crossval,
    emit_profile,
    load_pairs,
    make_method,
    profile_csv,
    topn_eval,
)
from .evaluation.classify import METHODS
from .similarity import sim, sim_shiftmax
from .symbolic import hamming_and_shift, levenshtein, sim_sym, sim_sym_shiftmax


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"1,3,5"``, ``"1..12"`` or ``"-5:5"`` (inclusive)."""
    text = text.strip()
    for sep in ("..", ":"):
        if sep in text[1:]:
            head, tail = text[0] + text[1:].split(sep, 1)[0], text[1:].split(sep, 1)[1]
            lo, hi = int(head), int(tail)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def parse_shifts(text: str):
    """A bare nonnegative integer means ``-s..s``; anything else is an explicit set."""
    text = text.strip()
    if text.isdigit():
        return int(text)
    return parse_range(text)


def _write(path, content: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(content)


def _fmt(v) -> str:
    return f"{float(v):.6g}"


def cmd_encode(args) -> int:
    words = data_io.load_dictionary(args.dict)
    cfg = EncoderConfig(dim=args.D, m=args.m, radius=args.R, seed=args.seed)
    index = Encoder(cfg).encode_many(words)
    data_io.save_index(args.out, index)
    print(f"encoded {len(words)} words (D={cfg.dim}, m={cfg.m}, R={cfg.radius}, seed={cfg.seed}) -> {args.out}")
    return 0


def spellcheck_reports(index, queries, ns, simtype, shifts, realizations, workers):
    """One Top-n report per realization; realization ``r`` uses seed ``index seed + r``."""
    reports = []
    for r in range(realizations):
        cfg = index.config.with_(seed=index.config.seed + r)
        scorer = HVScorer(cfg, shifts, simtype)
        scorer.fit(index.words, index=index if r == 0 else None)
        reports.append(topn_eval(index.words, queries, ns, scorer, workers=workers, fitted=True))
    return reports


def spellcheck_csv(reports) -> str:
    buf = io.StringIO()
    buf.write("realization,n,top_n\n")
    ns = reports[0].ns
    for r, rep in enumerate(reports):
        for n in ns:
            buf.write(f"{r},{n},{_fmt(rep.accuracy[n])}\n")
    for n in ns:
        vals = [rep.accuracy[n] for rep in reports]
        buf.write(f"mean,{n},{_fmt(np.mean(vals))}\n")
        buf.write(f"std,{n},{_fmt(np.std(vals))}\n")
    return buf.getvalue()


def cmd_spellcheck(args) -> int:
    index = data_io.load_index(args.index)
    fmt = {"tab": "tab", "dollar": "dollar", "auto": "auto"}[args.format]
    queries = data_io.load_misspellings(args.tests, fmt, swap_columns=args.swap_columns)
    ns = [int(n) for n in args.topn.split(",")]
    reports = spellcheck_reports(index, queries, ns, args.sim, args.shifts, args.realizations, args.workers)
    missing = reports[0].missing
    print(f"{len(queries)} queries, {missing} with correct word absent from the dictionary")
    for n in reports[0].ns:
        vals = [rep.accuracy[n] for rep in reports]
        print(f"Top-{n}: {np.mean(vals):.2f} (std {np.std(vals):.3f}, {len(vals)} realization(s))")
    if args.csv:
        _write(args.csv, spellcheck_csv(reports))
    return 0


def cmd_classify(args) -> int:
    data = data_io.load_splice(args.data)
    method = make_method(args.method, radius=args.R, k=args.k, m=args.m, dim=args.D,
                         seed=args.seed, C=args.C, shifts=args.shifts, epochs=args.epochs)
    report = crossval(data, args.folds, args.seed, method, workers=args.workers)
    print(f"{args.method}: total {report.total:.2f}% over {args.folds} folds")
    for c in report.classes:
        print(f"  {c}: {report.per_class[c]:.2f}%")
    if args.csv:
        _write(args.csv, report.to_csv())
    return 0


def cmd_sim(args) -> int:
    if args.mode == "hv":
        cfg = EncoderConfig(dim=args.D, m=args.m, radius=args.R, seed=args.seed)
        enc = Encoder(cfg)
        a, b = enc.encode_string(args.a), enc.encode_string(args.b)
        if args.shifts == 0:
            print(_fmt(sim(a, b, args.type)))
        else:
            value, s = sim_shiftmax(enc.perm, a, b, args.shifts, args.type)
            print(f"{_fmt(value)} (shift {s})")
    elif args.mode == "sym":
        if args.shifts == 0:
            print(_fmt(sim_sym(args.a, args.b, args.R, args.type)))
        else:
            value, s = sim_sym_shiftmax(args.a, args.b, args.R, args.shifts, args.type)
            print(f"{_fmt(value)} (shift {s})")
    elif args.mode == "lev":
        print(levenshtein(args.a, args.b))
    else:
        print(hamming_and_shift(args.a, args.b, args.hamming))
    return 0


def cmd_profile(args) -> int:
    cfg = EncoderConfig(dim=args.D, m=args.m, radius=1, seed=args.seed)
    rows = emit_profile(cfg, args.a, args.b, args.shifts, args.R, args.type)
    text = profile_csv(rows)
    if args.csv:
        _write(args.csv, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_corr(args) -> int:
    pairs = load_pairs(args.pairs)
    cfg = EncoderConfig(dim=args.D, m=args.m, radius=args.R, seed=args.seed)
    rep = corr_eval(pairs, cfg, args.shifts, args.type, args.mode, args.realizations)
    print(f"Corr = {rep.mean:.4f} (std {rep.std:.4f}, {len(rep.per_realization)} realization(s), "
          f"{len(pairs)} pairs)")
    return 0


def _add_hv_args(p, D=10000, m=11, seed=0):
    p.add_argument("--D", type=int, default=D, help="hypervector dimension")
    p.add_argument("--m", type=int, default=m, help="ones per atomic hypervector")
    p.add_argument("--seed", type=int, default=seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hvseq", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a dictionary into an index file")
    p.add_argument("--dict", required=True)
    _add_hv_args(p)
    p.add_argument("--R", type=int, default=7)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("spellcheck", help="Top-n evaluation against a misspelling test set")
    p.add_argument("--index", required=True)
    p.add_argument("--tests", required=True)
    p.add_argument("--format", choices=["tab", "dollar", "auto"], default="auto")
    p.add_argument("--swap-columns", action="store_true", help="tab files list the correct word first")
    p.add_argument("--sim", choices=["cos", "jac", "simp"], default="cos")
    p.add_argument("--shifts", type=parse_shifts, default=0)
    p.add_argument("--topn", default="1,3,5,10")
    p.add_argument("--realizations", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_spellcheck)

    p = sub.add_parser("classify", help="cross-validated splice-junction classification")
    p.add_argument("--data", required=True)
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--R", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--folds", type=int, default=10)
    _add_hv_args(p)
    p.add_argument("--C", type=float, default=100.0)
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--shifts", type=parse_shifts, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sim", help="similarity of two strings")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--mode", choices=["hv", "sym", "lev", "hamming"], default="hv")
    p.add_argument("--R", type=int, default=3)
    p.add_argument("--shifts", type=parse_shifts, default=0)
    p.add_argument("--type", choices=["cos", "jac", "simp", "overlap"], default="cos")
    p.add_argument("--hamming", choices=["sim_matches", "dist_mismatches", "shift_distance"],
                   default="dist_mismatches")
    _add_hv_args(p)
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("profile", help="similarity vs shift for a range of radii")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--R", type=parse_range, required=True)
    p.add_argument("--shifts", type=parse_range, required=True)
    p.add_argument("--type", choices=["cos", "jac", "simp", "overlap"], default="cos")
    p.add_argument("--csv")
    _add_hv_args(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("corr", help="Pearson correlation of pair similarities with times")
    p.add_argument("--pairs", required=True)
    p.add_argument("--R", type=int, default=3)
    p.add_argument("--shifts", type=parse_shifts, default=0)
    p.add_argument("--type", choices=["cos", "jac", "simp"], default="cos")
    p.add_argument("--mode", choices=["hv", "sym", "lev", "lev-max"], default="hv")
    p.add_argument("--realizations", type=int, default=1)
    _add_hv_args(p, m=111)
    p.set_defaults(func=cmd_corr)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (HVSeqError, OSError) as exc:
        print(f"hvseq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
