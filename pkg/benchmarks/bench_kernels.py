"""Time each scan kernel on the compiled and pure backends over identical inputs.

    python3 benchmarks/bench_kernels.py [--words 20000] [--repeat 3]
"""

import argparse
import sys
import timeit

import numpy as np

from hvseq import Encoder, EncoderConfig, kernels
from hvseq import _pure

try:
    from hvseq import _ext
except ImportError:
    _ext = None


def random_words(rng, n, alphabet="abcdefghijklmnopqrstuvwxyz"):
    letters = np.array(list(alphabet))
    return ["".join(rng.choice(letters, rng.integers(3, 13))) for _ in range(n)]


def cases(n_words, seed):
    rng = np.random.default_rng(seed)
    words = random_words(rng, n_words)
    index = Encoder(EncoderConfig(seed=seed)).encode_many(words)
    mask = np.zeros(index.config.dim, dtype=np.uint8)
    mask[index.row(0).active] = 1
    flat, indptr = kernels.pack_strings(words)
    query = kernels.codes("exampel")

    n = min(n_words, 2000)
    y = np.where(rng.random(n) < 0.5, 1.0, -1.0)
    order = rng.permutation(n)
    sub_ptr = index.indptr[: n + 1]
    sub_idx = index.indices[: sub_ptr[-1]]

    def sgd(impl):
        w, state = np.zeros(index.config.dim), np.array([1.0, 0.0, 1.0])
        kernels.hinge_sgd_epoch(sub_ptr, sub_idx, y, order, w, state, 1e-4, impl=impl)

    return {
        "csr_overlap": lambda impl: kernels.csr_overlap(index.indptr, index.indices, mask, impl=impl),
        "levenshtein_batch": lambda impl: kernels.levenshtein_batch(query, flat, indptr, impl=impl),
        "symov_batch": lambda impl: kernels.symov_batch(query, 1, flat, indptr, 7, impl=impl),
        f"hinge_sgd_epoch ({n} rows)": sgd,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--words", type=int, default=20000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if _ext is None:
        print("compiled backend not built; only the pure backend is available", file=sys.stderr)

    print(f"{'kernel':<30}{'cython ms':>12}{'python ms':>12}{'speedup':>10}")
    for name, fn in cases(args.words, args.seed).items():
        py = min(timeit.repeat(lambda: fn(_pure), number=1, repeat=args.repeat)) * 1e3
        if _ext is None:
            print(f"{name:<30}{'-':>12}{py:>12.2f}{'-':>10}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ext), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<30}{cy:>12.2f}{py:>12.2f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
