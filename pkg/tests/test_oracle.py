import itertools

import numpy as np
import pytest

from hvseq import Encoder, overlap, symov_scaled
from hvseq.errors import InvalidInput, InvalidParameter, OutOfWindowError
from hvseq.oracle import (
    block_disjoint_config,
    count_dot,
    counting_encode,
    counting_encode_string,
    oracle_window,
)


def test_construction_arithmetic():
    cfg, mem = block_disjoint_config("abc", 5, 2, 3)
    assert cfg.dim == 30 and cfg.perm_step == 6 and oracle_window(cfg) == 5
    assert mem["b"].active.tolist() == [2, 3]


def test_atomic_vectors_disjoint_within_window():
    cfg, mem = block_disjoint_config("abc", 5, 2, 1)
    enc = Encoder(cfg, mem)
    atoms = {(s, i): enc.symbol_hv(s, i) for s in "abc" for i in range(5)}
    for (k1, v1), (k2, v2) in itertools.combinations(atoms.items(), 2):
        assert overlap(v1, v2) == 0, (k1, k2)


def test_invalid_sizes():
    with pytest.raises(InvalidParameter):
        block_disjoint_config("abc", 2, 2, 3)
    with pytest.raises(InvalidParameter):
        block_disjoint_config("", 5, 2, 1)
    with pytest.raises(InvalidParameter):
        block_disjoint_config("aa", 5, 2, 1)


def test_unknown_symbol_rejected():
    cfg, mem = block_disjoint_config("ab", 5, 2, 1)
    with pytest.raises(InvalidInput):
        mem["z"]


def test_counting_single_item_and_empty():
    cfg, mem = block_disjoint_config("abc", 8, 2, 3)
    x = counting_encode(cfg, mem, [("a", 2)])
    assert set(x.counts.tolist()) == {1} and x.mass == 2 * 3
    z = counting_encode(cfg, mem, [])
    assert z.mass == 0 and z.dim == cfg.dim


def test_counting_double_letter():
    m, radius = 2, 3
    cfg, mem = block_disjoint_config("ab", 8, m, radius)
    x = counting_encode_string(cfg, mem, "aa")
    assert x.mass == 2 * m * radius
    assert sorted(x.counts.tolist()) == [1] * (2 * m) + [2] * ((radius - 1) * m)


def test_counting_window_enforced():
    cfg, mem = block_disjoint_config("ab", 6, 2, 3)
    with pytest.raises(OutOfWindowError):
        counting_encode(cfg, mem, [("a", 4)])
    with pytest.raises(OutOfWindowError):
        counting_encode(cfg, mem, [("a", -1)])
    counting_encode(cfg, mem, [("a", 3)])


def test_count_dot_examples():
    cfg, mem = block_disjoint_config("abc", 8, 2, 3)
    x = counting_encode_string(cfg, mem, "abc", 0)
    y = counting_encode_string(cfg, mem, "abc", 1)
    assert count_dot(x, y) == 12
    assert count_dot(counting_encode_string(cfg, mem, "ab"), counting_encode_string(cfg, mem, "cc")) == 0
    assert count_dot(x, x) == 2 * 3 * symov_scaled("abc", "abc", 3) // 3


def test_oracle_identity_exhaustive_small():
    m = 2
    for radius in (1, 2, 3):
        cfg, mem = block_disjoint_config("abc", 4 + radius, m, radius)
        words = ["".join(t) for n in range(5) for t in itertools.product("abc", repeat=n)]
        enc = {w: counting_encode_string(cfg, mem, w) for w in words}
        for a in words:
            for b in words:
                assert count_dot(enc[a], enc[b]) == m * symov_scaled(a, b, radius)


def test_disjunction_overlap_matches_symov_for_spread_repeats():
    m, radius = 3, 3
    cfg, mem = block_disjoint_config("abcdef", 12, m, radius)
    enc = Encoder(cfg, mem)
    rng = np.random.default_rng(2)
    checked = 0
    while checked < 200:
        a = "".join(rng.choice(list("abcdef"), rng.integers(1, 9)))
        b = "".join(rng.choice(list("abcdef"), rng.integers(1, 9)))
        spread = all(
            abs(i - j) >= radius
            for w in (a, b) for i, j in itertools.combinations(range(len(w)), 2) if w[i] == w[j]
        )
        if not spread:
            continue
        checked += 1
        assert overlap(enc.encode_string(a), enc.encode_string(b)) == m * symov_scaled(a, b, radius)


def test_oracle_equivariance_inside_window():
    cfg, mem = block_disjoint_config("abcd", 16, 2, 3)
    enc = Encoder(cfg, mem)
    for s in range(0, 6):
        assert enc.shift(enc.encode_string("dab", 2), s) == enc.encode_string("dab", 2 + s)
