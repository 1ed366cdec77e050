import numpy as np
import pytest

from hvseq import apply_perm_power, overlap, sim
from hvseq.baselines import PartialPermConfig, PartialPermEncoder, moved_count, partial_perm_encode
from hvseq.errors import InvalidParameter


@pytest.fixture(scope="module")
def pp():
    return PartialPermEncoder(PartialPermConfig(dim=10000, m=100, radius=4, seed=3))


def test_moved_count_is_ceiling():
    assert [moved_count(i, 10, 4) for i in range(6)] == [0, 3, 5, 8, 0, 3]


def test_full_steps(pp):
    e0 = pp.memory["a"]
    assert pp.symbol_hv("a", 0) == e0
    assert pp.symbol_hv("a", 4) == apply_perm_power(pp.perm, 1, e0)
    assert pp.symbol_hv("a", 8) == apply_perm_power(pp.perm, 2, e0)


def test_negative_positions_rejected(pp):
    with pytest.raises(InvalidParameter):
        pp.symbol_hv("a", -1)
    with pytest.raises(InvalidParameter):
        pp.encode_string("ab", -2)


def test_single_character_and_determinism(pp):
    assert pp.encode_string("q", 5) == pp.symbol_hv("q", 5)
    other = PartialPermEncoder(PartialPermConfig(dim=10000, m=100, radius=4, seed=3))
    assert other.encode_string("hello", 2) == pp.encode_string("hello", 2)


def test_moved_sets_are_nested(pp):
    e0 = set(pp.memory["z"].active.tolist())
    cfg = pp.config
    prev = set()
    for i in range(1, cfg.radius):
        hv = set(pp.symbol_hv("z", i).active.tolist())
        moved = e0 - hv
        assert prev <= moved
        assert len(moved) <= moved_count(i, cfg.m, cfg.radius)
        prev = moved


def test_linear_similarity_profile():
    m, radius = 100, 4
    means = {j: [] for j in range(1, 2 * radius + 1)}
    for seed in range(50):
        enc = PartialPermEncoder(PartialPermConfig(dim=10000, m=m, radius=radius, seed=seed))
        base = enc.symbol_hv("a", 0)
        for j in means:
            means[j].append(overlap(base, enc.symbol_hv("a", j)))
    for j in range(1, radius):
        assert np.mean(means[j]) == pytest.approx(m * (1 - j / radius), rel=0.10)
    for j in range(radius, 2 * radius + 1):
        assert np.mean(means[j]) / m < 0.05


def test_not_shift_equivariant():
    cfg = PartialPermConfig(dim=10000, m=100, radius=4, seed=9)
    enc = PartialPermEncoder(cfg)
    rng = np.random.default_rng(0)
    best = []
    for _ in range(100):
        w = "".join(rng.choice(list("abcdefghijklmnopqrstuvwxyz"), rng.integers(2, 10)))
        h0 = partial_perm_encode(cfg, enc.perm, enc.memory, w, 0)
        h1 = partial_perm_encode(cfg, enc.perm, enc.memory, w, 1)
        # candidates: the whole-vector permutation for one step, and for floor(1/R) steps
        best.append(max(sim(apply_perm_power(enc.perm, 1, h0), h1, "cos"), sim(h0, h1, "cos")))
    assert np.mean(best) < 0.95
