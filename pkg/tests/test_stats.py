import math

import numpy as np
import pytest
import scipy.stats
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hvseq import EncoderConfig
from hvseq.errors import FormatError, InvalidInput, UndefinedCorrelationError
from hvseq.evaluation import corr_eval, load_pairs, pearson
from hvseq.evaluation.stats import PrimePair, write_pairs


def test_pearson_known_values():
    assert pearson([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)
    assert pearson([1, 2, 3], [-1, -2, -3]) == pytest.approx(-1.0)
    closed_form = 3 / math.sqrt(2 * 14 / 3)
    assert pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(closed_form, abs=1e-12)
    assert pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(0.98198, abs=5e-6)
    assert pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(scipy.stats.pearsonr([1, 2, 3], [1, 2, 4])[0])


def test_pearson_errors():
    with pytest.raises(UndefinedCorrelationError):
        pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(InvalidInput):
        pearson([1, 2], [1, 2, 3])
    with pytest.raises(InvalidInput):
        pearson([1], [1])


finite = st.floats(-1e3, 1e3, allow_nan=False)


@settings(max_examples=100, deadline=None)
@given(xy=st.lists(st.tuples(finite, finite), min_size=3, max_size=20),
       a=st.floats(0.1, 10), b=st.floats(-10, 10))
def test_pearson_affine_invariance_and_sign(xy, a, b):
    x = np.array([p[0] for p in xy])
    y = np.array([p[1] for p in xy])
    assume(np.std(x) > 1e-3 and np.std(y) > 1e-3)
    r = pearson(x, y)
    assert -1.0 <= r <= 1.0
    assert pearson(a * x + b, y) == pytest.approx(r, abs=1e-7)
    assert pearson(-x, y) == pytest.approx(-r, abs=1e-9)
    assert r == pytest.approx(scipy.stats.pearsonr(x, y)[0], abs=1e-7)


def test_load_pairs(fixtures, tmp_path):
    pairs = load_pairs(fixtures / "pairs.csv")
    assert len(pairs) == 8 and pairs[1] == PrimePair("desing", "design", 510.0)
    out = tmp_path / "p.csv"
    write_pairs(out, pairs)
    assert load_pairs(out) == pairs
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(FormatError):
        load_pairs(bad)


def test_corr_modes(fixtures):
    pairs = load_pairs(fixtures / "pairs.csv")
    cfg = EncoderConfig(dim=10000, m=111, radius=3, seed=0)
    hv = corr_eval(pairs, cfg, 1, "cos", "hv", realizations=3)
    assert len(hv.per_realization) == 3
    # faster responses for more similar primes: similarity correlates negatively with time
    assert hv.mean < -0.5
    assert corr_eval(pairs, cfg, 1, "cos", "sym").mean < -0.5
    # distances correlate positively with time
    assert corr_eval(pairs, cfg, mode="lev").mean > 0.5
    assert len(corr_eval(pairs, cfg, mode="lev-max", realizations=5).per_realization) == 1
