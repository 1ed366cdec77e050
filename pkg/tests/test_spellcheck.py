import numpy as np
import pytest

from hvseq import EncoderConfig
from hvseq.data_io import SpellQuery, load_dictionary, load_misspellings
from hvseq.errors import InvalidInput
from hvseq.evaluation import HVScorer, LevScorer, SymScorer, topn_eval
from hvseq.symbolic import levenshtein, sim_sym_shiftmax

CFG = EncoderConfig(dim=10000, m=11, radius=7, seed=0)


@pytest.fixture(scope="module")
def words(fixtures):
    return load_dictionary(fixtures / "dictionary.txt")


@pytest.fixture(scope="module")
def queries(fixtures):
    return load_misspellings(fixtures / "misspellings.tab")


def scorers():
    return [HVScorer(CFG), HVScorer(CFG, shifts=1, simtype="jac"), SymScorer(7), SymScorer(3, 2, "jac"),
            LevScorer(), LevScorer(normalized=True)]


@pytest.mark.parametrize("scorer", scorers(), ids=lambda s: type(s).__name__)
def test_dictionary_words_rank_first(words, scorer):
    rep = topn_eval(words, [SpellQuery(w, w) for w in words], (1, 10), scorer)
    assert rep.accuracy[1] == 100.0


@pytest.mark.parametrize("scorer", scorers(), ids=lambda s: type(s).__name__)
def test_topn_monotone_and_trace(words, queries, scorer):
    rep = topn_eval(words, queries, (1, 3, 5, 10), scorer)
    acc = [rep.accuracy[n] for n in (1, 3, 5, 10)]
    assert acc == sorted(acc)
    assert rep.t == len(queries) and len(rep.traces) == len(queries)
    assert rep.missing >= 1
    flagged = [tr for tr in rep.traces if tr.correct == "notaword"]
    assert flagged and all(not tr.in_dictionary for tr in flagged)


def test_simpson_ties_subwords_with_containing_words():
    scorer = SymScorer(3, 0, "simp").fit(["cat", "cats"])
    assert scorer.score("cat").tolist() == [1.0, 1.0]


def test_independent_of_dictionary_order(words, queries):
    a = topn_eval(words, queries, (1, 3), SymScorer(2))
    b = topn_eval(list(reversed(words)), queries, (1, 3), SymScorer(2))
    assert a.to_csv() == b.to_csv()
    assert [t.rank for t in a.traces] == [t.rank for t in b.traces]


def test_ties_broken_lexicographically():
    # every word scores equally against an unrelated query
    rep = topn_eval(["dog", "bat", "cow"], [SpellQuery("xyz", "cow")], (1, 2, 3), SymScorer(1))
    assert rep.traces[0].rank == 1 and rep.traces[0].best == "bat"
    assert rep.hits == {1: 0, 2: 1, 3: 1}


def test_lev_scorer_matches_reference(words, queries):
    scorer = LevScorer().fit(words)
    for q in queries[:10]:
        assert scorer.score(q.query).tolist() == [-levenshtein(q.query, w) for w in words]


def test_sym_scorer_matches_reference(words):
    scorer = SymScorer(3, 2, "cos").fit(words[:40])
    for q in ["teh", "recieve", "abuot"]:
        expected = [sim_sym_shiftmax(q, w, 3, 2, "cos")[0] for w in words[:40]]
        np.testing.assert_allclose(scorer.score(q), expected, atol=1e-12)


def test_prebuilt_index_must_match(words):
    from hvseq import Encoder
    index = Encoder(CFG).encode_many(words)
    HVScorer(CFG).fit(words, index=index)
    with pytest.raises(InvalidInput):
        HVScorer(CFG.with_(seed=1)).fit(words, index=index)


def test_empty_dictionary_rejected():
    with pytest.raises(InvalidInput):
        topn_eval([], [SpellQuery("a", "a")], (1,), LevScorer())


def test_workers_do_not_change_report(words, queries):
    base = topn_eval(words, queries, (1, 10), HVScorer(CFG), workers=1)
    for workers in (4, 8):
        rep = topn_eval(words, queries, (1, 10), HVScorer(CFG), workers=workers)
        assert rep.to_csv() == base.to_csv() and rep.traces_csv() == base.traces_csv()


def test_csv_layout(words, queries):
    rep = topn_eval(words, queries, (1, 3), LevScorer())
    lines = rep.to_csv().splitlines()
    assert lines[0] == "n,hits,t,top_n" and len(lines) == 3
    assert rep.traces_csv().splitlines()[0] == "query,correct,rank,best,in_dictionary"
