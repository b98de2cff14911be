import json

from residue_tilings.lemmas import LEMMAS, decomposition_corpus, run_gauss


def test_registry_names():
    assert set(LEMMAS) == {
        "flip-connectivity", "h-even", "kasteleyn-det", "norm-bridge",
        "gauss", "gauss-even", "l-closed-form", "decomposition",
        "periodicity", "coprime-vanishing", "y-decomposition",
        "half-board", "parity", "eisenstein", "ktf",
    }


def test_report_shape():
    report = run_gauss(bound=9)
    assert report["lemma"] == "gauss"
    assert report["total"] == len(report["cases"])
    assert report["failed"] == 0
    assert report["pass"] is True
    case = report["cases"][0]
    assert set(case) == {"inputs", "lhs", "rhs", "pass"}
    json.dumps(report)


def test_corpus_is_large_enough():
    corpus = decomposition_corpus()
    assert len(corpus) >= 50
    names = [name for name, _, _ in corpus]
    assert len(names) == len(set(names))
    for _, board, subset in corpus:
        assert subset <= board


def test_default_ranges_pass_quickly():
    # every runner must be green at its CLI default range
    for name, runner in LEMMAS.items():
        report = runner()
        assert report["pass"], name
