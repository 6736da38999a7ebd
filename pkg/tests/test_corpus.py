import pytest

from tkw import corpus
from tkw.gauss import reverse_diagram


@pytest.mark.parametrize("entry", corpus.entries(), ids=lambda e: e.ref)
def test_corpus_expectations_hold(entry):
    assert corpus.check(entry) == []


def test_corpus_contents():
    refs = [e.ref for e in corpus.entries()]
    assert refs == ["L2a1/L2a1", "L6a1/K1", "L6a1/K2", "L7a1/L7a1"]
    assert corpus.get("L7a1").diagram.m == 4


def test_get_unknown():
    with pytest.raises(KeyError):
        corpus.get("L9z9")
    with pytest.raises(KeyError):
        corpus.get("L6a1")


def test_check_reports_mismatch():
    (entry,) = corpus.load_text("#! phi2: 1\n#! abelian: 1 0 0\nK: O1+ U1+\n", "t")
    assert entry.expect == {"phi2": "1", "abelian": "1 0 0"}
    assert corpus.check(entry) == ["t/K: abelian is '0 0 0', expected '1 0 0'"]


def test_unknown_expectation():
    (entry,) = corpus.load_text("#! colour: red\nO1+ U1+\n", "t")
    assert "unknown expectation" in corpus.check(entry)[0]


def test_load_text_reports_line():
    with pytest.raises(ValueError, match="t:2"):
        corpus.load_text("# x\nK: O1+ U1-\n", "t")


def test_directives_apply_to_next_entry_only():
    a, b = corpus.load_text("#! phi2: 1\nO1+ U1+\nO1- U1-\n")
    assert a.expect and not b.expect


@pytest.mark.parametrize("ref", ["L6a1/K1", "L6a1/K2"])
def test_l6a1_diagrams_are_reverse_symmetric(ref):
    # reading the code backwards and renumbering gives the same code
    d = corpus.get(ref).diagram
    assert reverse_diagram(d) == d
