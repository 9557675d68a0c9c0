from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from lexnet.errors import FormatError, LanguageMismatch
from lexnet.text import (
    LemmaMap,
    RawDocument,
    StopwordList,
    TokenStream,
    lemmatize,
    preprocess,
    remove_stopwords,
    tokenize,
)

from oracles import count_words

DATA = Path(__file__).resolve().parents[1] / "src" / "lexnet" / "data"


def test_tokenize_case_and_punctuation():
    assert tokenize("The cat, the CAT.") == ["the", "cat", "the", "cat"]


def test_tokenize_italian_elision():
    # hand segmentation: the apostrophe splits article from noun
    assert tokenize("l'arte dell'uomo") == ["l", "arte", "dell", "uomo"]


def test_tokenize_empty():
    assert tokenize("") == []


@pytest.mark.parametrize("text, expected", [
    ("Čuvar svjetionika, žena!", ["čuvar", "svjetionika", "žena"]),
    ("perché è così", ["perché", "è", "così"]),
    ("well-known", ["well", "known"]),
    ("page 12 of B5", ["page", "of"]),
    ("abc123def x", ["x"]),
    ("tab\tnew\nline", ["tab", "new", "line"]),
])
def test_tokenize_rules(text, expected):
    assert tokenize(text) == expected


def test_tokenize_composes_decomposed_letters():
    decomposed = "čuvar"  # c + combining caron
    assert tokenize(decomposed) == ["čuvar"]


@given(st.text())
def test_tokenize_output_is_letters_and_stable(text):
    tokens = tokenize(text)
    assert all(t and t.isalpha() and t == t.lower() for t in tokens)
    assert tokenize(" ".join(tokens)) == tokens


def test_remove_stopwords():
    sw = StopwordList("en", {"the"})
    assert remove_stopwords(["the", "cat", "sat"], sw) == ["cat", "sat"]
    assert remove_stopwords(["the", "the"], sw) == []


@given(st.lists(st.sampled_from(["a", "the", "cat", "sat", "of", "dog"])),
       st.sets(st.sampled_from(["a", "the", "of", "cat"])))
def test_remove_stopwords_idempotent_and_order_preserving(tokens, words):
    sw = StopwordList("en", words)
    once = remove_stopwords(tokens, sw)
    assert remove_stopwords(once, sw) == once
    assert once == [t for t in tokens if t not in words]


def test_lemmatize():
    assert lemmatize(["cats", "sat"], LemmaMap("en", {"cats": "cat", "sat": "sit"})) == ["cat", "sit"]
    assert lemmatize(["qwzx"], LemmaMap("en")) == ["qwzx"]
    assert lemmatize(["mačke"], LemmaMap("hr", {"mačke": "mačka"})) == ["mačka"]


@given(st.lists(st.text(alphabet="abcčž", min_size=1)))
def test_lemmatize_empty_map_is_identity(tokens):
    assert lemmatize(tokens, LemmaMap("hr")) == tokens


def test_preprocess_counts():
    doc = RawDocument("d", "en", "the cats sat")
    ts = preprocess(doc, StopwordList("en", {"the"}), LemmaMap("en", {"cats": "cat", "sat": "sit"}))
    assert ts.lemmas == ("cat", "sit")
    assert (ts.count_with_stopwords, ts.count_without_stopwords) == (3, 2)


def test_preprocess_empty():
    ts = preprocess(RawDocument("d", "en", ""), StopwordList("en"), LemmaMap("en"))
    assert ts.lemmas == () and (ts.count_with_stopwords, ts.count_without_stopwords) == (0, 0)


def test_preprocess_language_mismatch():
    with pytest.raises(LanguageMismatch):
        preprocess(RawDocument("d", "en", "x"), StopwordList("hr"), LemmaMap("en"))


@given(st.text(), st.sets(st.sampled_from(["a", "the", "i", "je"])))
def test_preprocess_invariants(text, words):
    doc = RawDocument("d", "xx", text)
    ts = preprocess(doc, StopwordList("xx", words), LemmaMap("xx"))
    assert ts.count_without_stopwords == len(ts.lemmas) <= ts.count_with_stopwords
    assert ts == preprocess(doc, StopwordList("xx", words), LemmaMap("xx"))


@pytest.mark.parametrize("lang", ["en", "it", "hr"])
def test_bundled_counts_match_independent_counter(lang):
    stop = StopwordList.load(DATA / f"stopwords_{lang}.txt", lang)
    lemmas = LemmaMap.load(DATA / f"lemmas_{lang}.tsv", lang)
    text = (DATA / "mini" / f"tiny_{lang}.txt").read_text(encoding="utf-8")
    ts = preprocess(RawDocument(f"tiny-{lang}", lang, text), stop, lemmas)
    assert (ts.count_with_stopwords, ts.count_without_stopwords) == count_words(text, stop.words)


def test_stopword_and_lemma_files(tmp_path):
    sw = tmp_path / "sw.txt"
    sw.write_text("# comment\nThe\n\nof\nthe\n", encoding="utf-8")
    assert StopwordList.load(sw, "en").words == {"the", "of"}
    lm = tmp_path / "lm.tsv"
    lm.write_text("# c\ncats\tcat\nmačke\tmačka\n", encoding="utf-8")
    assert LemmaMap.load(lm, "hr").entries == {"cats": "cat", "mačke": "mačka"}
    lm.write_text("cats cat\n", encoding="utf-8")
    with pytest.raises(FormatError):
        LemmaMap.load(lm, "en")


def test_invalid_entries_rejected():
    with pytest.raises(FormatError):
        StopwordList("en", {"New York"})
    with pytest.raises(FormatError):
        LemmaMap("en", {"Cats": "cat"})
    with pytest.raises(FormatError):
        LemmaMap("en", {"cats": "ca-t"})


def test_token_stream_round_trip(tmp_path):
    ts = TokenStream("B1-HR", ["čuvar", "otok"], 5, 2, "hr")
    lemma_path, counts_path = ts.save(tmp_path)
    assert lemma_path.read_text(encoding="utf-8") == "čuvar\notok\n"
    assert TokenStream.load(lemma_path) == ts
