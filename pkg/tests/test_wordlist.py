import pytest
from hypothesis import given, strategies as st

from conftest import WORDLISTS
from phonovec import WordlistError
from phonovec.wordlist import Form, Wordlist, inventory, load_wordlist

HEADER = "ID\tLanguage_ID\tParameter_ID\tForm\tSegments\n"


def write(tmp_path, text, name="w.tsv", raw=None):
    p = tmp_path / name
    if raw is not None:
        p.write_bytes(raw)
    else:
        p.write_text(text, encoding="utf-8")
    return p


def brute_inventory(rows):
    seen = []
    for segs in rows:
        for tok in segs:
            if tok in ("+", "_", "#"):
                continue
            if not any(tok == s for s in seen):
                seen.append(tok)
    return seen


def test_three_row_file():
    w = load_wordlist(WORDLISTS / "three.tsv")
    assert len(w) == 3
    assert inventory(w, "abc") == {"p", "a", "i"}
    assert w.forms[2].segments == ("kʰ", "u")


def test_missing_column(tmp_path):
    p = write(tmp_path, "ID\tLanguage_ID\tParameter_ID\tForm\n1\tx\tc\tpa\n")
    with pytest.raises(WordlistError, match="Segments"):
        load_wordlist(p)


def test_empty_segments(tmp_path):
    p = write(tmp_path, HEADER + "1\tx\tc\tpa\tp a\n2\tx\tc\tpa\t  \n")
    with pytest.raises(WordlistError, match=r":3: empty Segments"):
        load_wordlist(p)


def test_malformed_utf8_names_line(tmp_path):
    raw = (HEADER + "1\tx\tc\tpa\tp a\n").encode() + b"2\tx\tc\tp\xffa\tp a\n"
    p = write(tmp_path, None, raw=raw)
    with pytest.raises(WordlistError, match=r":3: malformed UTF-8"):
        load_wordlist(p)


def test_short_row(tmp_path):
    p = write(tmp_path, HEADER + "1\tx\tc\n")
    with pytest.raises(WordlistError, match=":2:"):
        load_wordlist(p)


def test_missing_file(tmp_path):
    with pytest.raises(WordlistError):
        load_wordlist(tmp_path / "nope.tsv")


def test_bom_and_extra_columns(tmp_path):
    p = write(tmp_path, "﻿ID\tLanguage_ID\tParameter_ID\tForm\tSegments\tNote\n1\tx\tc\tpa\tp a\tok\n")
    assert load_wordlist(p).forms[0].segments == ("p", "a")


def test_segments_lossless(tmp_path):
    tokens = ["t͡s", "ɐ̃", "kʰʷ", "ə˞", "²¹⁴"]
    p = write(tmp_path, HEADER + f"1\tx\tc\tf\t{' '.join(tokens)}\n")
    got = load_wordlist(p).forms[0].segments
    assert [t.encode() for t in got] == [t.encode() for t in tokens]


def test_spanish_fixture_inventory():
    w = load_wordlist(WORDLISTS / "spanish.tsv")
    inv = inventory(w, "spa")
    assert {"m", "ɱ"} <= inv


@pytest.mark.parametrize("name", ["spanish.tsv", "sample.tsv", "three.tsv"])
def test_inventory_matches_brute_force(name):
    w = load_wordlist(WORDLISTS / name)
    for lang in w.languages:
        rows = [f.segments for f in w.forms if f.language == lang]
        expected = brute_inventory(rows)
        assert len(inventory(w, lang)) == len(expected)
        assert inventory(w, lang) == set(expected)


def test_inventory_errors():
    w = load_wordlist(WORDLISTS / "three.tsv")
    with pytest.raises(WordlistError):
        inventory(w, "")
    with pytest.raises(WordlistError, match="zzz"):
        inventory(w, "zzz")


def test_boundary_markers_excluded():
    w = Wordlist([Form("1", "x", "c", ("p", "+", "a", "_", "t"))])
    assert inventory(w, "x") == {"p", "a", "t"}


def test_form_invariants():
    with pytest.raises(ValueError):
        Form("1", "x", "c", ())
    with pytest.raises(ValueError):
        Form("1", "x", "c", ("p a",))


tokens = st.sampled_from(["p", "a", "i", "t", "k", "ŋ", "ɱ", "f"])
forms_strategy = st.lists(st.lists(tokens, min_size=1, max_size=5), min_size=1, max_size=8)


@given(forms_strategy, st.randoms())
def test_inventory_invariant_under_reordering(rows, rnd):
    forms = [Form(str(i), "x", "c", tuple(r)) for i, r in enumerate(rows)]
    shuffled = list(forms)
    rnd.shuffle(shuffled)
    assert inventory(Wordlist(forms), "x") == inventory(Wordlist(shuffled), "x") == set(brute_inventory(rows))


def test_language_index_consistent():
    w = load_wordlist(WORDLISTS / "sample.tsv")
    assert sum(len(v) for v in w.languages.values()) == len(w)
    for lang, forms in w.languages.items():
        assert all(f.language == lang for f in forms)
