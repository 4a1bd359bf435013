import re

import pytest

from ccgsem.category import NP, Atomic, Fs, parse_cat
from ccgsem.errors import LexiconError
from ccgsem.lexicon import load_lexicon, lookup, sample_lexicon, sample_text
from ccgsem.notation import parse_term as T
from ccgsem.terms import is_closed, is_normal, scoped_ids


def test_load_name():
    (e,) = load_lexicon("john := np : john'").lookup("john")
    assert (e.cat, e.lf) == (NP, T("john'"))


def test_load_transitive():
    (e,) = load_lexicon("found := (s\\np)/np : lam o. lam s. (found' s o)").lookup("found")
    assert e.cat == parse_cat("(s\\np)/np")
    assert e.lf == T("lam x. lam y. (found' y x)")


def test_load_conjunction():
    (e,) = load_lexicon("and := conj : and'").lookup("and")
    assert e.cat == parse_cat("conj")


def test_lfs_are_normalized_on_load():
    (e,) = load_lexicon("w := s\\np : (lam f. f) (lam s. (run' s))").lookup("w")
    assert e.lf == T("lam s. (run' s)")


def test_comments_blank_lines_and_atoms():
    lex = load_lexicon("# header\n\natoms: pp\n  on := pp/np : lam x. (on' x)  # trailing\n")
    (e,) = lex.lookup("on")
    assert e.cat == Fs(NP, Atomic("pp"))
    assert "pp" in lex.atoms
    assert lex.dumps().startswith("atoms: pp\n")


@pytest.mark.parametrize("text, line", [
    ("john := np : john'\nbad line here", 2),
    ("x := s/ : f'", 1),
    ("\n\nx := s\\np : lam y. (", 3),
    ("x := s\\np : #3", 1),
    ("x := pp : p'", 1),
    ("x := s\\np lam y. y", 1),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(LexiconError) as info:
        load_lexicon(text)
    assert info.value.line == line


def test_sample_lookup():
    lex = sample_lexicon()
    assert len(lookup(lex, "and")) == 1
    assert len(lookup(lex, "every")) >= 2
    assert lookup(lex, "zzz") == []
    assert lookup(lex, "John") == lookup(lex, "john")


def test_sample_vocabulary():
    lex = sample_lexicon()
    vocab = ("john bill harry mary run talk walked found like likes hate hates gave man bone "
             "dog farmer senator policeman flower and every a some").split()
    assert all(lex.lookup(w) for w in vocab)


def test_sample_lfs_closed_and_normal():
    for e in sample_lexicon():
        assert is_closed(e.lf) and is_normal(e.lf) and not scoped_ids(e.lf), str(e)


def _entry_lines(text):
    lines = (re.sub(r"#(?!\d).*", "", l) for l in text.splitlines())
    return ["".join(l.split()) for l in lines if l.strip()]


def test_sample_reserializes_modulo_whitespace():
    text = sample_text()
    assert _entry_lines(sample_lexicon().dumps()) == _entry_lines(text)


def test_dump_load_roundtrip():
    lex = sample_lexicon()
    again = load_lexicon(lex.dumps())
    assert [(e.word, e.cat, e.lf) for e in again] == [(e.word, e.cat, e.lf) for e in lex]
