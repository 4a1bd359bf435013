"""Lexical entries and the lexicon file format.

One entry per line::

    WORD := CAT : LF

``#`` starts a comment.  An optional ``atoms: name, name`` line declares
extra atomic categories and must precede the entries that use them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .category import BUILTIN_ATOMS, Cat, parse_cat, print_cat
from .errors import CcgError, LexiconError
from .notation import parse_term, show_term
from .terms import Term, is_closed, normalize, scoped_ids


@dataclass(frozen=True)
class LexEntry:
    word: str
    cat: Cat
    lf: Term

    def __str__(self):
        return f"{self.word} := {print_cat(self.cat)} : {show_term(self.lf)}"


@dataclass
class Lexicon:
    entries: dict[str, list[LexEntry]] = field(default_factory=dict)
    atoms: frozenset = BUILTIN_ATOMS

    def add(self, entry: LexEntry):
        self.entries.setdefault(entry.word, []).append(entry)

    def lookup(self, word: str) -> list[LexEntry]:
        return list(self.entries.get(word.lower(), ()))

    def __iter__(self):
        for group in self.entries.values():
            yield from group

    def __len__(self):
        return sum(len(g) for g in self.entries.values())

    def dumps(self) -> str:
        lines = []
        extra = sorted(self.atoms - BUILTIN_ATOMS)
        if extra:
            lines.append("atoms: " + ", ".join(extra))
        lines.extend(str(e) for e in self)
        return "\n".join(lines) + "\n"


def lookup(lex: Lexicon, word: str) -> list[LexEntry]:
    return lex.lookup(word)


_COMMENT = re.compile(r"#(?!\d)")


def _strip_comment(line):
    m = _COMMENT.search(line)
    return line[: m.start()] if m else line


def make_entry(word: str, cat: Cat, lf: Term, line: Optional[int] = None) -> LexEntry:
    if scoped_ids(lf) or not is_closed(lf):
        raise LexiconError(f"LF for {word!r} is not closed", line)
    return LexEntry(word.lower(), cat, normalize(lf))


def load_lexicon(text: str) -> Lexicon:
    """Parse lexicon text; errors carry the 1-based line number."""
    lex = Lexicon()
    atoms = set(BUILTIN_ATOMS)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("atoms:"):
            names = [a.strip() for a in line[len("atoms:"):].split(",") if a.strip()]
            bad = [a for a in names if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_\-]*", a)]
            if bad or not names:
                raise LexiconError(f"bad atoms declaration {line!r}", lineno)
            atoms.update(names)
            continue
        word, sep, rest = line.partition(":=")
        word = word.strip()
        if not sep or not word or " " in word:
            raise LexiconError(f"expected 'WORD := CAT : LF', got {line!r}", lineno)
        cat_text, sep, lf_text = rest.partition(":")
        if not sep:
            raise LexiconError(f"missing ':' before the LF in {line!r}", lineno)
        try:
            cat = parse_cat(cat_text.strip(), atoms)
            lf = parse_term(lf_text.strip())
            lex.add(make_entry(word, cat, lf, lineno))
        except LexiconError:
            raise
        except CcgError as exc:
            raise LexiconError(str(exc), lineno) from exc
    lex.atoms = frozenset(atoms)
    return lex


def read_lexicon(path) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh.read())


def sample_text() -> str:
    return resources.files("ccgsem").joinpath("data/sample.lex").read_text(encoding="utf-8")


def sample_lexicon() -> Lexicon:
    """The bundled lexicon covering every example sentence."""
    return load_lexicon(sample_text())
