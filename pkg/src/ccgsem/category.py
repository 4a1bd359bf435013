"""CCG categories.

Slash nodes store the argument first and the result second, so the
transitive-verb category ``(s\\np)/np`` is ``Fs(np, Bs(np, s))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import CategorySyntaxError

BUILTIN_ATOMS = frozenset({"np", "s", "conj", "noun"})


@dataclass(frozen=True, slots=True)
class Atomic:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Fs:
    """Forward slash ``result/arg``: seeks ``arg`` to the right."""
    arg: "Cat"
    result: "Cat"

    def __str__(self):
        return print_cat(self)


@dataclass(frozen=True, slots=True)
class Bs:
    """Backward slash ``result\\arg``: seeks ``arg`` to the left."""
    arg: "Cat"
    result: "Cat"

    def __str__(self):
        return print_cat(self)


Cat = Union[Atomic, Fs, Bs]

NP = Atomic("np")
S = Atomic("s")
CONJ = Atomic("conj")
NOUN = Atomic("noun")


def atomic_type(c: Cat) -> bool:
    return isinstance(c, Atomic)


def cat_eq(a: Cat, b: Cat) -> bool:
    return a == b


def arity(c: Cat) -> int:
    """Number of arguments along the result spine."""
    n = 0
    while not isinstance(c, Atomic):
        c = c.result
        n += 1
    return n


def print_cat(c: Cat) -> str:
    if isinstance(c, Atomic):
        return c.name

    def part(x):
        return x.name if isinstance(x, Atomic) else f"({print_cat(x)})"

    slash = "/" if isinstance(c, Fs) else "\\"
    return part(c.result) + slash + part(c.arg)


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_\-]*)|([/\\()]))")


def parse_cat(text: str, atoms: Optional[Iterable[str]] = None) -> Cat:
    """Parse slash notation; slashes are left-associative.

    ``atoms`` is the set of permitted atomic names (the builtin four by
    default).  Raises CategorySyntaxError with the failing position.
    """
    allowed = BUILTIN_ATOMS if atoms is None else frozenset(atoms) | BUILTIN_ATOMS
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise CategorySyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        idx = 1 if m.group(1) is not None else 2
        tokens.append((m.group(idx), m.start(idx), idx == 1))
        pos = m.end()
    tokens.append(("", len(text), False))
    i = 0

    def fail(msg):
        raise CategorySyntaxError(msg, text, tokens[i][1])

    def primary():
        nonlocal i
        value, _, is_name = tokens[i]
        if is_name:
            if value not in allowed:
                fail(f"unknown atomic category {value!r}")
            i += 1
            return Atomic(value)
        if value == "(":
            i += 1
            c = expr()
            if tokens[i][0] != ")":
                fail("expected ')'")
            i += 1
            return c
        fail(f"expected a category, found {value or 'end of input'!r}")

    def expr():
        nonlocal i
        c = primary()
        while tokens[i][0] in ("/", "\\"):
            slash = tokens[i][0]
            i += 1
            arg = primary()
            c = Fs(arg, c) if slash == "/" else Bs(arg, c)
        return c

    result = expr()
    if tokens[i][0]:
        fail(f"unexpected {tokens[i][0]!r}")
    return result
