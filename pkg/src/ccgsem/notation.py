"""Text syntax for logical forms.

::

    term   ::= binder | impl
    binder ::= ('lam' | 'forall' | 'exists') IDENT '.' term
    impl   ::= conj ['>>' (binder | impl)]
    conj   ::= chain ['&&' (binder | conj)]
    chain  ::= atom+ [binder]
    atom   ::= IDENT | '#' INT | '(' term ')' | '(&&)' | '(>>)'

Application binds tighter than ``&&``, which binds tighter than ``>>``; both
connectives associate to the right.  An identifier bound by an enclosing
binder is a variable, any other identifier is a constant.  ``#n`` is the
scoped constant with id ``n`` and never appears in finished readings.

The printer names binders by depth (``x``, ``x1``, ``x2``, ...), skipping any
name that clashes with a constant of the term, so printed output reparses to
an alpha-equal term.
"""

import re

from .errors import TermSyntaxError
from .terms import (
    BINDERS, INFIX, Abs, App, Const, Exists, Forall, Scoped, Var, constants, spine,
)

KEYWORDS = {"lam": Abs, "forall": Forall, "exists": Exists}
_BINDER_WORD = {Abs: "lam", Forall: "forall", Exists: "exists"}

_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*'*)|#(?P<scoped>\d+)"
    r"|(?P<op>&&|>>)|(?P<punct>[().]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise TermSyntaxError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "ident" and value in KEYWORDS:
            kind = "kw"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.bound = []

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise TermSyntaxError(message, self.text, tok[2])

    def expect(self, value):
        tok = self.peek()
        if tok[1] != value or tok[0] == "ident":
            self.fail(f"expected {value!r}, found {tok[1] or 'end of input'!r}")
        return self.advance()

    def term(self):
        if self.peek()[0] == "kw":
            return self.binder()
        return self.impl()

    def binder(self):
        _, word, _ = self.advance()
        tok = self.peek()
        if tok[0] != "ident":
            self.fail("expected a variable name after " + repr(word))
        self.advance()
        self.expect(".")
        self.bound.append(tok[1])
        try:
            body = self.term()
        finally:
            self.bound.pop()
        return KEYWORDS[word](body)

    def _operand(self, inner):
        return self.binder() if self.peek()[0] == "kw" else inner()

    def impl(self):
        left = self.conj()
        if self.peek()[1] == ">>" and self.peek()[0] == "op":
            self.advance()
            right = self._operand(self.impl)
            return App(App(Const(">>"), left), right)
        return left

    def conj(self):
        left = self.chain()
        if self.peek()[1] == "&&" and self.peek()[0] == "op":
            self.advance()
            right = self._operand(self.conj)
            return App(App(Const("&&"), left), right)
        return left

    def starts_atom(self):
        kind, value, _ = self.peek()
        return kind in ("ident", "scoped") or (kind == "punct" and value == "(")

    def chain(self):
        if not self.starts_atom():
            self.fail(f"expected a term, found {self.peek()[1] or 'end of input'!r}")
        t = self.atom()
        while self.starts_atom():
            t = App(t, self.atom())
        if self.peek()[0] == "kw":
            t = App(t, self.binder())
        return t

    def atom(self):
        kind, value, _ = self.advance()
        if kind == "ident":
            for depth, name in enumerate(reversed(self.bound)):
                if name == value:
                    return Var(depth)
            return Const(value)
        if kind == "scoped":
            return Scoped(int(value))
        # '('
        nxt = self.peek()
        if nxt[0] == "op" and self.peek(1)[1] == ")":
            self.advance()
            self.advance()
            return Const(nxt[1])
        t = self.term()
        self.expect(")")
        return t


def parse_term(text: str):
    """Parse LF text into a Term; raises TermSyntaxError with a position."""
    p = _Parser(text)
    t = p.term()
    if p.peek()[0] != "eof":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return t


# -- printing ---------------------------------------------------------------

def _name_supply(avoid):
    k = 0
    while True:
        name = "x" if k == 0 else f"x{k}"
        if name not in avoid and name not in KEYWORDS:
            yield name
        k += 1


def _is_infix(t):
    head, args = spine(t)
    return isinstance(head, Const) and head.name in INFIX and len(args) == 2


def _is_atom(t):
    return isinstance(t, (Const, Var, Scoped))


class _Printer:
    def __init__(self, t):
        supply = _name_supply(constants(t))
        self.names = []
        self._supply = supply

    def name_at(self, depth):
        while len(self.names) <= depth:
            self.names.append(next(self._supply))
        return self.names[depth]

    def show(self, t, env):
        if isinstance(t, Const):
            return f"({t.name})" if t.name in INFIX else t.name
        if isinstance(t, Var):
            if t.index >= len(env):
                return f"<free {t.index - len(env)}>"
            return env[-1 - t.index]
        if isinstance(t, Scoped):
            return f"#{t.id}"
        if isinstance(t, BINDERS):
            name = self.name_at(len(env))
            body = t.body
            inner = self.show(body, env + [name])
            if isinstance(body, App):
                inner = f"({inner})"
            return f"{_BINDER_WORD[type(t)]} {name}. {inner}"
        if _is_infix(t):
            head, (left, right) = spine(t)
            ls = self.show(left, env)
            if not _is_atom(left):
                ls = f"({ls})"
            rs = self.show(right, env)
            if not (_is_atom(right) or isinstance(right, BINDERS)):
                rs = f"({rs})"
            return f"{ls} {head.name} {rs}"
        head, args = spine(t)
        parts = [self.show(head, env)]
        if isinstance(head, BINDERS):
            parts[0] = f"({parts[0]})"
        for a in args:
            s = self.show(a, env)
            parts.append(s if _is_atom(a) else f"({s})")
        return " ".join(parts)


def show_term(t) -> str:
    """Canonical text for a Term; parse_term(show_term(t)) == t for closed t."""
    return _Printer(t).show(t, [])
