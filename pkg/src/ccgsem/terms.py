"""Logical-form terms: representation, beta-reduction and scoped constants.

Bound variables use de Bruijn indices (``Var(0)`` is the innermost binder),
so alpha-equivalence is plain structural equality and substitution never
captures.  ``Abs``, ``Forall`` and ``Exists`` share one binding mechanism;
the connectives ``&&``, ``>>`` and ``and'`` are ordinary constants.

A ``Scoped`` constant stands for the generic variable introduced when
descending under a binder.  ``abstract_scoped`` turns it back into a bound
variable, which is the only piece of higher-order unification coordination
needs.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Union

from .errors import FuelExhausted

DEFAULT_FUEL = 10_000

AND = "&&"
IMPLIES = ">>"
INFIX = (AND, IMPLIES)


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("constant name must be nonempty")


@dataclass(frozen=True, slots=True)
class Var:
    index: int


@dataclass(frozen=True, slots=True)
class Scoped:
    id: int


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Abs:
    body: "Term"


@dataclass(frozen=True, slots=True)
class Forall:
    body: "Term"


@dataclass(frozen=True, slots=True)
class Exists:
    body: "Term"


Term = Union[Const, Var, Scoped, App, Abs, Forall, Exists]
BINDERS = (Abs, Forall, Exists)


def apps(head: Term, *args: Term) -> Term:
    """Left-nested application ``head a1 ... an``."""
    for a in args:
        head = App(head, a)
    return head


def conj(a: Term, b: Term) -> Term:
    return apps(Const(AND), a, b)


def implies(a: Term, b: Term) -> Term:
    return apps(Const(IMPLIES), a, b)


def spine(t: Term) -> tuple[Term, list[Term]]:
    """Split an application chain into its head and argument list."""
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


# -- index manipulation -----------------------------------------------------

def shift(t: Term, d: int, cutoff: int = 0) -> Term:
    """Add ``d`` to every free index ``>= cutoff``."""
    if d == 0:
        return t
    if isinstance(t, Var):
        return Var(t.index + d) if t.index >= cutoff else t
    if isinstance(t, App):
        return App(shift(t.fun, d, cutoff), shift(t.arg, d, cutoff))
    if isinstance(t, BINDERS):
        return type(t)(shift(t.body, d, cutoff + 1))
    return t


def instantiate(body: Term, arg: Term, depth: int = 0) -> Term:
    """Substitute ``arg`` for index ``depth`` in ``body`` and drop that binder."""
    if isinstance(body, Var):
        if body.index == depth:
            return shift(arg, depth)
        if body.index > depth:
            return Var(body.index - 1)
        return body
    if isinstance(body, App):
        return App(instantiate(body.fun, arg, depth), instantiate(body.arg, arg, depth))
    if isinstance(body, BINDERS):
        return type(body)(instantiate(body.body, arg, depth + 1))
    return body


def free_indices(t: Term, depth: int = 0) -> set[int]:
    """Free de Bruijn indices of ``t``, relative to its top."""
    if isinstance(t, Var):
        return {t.index - depth} if t.index >= depth else set()
    if isinstance(t, App):
        return free_indices(t.fun, depth) | free_indices(t.arg, depth)
    if isinstance(t, BINDERS):
        return free_indices(t.body, depth + 1)
    return set()


def is_closed(t: Term) -> bool:
    return not free_indices(t)


# -- reduction --------------------------------------------------------------

def beta_step(t: Term) -> Optional[Term]:
    """Contract the leftmost-outermost redex, or return None if ``t`` is normal."""
    if isinstance(t, App):
        if isinstance(t.fun, Abs):
            return instantiate(t.fun.body, t.arg)
        f = beta_step(t.fun)
        if f is not None:
            return App(f, t.arg)
        a = beta_step(t.arg)
        if a is not None:
            return App(t.fun, a)
        return None
    if isinstance(t, BINDERS):
        b = beta_step(t.body)
        return None if b is None else type(t)(b)
    return None


def is_normal(t: Term) -> bool:
    if isinstance(t, App):
        return not isinstance(t.fun, Abs) and is_normal(t.fun) and is_normal(t.arg)
    if isinstance(t, BINDERS):
        return is_normal(t.body)
    return True


def normalize(t: Term, fuel: int = DEFAULT_FUEL) -> Term:
    """Full beta-normal form, reducing under binders.

    Raises FuelExhausted after ``fuel`` contractions.
    """
    for _ in range(fuel):
        nxt = beta_step(t)
        if nxt is None:
            return t
        t = nxt
    if is_normal(t):
        return t
    raise FuelExhausted(f"no beta-normal form within {fuel} steps")


def alpha_eq(t1: Term, t2: Term) -> bool:
    """Equality up to bound-variable naming (structural with nameless binders)."""
    return t1 == t2


def rename_constants(t: Term, mapping: Mapping[str, str]) -> Term:
    if isinstance(t, Const):
        return Const(mapping.get(t.name, t.name))
    if isinstance(t, App):
        return App(rename_constants(t.fun, mapping), rename_constants(t.arg, mapping))
    if isinstance(t, BINDERS):
        return type(t)(rename_constants(t.body, mapping))
    return t


def constants(t: Term) -> set[str]:
    if isinstance(t, Const):
        return {t.name}
    if isinstance(t, App):
        return constants(t.fun) | constants(t.arg)
    if isinstance(t, BINDERS):
        return constants(t.body)
    return set()


def infix_arity_ok(t: Term) -> bool:
    """True when every ``&&``/``>>`` occurrence has exactly two arguments."""
    head, args = spine(t)
    if isinstance(head, Const) and head.name in INFIX and len(args) != 2:
        return False
    if isinstance(head, BINDERS) and not infix_arity_ok(head.body):
        return False
    return all(infix_arity_ok(a) for a in args)


# -- scoped constants -------------------------------------------------------

class FreshSource:
    """Issues scoped constants with ids unique for the life of the source.

    Safe to share between threads.
    """

    def __init__(self):
        self._ids = itertools.count(1)
        self._lock = threading.Lock()

    def fresh(self) -> Scoped:
        with self._lock:
            return Scoped(next(self._ids))


def fresh_scoped(src: FreshSource) -> Scoped:
    return src.fresh()


def scoped_ids(t: Term) -> set[int]:
    if isinstance(t, Scoped):
        return {t.id}
    if isinstance(t, App):
        return scoped_ids(t.fun) | scoped_ids(t.arg)
    if isinstance(t, BINDERS):
        return scoped_ids(t.body)
    return set()


def contains_scoped(c: Union[int, Scoped], t: Term) -> bool:
    cid = c.id if isinstance(c, Scoped) else c
    return cid in scoped_ids(t)


def abstract_scoped(c: Union[int, Scoped], t: Term) -> Abs:
    """Rebuild ``lam x. t[x/c]``, replacing every occurrence of ``c``.

    Because every occurrence is replaced, the result can never mention ``c``.
    """
    cid = c.id if isinstance(c, Scoped) else c

    def go(u, depth):
        if isinstance(u, Scoped):
            return Var(depth) if u.id == cid else u
        if isinstance(u, App):
            return App(go(u.fun, depth), go(u.arg, depth))
        if isinstance(u, BINDERS):
            return type(u)(go(u.body, depth + 1))
        return u

    return Abs(go(shift(t, 1), 0))


def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, App):
        yield from subterms(t.fun)
        yield from subterms(t.arg)
    elif isinstance(t, BINDERS):
        yield from subterms(t.body)


def size(t: Term) -> int:
    return sum(1 for _ in subterms(t))
