"""Combinatory rules, their semantics, and generalized coordination.

Every rule pairs a category operation with an LF operation; the LF stored on
an ``Edge`` is always beta-normal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .category import NP, Bs, Cat, Fs, atomic_type
from .errors import ArityMismatch, CoordinationDepthError, RuleInapplicable
from .terms import (
    Abs, App, FreshSource, Term, Var, abstract_scoped, apps, normalize, shift,
)

FORWARD = "forward"
BACKWARD = "backward"

RULE_LABELS = ("lex", ">app", "<app", ">B", "<B", ">T", "<T", "coord", "conj-right")


@dataclass(eq=False)
class Edge:
    span: tuple[int, int]
    cat: Cat
    lf: Term
    rule: str
    children: tuple["Edge", ...] = field(default=())
    word: Optional[str] = None

    def key(self):
        return (self.cat, self.lf)


def _join(left: Edge, right: Edge) -> tuple[int, int]:
    if left.span[1] != right.span[0]:
        raise ValueError(f"edges {left.span} and {right.span} are not adjacent")
    return (left.span[0], right.span[1])


def _require_abs(t, what):
    if not isinstance(t, Abs):
        raise RuleInapplicable(f"{what} is not an abstraction")


# -- semantics --------------------------------------------------------------

def sem_apply(f: Term, a: Term) -> Term:
    f = normalize(f)
    _require_abs(f, "functor")
    return normalize(App(f, a))


def sem_compose(f: Term, g: Term) -> Term:
    """``lam x. f (g x)``, normalized."""
    f, g = normalize(f), normalize(g)
    _require_abs(f, "left functor")
    _require_abs(g, "right functor")
    return normalize(Abs(App(shift(f, 1), App(shift(g, 1), Var(0)))))


def sem_raise(t: Term) -> Term:
    """``lam p. p t``."""
    return Abs(App(Var(0), shift(t, 1)))


# -- syntactic rules --------------------------------------------------------

def apply_rule(direction: str, left: Edge, right: Edge) -> Optional[Edge]:
    span = _join(left, right)
    if direction == FORWARD:
        c = left.cat
        if isinstance(c, Fs) and c.arg == right.cat:
            return Edge(span, c.result, sem_apply(left.lf, right.lf), ">app", (left, right))
        return None
    c = right.cat
    if isinstance(c, Bs) and c.arg == left.cat:
        return Edge(span, c.result, sem_apply(right.lf, left.lf), "<app", (left, right))
    return None


def compose_rule(direction: str, left: Edge, right: Edge) -> Optional[Edge]:
    span = _join(left, right)
    lc, rc = left.cat, right.cat
    if direction == FORWARD:
        # X/Y  Y/Z  =>  X/Z
        if isinstance(lc, Fs) and isinstance(rc, Fs) and lc.arg == rc.result:
            return Edge(span, Fs(rc.arg, lc.result), sem_compose(left.lf, right.lf),
                        ">B", (left, right))
        return None
    # Y\Z  X\Y  =>  X\Z
    if isinstance(lc, Bs) and isinstance(rc, Bs) and rc.arg == lc.result:
        return Edge(span, Bs(lc.arg, rc.result), sem_compose(right.lf, left.lf),
                    "<B", (left, right))
    return None


def raise_rule(direction: str, e: Edge, target: Cat) -> Optional[Edge]:
    if e.cat != NP:
        return None
    if direction == FORWARD:
        cat, label = Fs(Bs(NP, target), target), ">T"
    else:
        cat, label = Bs(Fs(NP, target), target), "<T"
    return Edge(e.span, cat, sem_raise(e.lf), label, (e,))


# -- coordination -----------------------------------------------------------

def coordinate(cat: Cat, conj_lf: Term, left_lf: Term, right_lf: Term,
               src: FreshSource, depth_bound: Optional[int] = None) -> Term:
    """Conjoin two LFs of category ``cat`` pointwise under all its arguments.

    For a slash category both LFs are applied to a fresh scoped constant,
    coordinated at the result category, and the constant is abstracted back
    out.  At an atomic category the result is ``conj_lf left right``.
    """
    if atomic_type(cat):
        return normalize(apps(conj_lf, left_lf, right_lf))
    if depth_bound is not None and depth_bound <= 0:
        raise CoordinationDepthError(f"coordination of {cat} exceeds the depth bound")
    if not (isinstance(left_lf, Abs) and isinstance(right_lf, Abs)):
        raise ArityMismatch(f"functional category {cat} with a non-abstraction LF")
    c = src.fresh()
    inner = coordinate(
        cat.result, conj_lf,
        normalize(App(left_lf, c)), normalize(App(right_lf, c)),
        src, None if depth_bound is None else depth_bound - 1,
    )
    return abstract_scoped(c, inner)


def phi_oracle(n: int, f: Term, g: Term, h: Term) -> Term:
    """``lam x1..xn. f (g x1..xn) (h x1..xn)`` built directly, then normalized.

    Independent of the scoped-constant machinery; used to check ``coordinate``.
    """
    xs = [Var(n - 1 - i) for i in range(n)]
    body = apps(shift(f, n), apps(shift(g, n), *xs), apps(shift(h, n), *xs))
    for _ in range(n):
        body = Abs(body)
    return normalize(body)
