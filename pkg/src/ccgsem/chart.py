"""Exhaustive CKY chart parsing with the combinatory rules.

The ternary coordination schema ``X conj X => X`` is split into two binary
steps: ``conj X`` builds a ``PendingConj`` and a left edge of the same
category consumes it.  Each cell keeps one representative edge per
(category, LF) pair; further derivations of the same pair are recorded but
not combined again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .category import CONJ, NP, S, Cat, print_cat
from .combinators import (
    BACKWARD, FORWARD, Edge, apply_rule, compose_rule, coordinate, raise_rule,
)
from .errors import CoordinationDepthError, UnknownWordError
from .lexicon import Lexicon
from .notation import show_term
from .terms import FreshSource, Term


@dataclass
class ParserConfig:
    raising_targets: list = field(default_factory=lambda: [S])
    raising_directions: tuple = (FORWARD, BACKWARD)
    allow_atomic_np_coordination: bool = True
    coord_depth_bound: Optional[int] = None
    max_readings: Optional[int] = None

    def __post_init__(self):
        if self.raising_directions and not self.raising_targets:
            raise ValueError("raising is enabled but no raising targets are given")


@dataclass
class PendingConj:
    """``conj X`` waiting for a left conjunct of category X."""
    conj: Edge
    right: Edge

    @property
    def conj_lf(self) -> Term:
        return self.conj.lf

    @property
    def span(self):
        return (self.conj.span[0], self.right.span[1])

    def edge(self) -> Edge:
        return Edge(self.span, self.right.cat, self.right.lf, "conj-right",
                    (self.conj, self.right))


@dataclass
class Reading:
    cat: Cat
    lf: Term
    derivations: list

    def __str__(self):
        return f"{print_cat(self.cat)} : {show_term(self.lf)}"


class Cell:
    def __init__(self):
        self._groups: dict = {}
        self.pending: dict = {}

    def add(self, edge: Edge) -> bool:
        """Record ``edge``; True if its (cat, LF) pair is new to the cell."""
        group = self._groups.get(edge.key())
        if group is None:
            self._groups[edge.key()] = [edge]
            return True
        group.append(edge)
        return False

    def edges(self) -> list[Edge]:
        return [g[0] for g in self._groups.values()]

    def derivations(self, key) -> list[Edge]:
        return list(self._groups.get(key, ()))

    def __len__(self):
        return len(self._groups)


class Chart:
    def __init__(self, tokens: Sequence[str]):
        self.tokens = list(tokens)
        n = len(self.tokens)
        self.cells = {(i, j): Cell() for i in range(n) for j in range(i + 1, n + 1)}

    def __getitem__(self, span) -> Cell:
        return self.cells[span]

    @property
    def full_span(self):
        return (0, len(self.tokens))

    def all_edges(self) -> Iterable[Edge]:
        for cell in self.cells.values():
            yield from cell.edges()


def _raise_all(cell: Cell, edges, cfg: ParserConfig):
    for e in edges:
        if e.cat != NP:
            continue
        for target in cfg.raising_targets:
            for direction in cfg.raising_directions:
                raised = raise_rule(direction, e, target)
                if raised is not None:
                    cell.add(raised)


def _coordinate_edge(left: Edge, pending: PendingConj, src, cfg) -> Optional[Edge]:
    cat = left.cat
    if cat != pending.right.cat or cat == CONJ:
        return None
    if cat == NP and not cfg.allow_atomic_np_coordination:
        return None
    try:
        lf = coordinate(cat, pending.conj_lf, left.lf, pending.right.lf, src,
                        cfg.coord_depth_bound)
    except CoordinationDepthError:
        return None
    return Edge((left.span[0], pending.span[1]), cat, lf, "coord", (left, pending.edge()))


def parse(lex: Lexicon, tokens: Sequence[str], cfg: Optional[ParserConfig] = None) -> Chart:
    cfg = cfg or ParserConfig()
    tokens = [t.lower() for t in tokens]
    if not tokens:
        raise ValueError("cannot parse an empty token sequence")
    unknown = [t for t in tokens if not lex.lookup(t)]
    if unknown:
        raise UnknownWordError(unknown)

    chart = Chart(tokens)
    src = FreshSource()
    n = len(tokens)
    for i, word in enumerate(tokens):
        cell = chart[i, i + 1]
        for entry in lex.lookup(word):
            cell.add(Edge((i, i + 1), entry.cat, entry.lf, "lex", word=word))
        _raise_all(cell, cell.edges(), cfg)

    for length in range(2, n + 1):
        for start in range(n - length + 1):
            end = start + length
            cell = chart[start, end]
            for mid in range(start + 1, end):
                lefts = chart[start, mid].edges()
                rights = chart[mid, end].edges()
                for l in lefts:
                    for r in rights:
                        for rule in (apply_rule, compose_rule):
                            for direction in (FORWARD, BACKWARD):
                                e = rule(direction, l, r)
                                if e is not None:
                                    cell.add(e)
                        if l.cat == CONJ and r.cat != CONJ:
                            p = PendingConj(l, r)
                            cell.pending.setdefault((l.lf, r.cat, r.lf), p)
                    for p in chart[mid, end].pending.values():
                        e = _coordinate_edge(l, p, src, cfg)
                        if e is not None:
                            cell.add(e)
            _raise_all(cell, cell.edges(), cfg)
    return chart


def readings(chart: Chart, target: Cat, max_readings: Optional[int] = None) -> list[Reading]:
    """Full-span analyses of category ``target``, one per distinct LF."""
    cell = chart[chart.full_span]
    out = []
    for e in cell.edges():
        if e.cat == target:
            out.append(Reading(e.cat, e.lf, cell.derivations(e.key())))
            if max_readings is not None and len(out) >= max_readings:
                break
    return out


def parse_readings(lex: Lexicon, tokens: Sequence[str], target: Cat = S,
                   cfg: Optional[ParserConfig] = None) -> list[Reading]:
    cfg = cfg or ParserConfig()
    return readings(parse(lex, tokens, cfg), target, cfg.max_readings)


def derivation_trace(e: Edge, indent: int = 0) -> str:
    """Indented derivation tree, one line per edge."""
    lines = []

    def walk(edge, depth):
        label = edge.rule if edge.word is None else f'{edge.rule} "{edge.word}"'
        lines.append(f"{'  ' * depth}[{edge.span[0]},{edge.span[1]}) {label}  "
                     f"{print_cat(edge.cat)} : {show_term(edge.lf)}")
        for child in edge.children:
            walk(child, depth + 1)

    walk(e, indent)
    return "\n".join(lines)


def replay(e: Edge) -> Optional[Edge]:
    """Recompute a non-lexical edge from its children, for soundness checks."""
    if e.rule in (">app", "<app"):
        return apply_rule(FORWARD if e.rule[0] == ">" else BACKWARD, *e.children)
    if e.rule in (">B", "<B"):
        return compose_rule(FORWARD if e.rule[0] == ">" else BACKWARD, *e.children)
    if e.rule in (">T", "<T"):
        target = e.cat.result
        return raise_rule(FORWARD if e.rule[0] == ">" else BACKWARD, e.children[0], target)
    if e.rule == "coord":
        left, cr = e.children
        conj, right = cr.children
        lf = coordinate(e.cat, conj.lf, left.lf, right.lf, FreshSource())
        return Edge(e.span, e.cat, lf, "coord", e.children)
    if e.rule == "conj-right":
        return PendingConj(*e.children).edge()
    return None
