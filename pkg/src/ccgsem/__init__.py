"""CCG parsing with compositional logical forms built by lambda-term manipulation."""

from .category import Atomic, Bs, Cat, Fs, atomic_type, cat_eq, parse_cat, print_cat
from .chart import (
    Chart, ParserConfig, PendingConj, Reading, derivation_trace, parse, parse_readings,
    readings,
)
from .combinators import (
    BACKWARD, FORWARD, Edge, apply_rule, compose_rule, coordinate, phi_oracle,
    raise_rule, sem_apply, sem_compose, sem_raise,
)
from .lexicon import LexEntry, Lexicon, load_lexicon, lookup, read_lexicon, sample_lexicon
from .notation import parse_term, show_term
from .terms import (
    Abs, App, Const, Exists, Forall, FreshSource, Scoped, Term, Var, abstract_scoped,
    alpha_eq, beta_step, contains_scoped, fresh_scoped, normalize,
)

__all__ = [
    "Atomic",
    "Bs",
    "Cat",
    "Fs",
    "atomic_type",
    "cat_eq",
    "parse_cat",
    "print_cat",
    "Chart",
    "ParserConfig",
    "PendingConj",
    "Reading",
    "derivation_trace",
    "parse",
    "parse_readings",
    "readings",
    "BACKWARD",
    "FORWARD",
    "Edge",
    "apply_rule",
    "compose_rule",
    "coordinate",
    "phi_oracle",
    "raise_rule",
    "sem_apply",
    "sem_compose",
    "sem_raise",
    "LexEntry",
    "Lexicon",
    "load_lexicon",
    "lookup",
    "read_lexicon",
    "sample_lexicon",
    "parse_term",
    "show_term",
    "Abs",
    "App",
    "Const",
    "Exists",
    "Forall",
    "FreshSource",
    "Scoped",
    "Term",
    "Var",
    "abstract_scoped",
    "alpha_eq",
    "beta_step",
    "contains_scoped",
    "fresh_scoped",
    "normalize",
]

__version__ = "0.1.0"
