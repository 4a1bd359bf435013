import itertools

import pytest

from ccgsem.category import NP, S, Bs, parse_cat
from ccgsem.combinators import (
    BACKWARD, FORWARD, Edge, apply_rule, compose_rule, coordinate, phi_oracle, raise_rule,
    sem_apply, sem_compose, sem_raise,
)
from ccgsem.errors import ArityMismatch, CoordinationDepthError, RuleInapplicable
from ccgsem.lexicon import sample_lexicon
from ccgsem.notation import parse_term as T
from ccgsem.notation import show_term
from ccgsem.terms import Const, FreshSource, scoped_ids

AND = Const("and'")
LIKE = T("lam o. lam s. (like' s o)")
HATE = T("lam o. lam s. (hate' s o)")


def lex_edge(i, word, entry=0):
    e = sample_lexicon().lookup(word)[entry]
    return Edge((i, i + 1), e.cat, e.lf, "lex", word=word)


def edge(span, cat, lf):
    return Edge(span, parse_cat(cat), T(lf), "lex")


# -- semantic operations ----------------------------------------------------

def test_sem_apply_walked():
    assert sem_apply(T("lam sub. (walked' sub)"), T("harry'")) == T("walked' harry'")


def test_sem_apply_identity():
    assert sem_apply(T("lam x. x"), T("john'")) == T("john'")


def test_sem_apply_coordinated_subject():
    f = T("lam p. (and' (p john') (p bill'))")
    assert sem_apply(f, T("lam s. (run' s)")) == T("and' (run' john') (run' bill')")


def test_sem_apply_rejects_non_abstraction():
    with pytest.raises(RuleInapplicable):
        sem_apply(T("run'"), T("john'"))


def test_sem_compose_harry_found():
    got = sem_compose(T("lam p. (p harry')"), T("lam obj. lam sub. (found' sub obj)"))
    assert got == T("lam x. (found' harry' x)")


def test_sem_compose_left_identity():
    assert sem_compose(T("lam x. x"), T("lam y. (run' y)")) == T("lam y. (run' y)")


def test_sem_compose_constant_chain():
    assert sem_compose(T("lam s. (f' s)"), T("lam s. (g' s)")) == T("lam x. (f' (g' x))")


def test_sem_compose_rejects_non_abstraction():
    with pytest.raises(RuleInapplicable):
        sem_compose(T("lam x. x"), T("g'"))


@pytest.mark.parametrize("name", ["john'", "harry'", "bill'"])
def test_sem_raise(name):
    assert sem_raise(Const(name)) == T(f"lam p. (p {name})")


# -- syntactic rules --------------------------------------------------------

def test_apply_forward_extends_harry_found():
    left = edge((0, 2), "s/np", "lam x. (found' harry' x)")
    right = edge((2, 3), "np", "bread'")
    e = apply_rule(FORWARD, left, right)
    assert e.cat == S and e.span == (0, 3) and e.rule == ">app"
    assert e.lf == T("found' harry' bread'")


def test_apply_backward_walked():
    e = apply_rule(BACKWARD, lex_edge(0, "harry"), edge((1, 2), "s\\np", "lam s. (walked' s)"))
    assert e.cat == S and e.lf == T("walked' harry'") and e.rule == "<app"


def test_apply_category_mismatch():
    assert apply_rule(FORWARD, lex_edge(0, "run"), lex_edge(1, "run")) is None


def test_apply_requires_adjacency():
    with pytest.raises(ValueError):
        apply_rule(FORWARD, lex_edge(0, "run"), lex_edge(2, "run"))


def test_compose_forward_harry_found():
    raised = raise_rule(FORWARD, lex_edge(0, "harry"), S)
    e = compose_rule(FORWARD, raised, lex_edge(1, "found"))
    assert e.cat == parse_cat("s/np") and e.rule == ">B"
    assert e.lf == T("lam x. (found' harry' x)")


def test_compose_backward_argument_cluster():
    every_dog = edge((2, 4), "((s\\np)/np)\\(((s\\np)/np)/np)",
                     "lam v. lam t. lam s. forall y. ((dog' y) >> (v y t s))")
    a_bone = edge((4, 6), "(s\\np)\\((s\\np)/np)",
                  "lam w. lam s. exists y. ((bone' y) && (w y s))")
    e = compose_rule(BACKWARD, every_dog, a_bone)
    assert e.cat == parse_cat("(s\\np)\\(((s\\np)/np)/np)") and e.rule == "<B"
    assert e.lf == T("lam v. lam sub. exists x. ((bone' x) && forall x1. "
                     "((dog' x1) >> (v x1 x sub)))")


def test_compose_atoms():
    assert compose_rule(FORWARD, lex_edge(0, "john"), lex_edge(1, "bill")) is None
    assert compose_rule(BACKWARD, lex_edge(0, "john"), lex_edge(1, "bill")) is None


def test_raise_forward():
    e = raise_rule(FORWARD, lex_edge(0, "john"), S)
    assert e.cat == parse_cat("s/(s\\np)") and e.lf == T("lam p. (p john')") and e.rule == ">T"


def test_raise_backward():
    e = raise_rule(BACKWARD, lex_edge(0, "harry"), S)
    assert e.cat == parse_cat("s\\(s/np)") and e.lf == T("lam p. (p harry')") and e.rule == "<T"


def test_raise_only_np():
    assert raise_rule(FORWARD, lex_edge(0, "run"), S) is None


# -- coordination -----------------------------------------------------------

def test_coordinate_raised_subjects():
    got = coordinate(parse_cat("s/(s\\np)"), AND, T("lam p. (p john')"), T("lam p. (p bill')"),
                     FreshSource())
    assert got == T("lam x. (and' (x john') (x bill'))")


def test_coordinate_transitive_verbs():
    got = coordinate(parse_cat("(s\\np)/np"), AND, LIKE, HATE, FreshSource())
    assert show_term(got) == "lam x. lam x1. (and' (like' x1 x) (hate' x1 x))"


def test_coordinate_atomic():
    got = coordinate(S, AND, T("run' john'"), T("run' bill'"), FreshSource())
    assert got == T("and' (run' john') (run' bill')")


def test_coordinate_custom_connective():
    got = coordinate(Bs(NP, S), Const("or'"), T("lam s. (run' s)"), T("lam s. (talk' s)"),
                     FreshSource())
    assert got == T("lam x. (or' (run' x) (talk' x))")


def test_coordinate_arity_mismatch():
    with pytest.raises(ArityMismatch):
        coordinate(Bs(NP, S), AND, T("run'"), T("lam s. (talk' s)"), FreshSource())


def test_coordinate_depth_bound():
    tv = parse_cat("(s\\np)/np")
    with pytest.raises(CoordinationDepthError):
        coordinate(tv, AND, LIKE, HATE, FreshSource(), depth_bound=1)
    assert coordinate(tv, AND, LIKE, HATE, FreshSource(), depth_bound=2) == \
        coordinate(tv, AND, LIKE, HATE, FreshSource())


def test_coordinate_issues_fresh_constants_without_escape():
    src = FreshSource()
    got = coordinate(parse_cat("(s\\np)/np"), AND, LIKE, HATE, src)
    issued = range(1, src.fresh().id)
    assert len(issued) == 2
    assert not scoped_ids(got) & set(issued)


# -- phi oracle -------------------------------------------------------------

F = T("lam x. lam y. (and' x y)")


def test_phi_unary():
    got = phi_oracle(1, F, T("lam p. (p john')"), T("lam p. (p bill')"))
    assert got == T("lam x. (and' (x john') (x bill'))")


def test_phi_nullary():
    assert phi_oracle(0, F, T("g'"), T("h'")) == T("and' g' h'")


def test_phi_binary_matches_coordinate():
    assert phi_oracle(2, F, LIKE, HATE) == \
        coordinate(parse_cat("(s\\np)/np"), AND, LIKE, HATE, FreshSource())


# -- directionality ---------------------------------------------------------

def test_rule_directions_disjoint():
    lex = sample_lexicon()
    edges = [Edge((0, 1), e.cat, e.lf, "lex") for e in lex]
    edges += [raise_rule(d, e, S) for e in edges if e.cat == NP for d in (FORWARD, BACKWARD)]
    for l, r in itertools.product(edges, repeat=2):
        r = Edge((1, 2), r.cat, r.lf, r.rule)
        for rule in (apply_rule, compose_rule):
            fwd, bwd = rule(FORWARD, l, r), rule(BACKWARD, l, r)
            assert fwd is None or bwd is None
